"""Exact criteria for nilpotent and abelian Hall subgroups.

Class-size and character-table conditions on one side, brute-force
permutation-group oracles on the other; the package exists to run both
and compare.  Everything is exact integer arithmetic, no floats.
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("hallmark")
except PackageNotFoundError:
    # running from a source tree without installation
    __version__ = "0.0.0"

from .catalog import build, entries, load_group_file
from .chartab import (
    block_partition,
    load_table,
    parse_table,
    table_criterion_b,
    table_criterion_c,
)
from .classdata import ClassTable, class_table
from .criteria import (
    check_group,
    check_theorem_a,
    check_theorem_b,
    check_theorem_c,
)
from .errors import (
    CapacityError,
    HallmarkError,
    MalformedInputError,
    PreconditionError,
    TableError,
)
from .lieorders import class_size_sl, group_order, run_grid, verify_pair
from .perms import Permutation, PermutationGroup
from .subgroups import hall_subgroup, nilpotent_hall, sylow

__all__ = [
    "CapacityError",
    "ClassTable",
    "HallmarkError",
    "MalformedInputError",
    "Permutation",
    "PermutationGroup",
    "PreconditionError",
    "TableError",
    "__version__",
    "block_partition",
    "build",
    "check_group",
    "check_theorem_a",
    "check_theorem_b",
    "check_theorem_c",
    "class_size_sl",
    "class_table",
    "entries",
    "group_order",
    "hall_subgroup",
    "load_group_file",
    "load_table",
    "nilpotent_hall",
    "parse_table",
    "run_grid",
    "sylow",
    "table_criterion_b",
    "table_criterion_c",
    "verify_pair",
]
