"""Exception taxonomy shared across the package.

Three kinds of failure are kept apart on purpose: inputs that do not
describe a valid object at all, contract violations between callers and
operations, and work that would exceed a configured cap.  Callers that
want to retry with a bigger cap can catch CapacityError specifically.
"""


class HallmarkError(Exception):
    """Base class for every error raised by this package."""


class MalformedInputError(HallmarkError):
    """The input does not describe a valid object (bad permutation, bad file)."""


class PreconditionError(HallmarkError):
    """An operation contract was violated (non-member element, non-normal subgroup)."""


class CapacityError(HallmarkError):
    """A configured cap would be exceeded.  Carries the cap's name and value."""

    def __init__(self, message: str, *, cap_name: str, cap_value: int):
        super().__init__(message)
        self.cap_name = cap_name
        self.cap_value = cap_value


class TableError(MalformedInputError):
    """A character table file failed validation."""


class TableSchemaError(TableError):
    """The file does not match the documented table schema."""


class TableSumError(TableError):
    """Class sizes do not sum to the stated group order."""


class TableOrthogonalityError(TableError):
    """An exact orthogonality relation failed."""


class TableCorruptError(TableError):
    """Schema-valid values that are not internally consistent."""
