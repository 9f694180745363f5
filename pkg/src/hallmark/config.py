"""Runtime caps.

Every bound that stops a computation from running away lives here, so the
CLI, the test-suite and library callers tune the same knobs.  The element
cap can also be set through the HALLMARK_CAP_ELEMENTS environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

# Permutations above this degree are rejected at construction.
DEGREE_CAP = 1024


@dataclass(frozen=True)
class Caps:
    # full element enumeration of one group
    elements: int = 5_000_000
    # number of cosets in a coset action
    quotient_degree: int = 10_000
    # size of a full Sylow conjugation orbit
    sylow_conjugates: int = 50_000
    # |G| bound for the exhaustive Hall subgroup search
    subgroup_search_order: int = 100_000
    # elements materialized across all closures of one Hall search
    hall_candidates: int = 5_000_000


def default_caps() -> Caps:
    raw = os.environ.get("HALLMARK_CAP_ELEMENTS")
    if raw:
        return Caps(elements=int(raw))
    return Caps()
