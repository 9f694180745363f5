"""Conjugacy class data computed by exhaustive enumeration.

A ClassTable lists every conjugacy class of a group with its size, the
order of its elements, and the centralizer order.  Classes are sorted by
(element order, size, least member row), so indices are stable across
runs and backends.  All construction goes through the element cap; the
caller sees a CapacityError rather than an attempt to enumerate a group
that is too large.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .config import Caps, default_caps
from .errors import PreconditionError
from .kernels import kernel
from .perms import Permutation, PermutationGroup, Subgroup


def prime_factors(n: int) -> Tuple[int, ...]:
    """Distinct prime divisors of n in increasing order."""
    if n < 1:
        raise PreconditionError("prime_factors needs n >= 1, got %d" % n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def p_prime_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def pi_part(n: int, pi: Sequence[int]) -> int:
    out = 1
    for p in pi:
        out *= p_part(n, p)
    return out


def pi_prime_part(n: int, pi: Sequence[int]) -> int:
    for p in pi:
        n = p_prime_part(n, p)
    return n


def is_power_of(n: int, p: int) -> bool:
    if n < 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1


class ClassInfo:
    """One conjugacy class: representative, size, orders."""

    __slots__ = ("index", "rep_row", "size", "element_order", "centralizer_order")

    def __init__(self, index: int, rep_row: bytes, size: int, element_order: int, centralizer_order: int):
        self.index = index
        self.rep_row = rep_row
        self.size = size
        self.element_order = element_order
        self.centralizer_order = centralizer_order

    def representative(self, degree: int) -> Permutation:
        return Permutation(kernel.unpack(self.rep_row)[:degree])

    def __repr__(self) -> str:
        return "ClassInfo(index=%d, order=%d, size=%d)" % (
            self.index,
            self.element_order,
            self.size,
        )


class ClassTable:
    """All conjugacy classes of a permutation group."""

    def __init__(self, group, caps: Optional[Caps] = None):
        if isinstance(group, Subgroup):
            group = group.group
        if not isinstance(group, PermutationGroup):
            raise PreconditionError("ClassTable needs a permutation group")
        caps = caps or default_caps()
        self.group = group
        rows = group.element_rows(caps.elements)
        gen_rows = [kernel.pack(g.images) for g in group.generators]
        cids = kernel.conjugacy_partition(rows, gen_rows)
        nclasses = max(cids) + 1 if cids else 0
        sizes = [0] * nclasses
        reps: List[Optional[bytes]] = [None] * nclasses
        for row, cid in zip(rows, cids):
            sizes[cid] += 1
            if reps[cid] is None:
                reps[cid] = row
        order = group.order
        raw = []
        for cid in range(nclasses):
            rep = reps[cid]
            size = sizes[cid]
            if order % size:
                raise PreconditionError("class size %d does not divide order %d" % (size, order))
            raw.append((kernel.order_of(rep), size, rep, cid))
        raw.sort(key=lambda t: (t[0], t[1], t[2]))
        self.classes: Tuple[ClassInfo, ...] = tuple(
            ClassInfo(i, rep, size, elt_order, order // size)
            for i, (elt_order, size, rep, _) in enumerate(raw)
        )
        remap = [0] * nclasses
        for new_index, (_, _, _, cid) in enumerate(raw):
            remap[cid] = new_index
        self._rows = rows
        self._cids = cids
        self._remap = remap

    @property
    def order(self) -> int:
        return self.group.order

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, perm: Permutation) -> ClassInfo:
        """The class containing perm; perm must belong to the group."""
        row = kernel.pack(perm.images)
        lo, hi = 0, len(self._rows)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._rows[mid] < row:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(self._rows) or self._rows[lo] != row:
            raise PreconditionError("element is not in the group")
        return self.classes[self._remap[self._cids[lo]]]

    def p_element_classes(self, p: int) -> Tuple[ClassInfo, ...]:
        """Classes of nontrivial elements whose order is a power of p."""
        if p < 2 or prime_factors(p) != (p,):
            raise PreconditionError("p must be a prime, got %r" % (p,))
        return tuple(
            ci
            for ci in self.classes
            if ci.element_order > 1 and is_power_of(ci.element_order, p)
        )

    def element_order_set(self) -> Tuple[int, ...]:
        return tuple(sorted({ci.element_order for ci in self.classes}))

    def size_check(self) -> bool:
        """Class sizes sum to the group order."""
        return sum(ci.size for ci in self.classes) == self.group.order


def class_table(group, caps: Optional[Caps] = None) -> ClassTable:
    return ClassTable(group, caps)
