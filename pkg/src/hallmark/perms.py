"""Deterministic permutation-group engine.

Groups are given by generators acting on {0, ..., degree-1}.  A strong
generating set relative to a fixed base is built once, with no
randomisation (base points are the smallest non-fixed points), and
membership, exact order, element enumeration, coset actions and normal
closures are all derived from it.  Equal inputs always produce equal
outputs, byte for byte.
"""

from __future__ import annotations

import threading
from math import lcm
from typing import Iterable, Sequence

from .config import DEGREE_CAP, default_caps
from .errors import CapacityError, MalformedInputError, PreconditionError
from .kernels import kernel


def _compose(a: tuple, b: tuple) -> tuple:
    """Image tuple of `apply a, then b`."""
    return tuple(b[i] for i in a)


def _inverse(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


class Permutation:
    """A permutation of {0..degree-1}, stored as its tuple of images.

    Products read left to right: (p * q)(i) == q(p(i)).
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        if n > DEGREE_CAP:
            raise CapacityError(
                f"degree {n} exceeds the supported maximum {DEGREE_CAP}",
                cap_name="degree",
                cap_value=DEGREE_CAP,
            )
        seen = bytearray(n)
        for pos, v in enumerate(imgs):
            if not isinstance(v, int) or isinstance(v, bool):
                raise MalformedInputError(f"image at position {pos} is not an integer")
            if v < 0 or v >= n:
                raise MalformedInputError(
                    f"image {v} at position {pos} is outside 0..{n - 1}"
                )
            if seen[v]:
                raise MalformedInputError(f"duplicate image {v} at position {pos}")
            seen[v] = 1
        self.images = imgs
        self._hash = hash(imgs)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        imgs = list(range(degree))
        for cyc in cycles:
            for pos, pt in enumerate(cyc):
                if not 0 <= pt < degree:
                    raise MalformedInputError(f"cycle point {pt} outside 0..{degree - 1}")
                imgs[pt] = cyc[(pos + 1) % len(cyc)]
        return cls(imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise MalformedInputError("cannot compose permutations of different degrees")
        p = Permutation.__new__(Permutation)
        p.images = _compose(self.images, other.images)
        p._hash = hash(p.images)
        return p

    def inverse(self) -> "Permutation":
        p = Permutation.__new__(Permutation)
        p.images = _inverse(self.images)
        p._hash = hash(p.images)
        return p

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def order(self) -> int:
        result = 1
        for cyc in self.cycles():
            result = lcm(result, len(cyc))
        return result

    def cycles(self) -> list:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = bytearray(self.degree)
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = 1
                continue
            cyc = []
            p = start
            while not seen[p]:
                seen[p] = 1
                cyc.append(p)
                p = self.images[p]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


class _Level:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base: int):
        self.base = base
        self.gens: list = []
        self.transversal: dict = {}


def _rebuild_orbit(level: _Level, degree: int) -> None:
    ident = tuple(range(degree))
    level.transversal = {level.base: ident}
    queue = [level.base]
    head = 0
    while head < len(queue):
        beta = queue[head]
        head += 1
        u = level.transversal[beta]
        for s in level.gens:
            gamma = s[beta]
            if gamma not in level.transversal:
                level.transversal[gamma] = _compose(u, s)
                queue.append(gamma)


class PermutationGroup:
    """A finite permutation group with a deterministic stabilizer chain."""

    def __init__(self, degree: int, generators: Iterable):
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            gens.append(g)
        if degree == 0 and gens:
            raise MalformedInputError("degree 0 admits no generators")
        if degree > DEGREE_CAP:
            raise CapacityError(
                f"degree {degree} exceeds the supported maximum {DEGREE_CAP}",
                cap_name="degree",
                cap_value=DEGREE_CAP,
            )
        for g in gens:
            if g.degree != degree:
                raise MalformedInputError(
                    f"generator degree {g.degree} does not match group degree {degree}"
                )
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity)
        self._levels: list[_Level] = []
        self._strong: list[tuple] = []
        self._build_chain()
        self.order = 1
        for lvl in self._levels:
            self.order *= len(lvl.transversal)
        self._lock = threading.Lock()
        self._rows: list | None = None
        self._cache: dict = {}

    # -- stabilizer chain ------------------------------------------------

    def _sift_tuple(self, g: tuple, start: int = 0):
        """Reduce g through levels start.., returning (residue, stop_level)."""
        for i in range(start, len(self._levels)):
            lvl = self._levels[i]
            beta = g[lvl.base]
            u = lvl.transversal.get(beta)
            if u is None:
                return g, i
            g = _compose(g, _inverse(u))
        return g, len(self._levels)

    def _insert_strong(self, g: tuple) -> None:
        """Add g to the strong set, extending the base so g moves some base."""
        if not any(g[lvl.base] != lvl.base for lvl in self._levels):
            base = min(p for p, v in enumerate(g) if v != p)
            self._levels.append(_Level(base))
        self._strong.append(g)

    def _rebuild_levels(self, upto: int) -> None:
        """Recompute generator lists and transversals for levels 0..upto."""
        prefix: list[int] = []
        for i, lvl in enumerate(self._levels):
            if i <= upto:
                lvl.gens = [
                    s for s in self._strong if all(s[b] == b for b in prefix)
                ]
                _rebuild_orbit(lvl, self.degree)
            prefix.append(lvl.base)

    def _build_chain(self) -> None:
        ident = tuple(range(self.degree))
        for g in self.generators:
            self._insert_strong(g.images)
        self._rebuild_levels(len(self._levels))
        # Close under Schreier generators until every one sifts to identity.
        changed = True
        while changed:
            changed = False
            for i in range(len(self._levels)):
                lvl = self._levels[i]
                for beta in sorted(lvl.transversal):
                    u = lvl.transversal[beta]
                    for s in lvl.gens:
                        gamma = s[beta]
                        sg = _compose(_compose(u, s), _inverse(lvl.transversal[gamma]))
                        if sg == ident:
                            continue
                        r, j = self._sift_tuple(sg, i + 1)
                        if r != ident:
                            self._insert_strong(r)
                            self._rebuild_levels(j)
                            changed = True

    # -- queries ---------------------------------------------------------

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def base(self) -> list:
        return [lvl.base for lvl in self._levels]

    def is_member(self, g: Permutation) -> bool:
        if not isinstance(g, Permutation):
            raise MalformedInputError("membership test requires a Permutation")
        if g.degree != self.degree:
            raise MalformedInputError(
                f"element degree {g.degree} does not match group degree {self.degree}"
            )
        r, _ = self._sift_tuple(g.images)
        return r == tuple(range(self.degree))

    def __contains__(self, g: Permutation) -> bool:
        return self.is_member(g)

    def element_rows(self, cap: int | None = None) -> list:
        """All elements as sorted packed rows.  Cached after first call."""
        if cap is None:
            cap = default_caps().elements
        if self.order > cap:
            raise CapacityError(
                f"group order {self.order} exceeds the element cap {cap}",
                cap_name="elements",
                cap_value=cap,
            )
        with self._lock:
            if self._rows is None:
                gens = [kernel.pack(g.images) for g in self.generators]
                rows = kernel.close_group(gens, self.degree, cap)
                if rows is None:
                    raise CapacityError(
                        f"enumeration exceeded the element cap {cap}",
                        cap_name="elements",
                        cap_value=cap,
                    )
                self._rows = rows
            return self._rows

    def elements(self, cap: int | None = None) -> list:
        """All elements as Permutation objects, in lexicographic order."""
        return [self._perm_from_row(r) for r in self.element_rows(cap)]

    def _perm_from_row(self, row: bytes) -> Permutation:
        p = Permutation.__new__(Permutation)
        p.images = kernel.unpack(row)
        p._hash = hash(p.images)
        return p

    # -- constructions ---------------------------------------------------

    def subgroup(self, generators: Iterable) -> "Subgroup":
        return Subgroup(self, generators)

    def normal_closure(self, seeds: Iterable) -> "Subgroup":
        """Smallest normal subgroup of this group containing the seeds."""
        work: list[Permutation] = []
        for s in seeds:
            if not isinstance(s, Permutation):
                s = Permutation(s)
            if not self.is_member(s):
                raise PreconditionError("normal closure seed is not a group member")
            if not s.is_identity:
                work.append(s)
        closure_gens = list(work)
        H = PermutationGroup(self.degree, closure_gens)
        i = 0
        while i < len(closure_gens):
            h = closure_gens[i]
            for g in self.generators:
                c = h.conjugate(g)
                if not H.is_member(c):
                    closure_gens.append(c)
                    H = PermutationGroup(self.degree, closure_gens)
            i += 1
        return Subgroup(self, closure_gens, _group=H)

    def coset_action_quotient(
        self, N: "Subgroup", cap: int | None = None
    ) -> "PermutationGroup":
        """G acting on the right cosets of the normal subgroup N.

        Points of the result are cosets, numbered by the lexicographic order
        of their least elements, so the output is reproducible.
        """
        if cap is None:
            cap = default_caps().quotient_degree
        if N.parent is not self:
            raise PreconditionError("subgroup belongs to a different group")
        for n in N.group.generators:
            for g in self.generators:
                if not N.group.is_member(n.conjugate(g)):
                    raise PreconditionError("coset action requires a normal subgroup")
        index = self.order // N.order
        if index > cap:
            raise CapacityError(
                f"coset count {index} exceeds the quotient cap {cap}",
                cap_name="quotient_degree",
                cap_value=cap,
            )
        n_rows = N.group.element_rows()
        gen_rows = [kernel.pack(g.images) for g in self.generators]
        start = n_rows[0]  # least element of N = canonical form of the coset N*1
        canon: dict = {}
        queue = [start]
        canon[start] = None
        head = 0
        while head < len(queue):
            rep = queue[head]
            head += 1
            for g in gen_rows:
                c = kernel.coset_min(n_rows, kernel.compose(rep, g))
                if c not in canon:
                    if len(canon) >= index:
                        raise PreconditionError("coset walk left the expected index")
                    canon[c] = None
                    queue.append(c)
        reps = sorted(canon)
        pos = {r: i for i, r in enumerate(reps)}
        images = []
        for g in gen_rows:
            images.append(
                Permutation(
                    [pos[kernel.coset_min(n_rows, kernel.compose(r, g))] for r in reps]
                )
            )
        Q = PermutationGroup(index, images)
        if Q.order != index:
            raise PreconditionError("coset action order mismatch; subgroup not normal?")
        return Q

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, order={self.order})"


class Subgroup:
    """A subgroup of a parent group, with its own stabilizer chain."""

    __slots__ = ("parent", "group", "_row_cache")

    def __init__(self, parent: PermutationGroup, generators: Iterable, *, _group=None):
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if not parent.is_member(g):
                raise PreconditionError("subgroup generator is not a member of the parent")
            gens.append(g)
        self.parent = parent
        self.group = _group if _group is not None else PermutationGroup(parent.degree, gens)
        self._row_cache: list | None = None

    @property
    def generators(self) -> tuple:
        return self.group.generators

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def degree(self) -> int:
        return self.group.degree

    def is_member(self, g: Permutation) -> bool:
        return self.group.is_member(g)

    def __contains__(self, g: Permutation) -> bool:
        return self.group.is_member(g)

    def element_rows(self, cap: int | None = None) -> list:
        if self._row_cache is None:
            self._row_cache = self.group.element_rows(cap)
        return self._row_cache

    def contains_subgroup(self, other: "Subgroup") -> bool:
        return all(self.group.is_member(g) for g in other.group.generators)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, degree={self.degree})"


def build_group(degree: int, generators: Iterable) -> PermutationGroup:
    """Convenience constructor mirroring the group-file layout."""
    return PermutationGroup(degree, generators)
