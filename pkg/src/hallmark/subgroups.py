"""Sylow and Hall subgroup machinery on top of exhaustive enumeration.

Everything here trades cleverness for checkability: Sylow subgroups are
grown by normalizer climbs, centralizers and normalizers are computed by
filtering the full element list, and Hall subgroups come from three
strategies whose soundness does not depend on each other:

  0. pure arithmetic absence for simple groups (the group cannot act
     faithfully on the cosets of the putative subgroup);
  1. a centralizer chain that is complete for nilpotent Hall subgroups;
  2. an anchored closure search over Sylow combinations, complete but
     budgeted, so it reports "inconclusive" rather than running away.

A found Hall subgroup is returned as a witness; absence claims state
which strategy proved them.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .classdata import ClassTable, is_power_of, p_part, pi_part, prime_factors
from .config import Caps, default_caps
from .errors import CapacityError, PreconditionError
from .kernels import kernel
from .perms import Permutation, PermutationGroup, Subgroup


def _gen_rows(sub) -> List[bytes]:
    return [kernel.pack(p.images) for p in sub.generators]


def _subgroup_from_rows(parent: PermutationGroup, rows: Sequence[bytes]) -> Subgroup:
    degree = parent.degree
    gens = [Permutation(kernel.unpack(r)[:degree]) for r in rows]
    return Subgroup(parent, gens)


def _host_and_rows(group, caps: Caps) -> Tuple[PermutationGroup, List[bytes]]:
    if isinstance(group, Subgroup):
        return group.group, group.element_rows(caps.elements)
    if isinstance(group, PermutationGroup):
        return group, group.element_rows(caps.elements)
    raise PreconditionError("expected a permutation group or subgroup")


def _close_rows(gen_rows: Sequence[bytes], degree: int, cap: int) -> List[bytes]:
    closed = kernel.close_group(list(gen_rows), degree, cap)
    if closed is None:
        raise PreconditionError("closure exceeded expected subgroup size")
    return closed


def _minimal_gen_rows(rows: Sequence[bytes], degree: int) -> List[bytes]:
    """A small generating set for the subgroup given by its closed row set."""
    ident = kernel.identity_row(degree)
    gens: List[bytes] = []
    have = {ident}
    for row in rows:
        if row not in have:
            gens.append(row)
            have = set(_close_rows(gens, degree, len(rows) + 1))
            if len(have) == len(rows):
                break
    return gens


def _require_prime(p) -> None:
    if not isinstance(p, int) or p < 2 or prime_factors(p) != (p,):
        raise PreconditionError("expected a prime, got %r" % (p,))


def centralizer(group, target, caps: Optional[Caps] = None) -> Subgroup:
    """Centralizer of a Subgroup or Permutation inside group."""
    caps = caps or default_caps()
    host, rows = _host_and_rows(group, caps)
    if isinstance(target, Permutation):
        xs = [kernel.pack(target.images)]
    elif isinstance(target, Subgroup):
        xs = _gen_rows(target)
    else:
        raise PreconditionError("centralizer target must be a Permutation or Subgroup")
    kept = kernel.centralizer_filter(rows, xs)
    return _subgroup_from_rows(host, _minimal_gen_rows(kept, host.degree))


def normalizer(group, sub: Subgroup, caps: Optional[Caps] = None) -> Subgroup:
    caps = caps or default_caps()
    host, rows = _host_and_rows(group, caps)
    sub_rows = sub.element_rows(caps.elements)
    kept = kernel.normalizer_filter(rows, _gen_rows(sub), set(sub_rows))
    return _subgroup_from_rows(host, _minimal_gen_rows(kept, host.degree))


def _sylow_rows(degree: int, scope_rows: List[bytes], p: int, caps: Caps) -> List[bytes]:
    """Rows of a Sylow p-subgroup of the group given by scope_rows.

    Deterministic climb: start from the least element of maximal p-power
    order, then repeatedly adjoin the least p-element of the normalizer
    not yet inside.  Each step grows the p-subgroup, so the climb ends at
    the full p-part; it cannot stall below it because a proper p-subgroup
    has a strictly larger normalizer p-part.
    """
    target = p_part(len(scope_rows), p)
    if target == 1:
        return [kernel.identity_row(degree)]
    best_row, best_order = None, 0
    for row in scope_rows:
        o = kernel.order_of(row)
        if o > best_order and is_power_of(o, p):
            best_row, best_order = row, o
    current = _close_rows([best_row], degree, target + 1)
    while len(current) < target:
        gens = _minimal_gen_rows(current, degree)
        normal = kernel.normalizer_filter(scope_rows, gens, set(current))
        current_set = set(current)
        extend = None
        for row in normal:
            if row in current_set:
                continue
            o = kernel.order_of(row)
            if o > 1 and is_power_of(o, p):
                extend = row
                break
        if extend is None:
            raise PreconditionError(
                "normalizer climb stalled at order %d of %d" % (len(current), target)
            )
        current = _close_rows(gens + [extend], degree, target + 1)
    return current


def sylow(group, p: int, caps: Optional[Caps] = None) -> Subgroup:
    """A Sylow p-subgroup, as a subgroup of the host group."""
    caps = caps or default_caps()
    _require_prime(p)
    host, rows = _host_and_rows(group, caps)
    syl = _sylow_rows(host.degree, rows, p, caps)
    return _subgroup_from_rows(host, _minimal_gen_rows(syl, host.degree))


def all_sylow(group: PermutationGroup, p: int, caps: Optional[Caps] = None) -> List[Subgroup]:
    """Every Sylow p-subgroup, as the conjugation orbit of one of them."""
    caps = caps or default_caps()
    seed = sylow(group, p, caps)
    seed_rows = tuple(seed.element_rows(caps.elements))
    gen_rows = _gen_rows(group)
    gen_invs = [kernel.inverse(g) for g in gen_rows]
    seen = {seed_rows}
    frontier = [seed_rows]
    while frontier:
        nxt = []
        for rows in frontier:
            for g, gi in zip(gen_rows, gen_invs):
                conj = tuple(sorted(kernel.compose(kernel.compose(gi, r), g) for r in rows))
                if conj not in seen:
                    if len(seen) >= caps.sylow_conjugates:
                        raise CapacityError(
                            "Sylow conjugate orbit exceeds cap",
                            cap_name="sylow_conjugates",
                            cap_value=caps.sylow_conjugates,
                        )
                    seen.add(conj)
                    nxt.append(conj)
        frontier = nxt
    degree = group.degree
    return [
        _subgroup_from_rows(group, _minimal_gen_rows(list(rows), degree))
        for rows in sorted(seen)
    ]


def sylow_count(group: PermutationGroup, p: int, caps: Optional[Caps] = None) -> int:
    """Number of Sylow p-subgroups, via the normalizer index."""
    caps = caps or default_caps()
    s = sylow(group, p, caps)
    n = normalizer(group, s, caps)
    return group.order // n.order


def is_abelian(sub) -> bool:
    gens = sub.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1 :]:
            if a * b != b * a:
                return False
    return True


def is_nilpotent(sub, caps: Optional[Caps] = None) -> bool:
    """Nilpotent iff every Sylow subgroup is normal."""
    caps = caps or default_caps()
    host, rows = _host_and_rows(sub, caps)
    order = len(rows)
    if order == 1:
        return True
    for p in prime_factors(order):
        syl = _sylow_rows(host.degree, rows, p, caps)
        gens = _minimal_gen_rows(syl, host.degree)
        if len(kernel.normalizer_filter(rows, gens, set(syl))) != order:
            return False
    return True


def commutes_elementwise(a: Subgroup, b: Subgroup) -> bool:
    for x in a.generators:
        for y in b.generators:
            if x * y != y * x:
                return False
    return True


def exists_commuting_sylow_pair(
    group: PermutationGroup, p: int, q: int, caps: Optional[Caps] = None
) -> Tuple[bool, Optional[Tuple[Subgroup, Subgroup]]]:
    """Whether some Sylow p- and q-subgroups commute elementwise.

    Checked on one fixed Sylow p-subgroup P: a commuting pair exists iff
    the centralizer of P contains a full Sylow q-subgroup of the group
    (conjugate any commuting pair so its p-half becomes P).
    """
    caps = caps or default_caps()
    _require_prime(p)
    _require_prime(q)
    if p == q:
        raise PreconditionError("primes must be distinct, got %d twice" % p)
    P = sylow(group, p, caps)
    cent = centralizer(group, P, caps)
    if p_part(cent.order, q) != p_part(group.order, q):
        return False, None
    Q = sylow(cent, q, caps)
    return True, (P, Q)


def exists_normalizing_sylow_pair(
    group: PermutationGroup, p: int, q: int, caps: Optional[Caps] = None
) -> Tuple[bool, Optional[Tuple[Subgroup, Subgroup]]]:
    """Whether some Sylow p-subgroup normalizes some Sylow q-subgroup.

    Checked on one fixed Sylow q-subgroup Q: such a pair exists iff the
    normalizer of Q contains a full Sylow p-subgroup of the group.
    """
    caps = caps or default_caps()
    _require_prime(p)
    _require_prime(q)
    if p == q:
        raise PreconditionError("primes must be distinct, got %d twice" % p)
    Q = sylow(group, q, caps)
    norm = normalizer(group, Q, caps)
    if p_part(norm.order, p) != p_part(group.order, p):
        return False, None
    P = sylow(norm, p, caps)
    return True, (P, Q)


def minimal_normal_subgroup(
    group: PermutationGroup, table: Optional[ClassTable] = None, caps: Optional[Caps] = None
) -> Optional[Subgroup]:
    """A minimal normal subgroup, or None for the trivial group.

    Every minimal normal subgroup is the normal closure of each of its
    nontrivial elements, so the least-order closure over class
    representatives is minimal normal.
    """
    caps = caps or default_caps()
    if group.order == 1:
        return None
    table = table or ClassTable(group, caps)
    best: Optional[Subgroup] = None
    degree = group.degree
    for ci in table.classes:
        if ci.element_order == 1:
            continue
        if best is not None and best.order <= ci.size + 1:
            continue
        closure = group.normal_closure([ci.representative(degree)])
        if best is None or closure.order < best.order:
            best = closure
    return best


def is_simple(group: PermutationGroup, caps: Optional[Caps] = None) -> bool:
    caps = caps or default_caps()
    if group.order == 1:
        return False
    if prime_factors(group.order) == (group.order,):
        return True
    table = ClassTable(group, caps)
    for ci in table.classes:
        if ci.element_order == 1:
            continue
        if group.normal_closure([ci.representative(group.degree)]).order != group.order:
            return False
    return True


def derived_subgroup(group: PermutationGroup) -> Subgroup:
    gens = group.generators
    comms = []
    for i, a in enumerate(gens):
        for b in gens[i + 1 :]:
            c = a.inverse() * b.inverse() * a * b
            if not c.is_identity:
                comms.append(c)
    if not comms:
        return Subgroup(group, [])
    return group.normal_closure(comms)


def is_solvable(group: PermutationGroup) -> bool:
    current = group
    order = current.order
    while order > 1:
        der = derived_subgroup(current)
        if der.order == order:
            return False
        if der.order == 1:
            return True
        current = PermutationGroup(group.degree, der.generators)
        order = current.order
    return True


def is_p_solvable(group: PermutationGroup, p: int, caps: Optional[Caps] = None) -> bool:
    """Every composition factor is a p-group or a p'-group."""
    caps = caps or default_caps()
    _require_prime(p)
    order = group.order
    if order % p or is_power_of(order, p):
        return True
    if is_solvable(group):
        return True
    nsub = minimal_normal_subgroup(group, caps=caps)
    if nsub is None or nsub.order == order:
        # simple, order divisible by p but not a p-power
        return False
    inner = PermutationGroup(group.degree, nsub.generators)
    if not is_p_solvable(inner, p, caps):
        return False
    quotient = group.coset_action_quotient(nsub, caps.quotient_degree)
    return is_p_solvable(quotient, p, caps)


def op_prime_core(group: PermutationGroup, p: int, caps: Optional[Caps] = None) -> Subgroup:
    """O_{p'}(group): the largest normal subgroup of order coprime to p.

    Greedy absorption over class representatives of p'-order is complete:
    a representative belongs to the core exactly when the normal closure
    of it together with everything absorbed so far stays free of p.
    """
    caps = caps or default_caps()
    _require_prime(p)
    table = ClassTable(group, caps)
    core = Subgroup(group, [])
    for ci in table.classes:
        if ci.element_order == 1 or ci.element_order % p == 0:
            continue
        rep = ci.representative(group.degree)
        if rep in core:
            continue
        candidate = group.normal_closure(list(core.generators) + [rep])
        if candidate.order % p:
            core = candidate
    return core


class HallSearch:
    """Outcome of a Hall subgroup search."""

    __slots__ = ("status", "subgroup", "reason")

    def __init__(self, status: str, subgroup: Optional[Subgroup], reason: str):
        self.status = status
        self.subgroup = subgroup
        self.reason = reason

    @property
    def found(self) -> bool:
        return self.status == "found"

    def __repr__(self) -> str:
        return "HallSearch(%s: %s)" % (self.status, self.reason)


def _check_pi(group_order: int, pi: Sequence[int]) -> Tuple[int, ...]:
    seen = []
    for p in pi:
        _require_prime(p)
        if p in seen:
            raise PreconditionError("prime set repeats %d" % p)
        seen.append(p)
    return tuple(sorted(p for p in seen if group_order % p == 0))


def nilpotent_hall(
    group: PermutationGroup, pi: Sequence[int], caps: Optional[Caps] = None
) -> Optional[Subgroup]:
    """A nilpotent Hall pi-subgroup, or None if none exists.

    Centralizer chain: take a Sylow subgroup for the first prime, pass
    to its centralizer, and continue with the next prime.  If a
    nilpotent Hall subgroup exists it is conjugate to one containing the
    chosen Sylow subgroup, so each centralizer retains full Sylow
    subgroups for the remaining primes; a stalled chain proves
    nonexistence.
    """
    caps = caps or default_caps()
    primes = _check_pi(group.order, pi)
    degree = group.degree
    if not primes:
        return Subgroup(group, [])
    scope_rows = group.element_rows(caps.elements)
    collected_gens: List[bytes] = []
    for p in primes:
        if p_part(len(scope_rows), p) != p_part(group.order, p):
            return None
        syl = _sylow_rows(degree, scope_rows, p, caps)
        syl_gens = _minimal_gen_rows(syl, degree)
        collected_gens.extend(syl_gens)
        scope_rows = kernel.centralizer_filter(scope_rows, syl_gens)
    target = pi_part(group.order, primes)
    rows = _close_rows(collected_gens, degree, target + 1)
    if len(rows) != target:
        raise PreconditionError("centralizer chain assembled a wrong order")
    return _subgroup_from_rows(group, _minimal_gen_rows(rows, degree))


def hall_subgroup(
    group: PermutationGroup, pi: Sequence[int], caps: Optional[Caps] = None
) -> HallSearch:
    """Search for any Hall pi-subgroup; see the module docstring."""
    caps = caps or default_caps()
    primes = _check_pi(group.order, pi)
    order = group.order
    target = pi_part(order, primes)
    if target == 1:
        return HallSearch("found", Subgroup(group, []), "trivial Hall subgroup")
    if target == order:
        sub = Subgroup(group, list(group.generators))
        return HallSearch("found", sub, "the whole group is a pi-group")
    if len(primes) == 1:
        return HallSearch("found", sylow(group, primes[0], caps), "Sylow subgroup")

    nil = nilpotent_hall(group, primes, caps)
    if nil is not None:
        return HallSearch("found", nil, "centralizer chain (nilpotent)")

    if is_simple(group, caps):
        index = order // target
        if not _divides_factorial(order, index):
            return HallSearch(
                "absent",
                None,
                "a simple group of this order cannot act faithfully on %d cosets" % index,
            )

    return _anchored_search(group, primes, target, caps)


def _divides_factorial(n: int, m: int) -> bool:
    f = 1
    for k in range(2, m + 1):
        f *= k
    return f % n == 0


def _anchored_search(
    group: PermutationGroup, primes: Tuple[int, ...], target: int, caps: Caps
) -> HallSearch:
    """Closure search over Sylow choices, anchored at the scarcest prime.

    Any Hall pi-subgroup contains full Sylow subgroups for each prime in
    pi and is generated by them; conjugating it to contain the fixed
    anchor leaves the other primes' Sylow subgroups to enumerate.  Sound
    for both existence and absence; bounded by the candidate budget.
    """
    counts: Dict[int, int] = {}
    for p in primes:
        counts[p] = sylow_count(group, p, caps)
    anchor = min(primes, key=lambda p: (counts[p], p))
    others = sorted((p for p in primes if p != anchor), key=lambda p: (counts[p], p))
    try:
        lists = {p: all_sylow(group, p, caps) for p in others}
    except CapacityError as exc:
        return HallSearch("inconclusive", None, "Sylow enumeration hit a cap: %s" % exc)
    anchor_rows = sylow(group, anchor, caps).element_rows(caps.elements)
    degree = group.degree
    budget = [caps.hall_candidates]

    def extend(rows: List[bytes], remaining: Tuple[int, ...]) -> Optional[List[bytes]]:
        if not remaining:
            return rows if len(rows) == target else None
        p = remaining[0]
        for cand in lists[p]:
            merged = _budgeted_closure(
                rows, _gen_rows(cand), degree, target, budget, caps.hall_candidates
            )
            if merged is None or target % len(merged):
                continue
            got = extend(merged, remaining[1:])
            if got is not None:
                return got
        return None

    try:
        result = extend(list(anchor_rows), tuple(others))
    except CapacityError as exc:
        return HallSearch("inconclusive", None, str(exc))
    if result is not None:
        sub = _subgroup_from_rows(group, _minimal_gen_rows(result, degree))
        return HallSearch("found", sub, "anchored Sylow closure search")
    return HallSearch(
        "absent",
        None,
        "no Sylow combination over the anchor closes to order %d" % target,
    )


def _budgeted_closure(
    rows: Sequence[bytes],
    extra_gens: Sequence[bytes],
    degree: int,
    cap: int,
    budget: List[int],
    budget_cap: int,
) -> Optional[List[bytes]]:
    """Closure of rows plus extra generators; None if it grows past cap.

    Every newly added element costs one unit of budget; exhausting it
    raises, which the search reports as inconclusive.
    """
    seen = set(rows)
    gens = list(extra_gens) + _minimal_gen_rows(list(rows), degree)
    frontier = list(rows)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = kernel.compose(x, g)
                if y not in seen:
                    budget[0] -= 1
                    if budget[0] <= 0:
                        raise CapacityError(
                            "Hall search budget exhausted",
                            cap_name="hall_candidates",
                            cap_value=budget_cap,
                        )
                    if len(seen) >= cap:
                        return None
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)
