"""Class-size criteria and the checks pairing them with subgroup facts.

Each check evaluates two independent sides.  The criterion side reads
nothing but a ClassTable (class sizes and element orders); the witness
side searches the group itself for commuting Sylow pairs, nilpotent or
abelian Hall subgroups, normalizing pairs, or cores.  A check reports
both verdicts and whether they agree; a capacity cap on either side
degrades the answer to undetermined instead of guessing.
"""

from __future__ import annotations

from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from . import subgroups
from .classdata import ClassTable, p_part, prime_factors
from .config import Caps, default_caps
from .errors import CapacityError, PreconditionError
from .perms import PermutationGroup
from .verdicts import Verdict, agreement


def sizes_coprime_criterion(table: ClassTable, q: int, p: int) -> Verdict:
    """Every nontrivial q-element has class size coprime to p."""
    for ci in table.p_element_classes(q):
        if ci.size % p == 0:
            return Verdict.no(
                "class %d (order %d, size %d) has size divisible by %d"
                % (ci.index, ci.element_order, ci.size, p),
                class_index=ci.index,
                element_order=ci.element_order,
                size=ci.size,
                prime=p,
            )
    return Verdict.yes(
        "all %d-element class sizes are coprime to %d" % (q, p), primes=[q, p]
    )


def pair_criterion(table: ClassTable, p: int, q: int) -> Verdict:
    """Both directions of the class-size condition for the pair {p, q}."""
    first = sizes_coprime_criterion(table, q, p)
    if first.holds is False:
        return first
    second = sizes_coprime_criterion(table, p, q)
    if second.holds is False:
        return second
    return Verdict.yes(
        "class sizes of %d- and %d-elements are coprime to the other prime" % (p, q),
        primes=[p, q],
    )


def pairwise_criterion(table: ClassTable, pi: Sequence[int]) -> Verdict:
    """The pair condition for every two primes in pi."""
    for p, q in combinations(sorted(pi), 2):
        v = pair_criterion(table, p, q)
        if v.holds is False:
            return v
    return Verdict.yes("pair condition holds for all of %s" % (sorted(pi),))


def pi_prime_sizes_criterion(table: ClassTable, pi: Sequence[int]) -> Verdict:
    """Every p-element for p in pi has class size coprime to all of pi."""
    primes = sorted(pi)
    for p in primes:
        for ci in table.p_element_classes(p):
            for q in primes:
                if ci.size % q == 0:
                    return Verdict.no(
                        "class %d (order %d, size %d) has size divisible by %d"
                        % (ci.index, ci.element_order, ci.size, q),
                        class_index=ci.index,
                        element_order=ci.element_order,
                        size=ci.size,
                        prime=q,
                    )
    return Verdict.yes("all pi-element class sizes are pi-prime for %s" % (primes,))


class TheoremCheck:
    """One group, one statement, two independently computed sides."""

    __slots__ = ("theorem", "params", "lhs", "rhs", "agree", "note")

    def __init__(self, theorem: str, params: dict, lhs: Verdict, rhs: Verdict, note: str = ""):
        self.theorem = theorem
        self.params = params
        self.lhs = lhs
        self.rhs = rhs
        self.agree = agreement(lhs, rhs)
        self.note = note

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem,
            "params": self.params,
            "criterion": self.lhs.to_json(),
            "witness": self.rhs.to_json(),
            "agree": self.agree,
        }
        if self.note:
            out["note"] = self.note
        return out

    def __repr__(self) -> str:
        return "TheoremCheck(%s %s agree=%s)" % (self.theorem, self.params, self.agree)


def _sub_witness(sub) -> dict:
    return {
        "order": sub.order,
        "generators": [g.cycle_string() or "()" for g in sub.generators],
    }


def _table_for(group: PermutationGroup, caps: Caps) -> Tuple[Optional[ClassTable], Optional[Verdict]]:
    try:
        return ClassTable(group, caps), None
    except CapacityError as exc:
        return None, Verdict.undetermined("class table unavailable: %s" % exc)


def check_theorem_a(
    group: PermutationGroup, p: int, q: int, caps: Optional[Caps] = None
) -> TheoremCheck:
    """Commuting Sylow p/q pair iff the pair class-size condition holds."""
    caps = caps or default_caps()
    params = {"p": p, "q": q}
    table, blocked = _table_for(group, caps)
    lhs = blocked or pair_criterion(table, p, q)
    try:
        got, pair = subgroups.exists_commuting_sylow_pair(group, p, q, caps)
        if got:
            rhs = Verdict.yes(
                "Sylow %d- and %d-subgroups commute elementwise" % (p, q),
                p_sylow=_sub_witness(pair[0]),
                q_sylow=_sub_witness(pair[1]),
            )
        else:
            rhs = Verdict.no("no commuting Sylow %d/%d pair exists" % (p, q))
    except CapacityError as exc:
        rhs = Verdict.undetermined("pair search unavailable: %s" % exc)
    return TheoremCheck("A", params, lhs, rhs)


def check_theorem_b(
    group: PermutationGroup, pi: Sequence[int], caps: Optional[Caps] = None
) -> TheoremCheck:
    """Nilpotent Hall pi-subgroup iff the pairwise class-size condition."""
    caps = caps or default_caps()
    primes = sorted(pi)
    params = {"pi": primes}
    table, blocked = _table_for(group, caps)
    lhs = blocked or pairwise_criterion(table, primes)
    try:
        hall = subgroups.nilpotent_hall(group, primes, caps)
        if hall is not None:
            rhs = Verdict.yes(
                "nilpotent Hall subgroup of order %d" % hall.order, hall=_sub_witness(hall)
            )
        else:
            rhs = Verdict.no("no nilpotent Hall %s-subgroup exists" % (primes,))
    except CapacityError as exc:
        rhs = Verdict.undetermined("Hall search unavailable: %s" % exc)
    return TheoremCheck("B", params, lhs, rhs)


def check_theorem_c(
    group: PermutationGroup,
    pi: Sequence[int],
    caps: Optional[Caps] = None,
    principal_block_clear=None,
) -> TheoremCheck:
    """Abelian Hall pi-subgroup iff pi-prime sizes plus the block condition.

    The block side applies to primes in pi that are 3 or 5: no character
    degree in the principal p-block may be divisible by p.  It needs a
    character table; `principal_block_clear` is a callable p -> Verdict
    supplied by the table layer, or None when no table is available, in
    which case groups where the condition matters come out undetermined.
    """
    caps = caps or default_caps()
    primes = sorted(pi)
    params = {"pi": primes}
    table, blocked = _table_for(group, caps)
    if blocked is not None:
        lhs = blocked
    else:
        lhs = pi_prime_sizes_criterion(table, primes)
        if lhs.holds:
            small = [p for p in primes if p in (3, 5) and group.order % p == 0]
            for p in small:
                if principal_block_clear is None:
                    lhs = Verdict.undetermined(
                        "principal %d-block degrees unknown (no character table)" % p
                    )
                    break
                block_verdict = principal_block_clear(p)
                if block_verdict.holds is not True:
                    lhs = block_verdict
                    break
    try:
        hall = subgroups.nilpotent_hall(group, primes, caps)
        if hall is not None and subgroups.is_abelian(hall):
            rhs = Verdict.yes(
                "abelian Hall subgroup of order %d" % hall.order, hall=_sub_witness(hall)
            )
        elif hall is not None:
            rhs = Verdict.no(
                "Hall subgroup of order %d exists but is not abelian" % hall.order
            )
        else:
            rhs = Verdict.no("no nilpotent Hall %s-subgroup exists" % (primes,))
    except CapacityError as exc:
        rhs = Verdict.undetermined("Hall search unavailable: %s" % exc)
    return TheoremCheck("C", params, lhs, rhs)


def check_sylow_normalization(
    group: PermutationGroup, p: int, q: int, caps: Optional[Caps] = None
) -> TheoremCheck:
    """One-sided: coprime q-element sizes plus p- or q-solvability force
    a Sylow p-subgroup normalizing a Sylow q-subgroup."""
    caps = caps or default_caps()
    params = {"p": p, "q": q}
    table, blocked = _table_for(group, caps)
    if blocked is not None:
        premise = blocked
    else:
        premise = sizes_coprime_criterion(table, q, p)
        if premise.holds:
            try:
                solv = subgroups.is_p_solvable(group, p, caps) or subgroups.is_p_solvable(
                    group, q, caps
                )
            except CapacityError as exc:
                premise = Verdict.undetermined("solvability test unavailable: %s" % exc)
            else:
                if not solv:
                    premise = Verdict.no(
                        "group is neither %d- nor %d-solvable" % (p, q),
                        primes=[p, q],
                    )
    try:
        got, pair = subgroups.exists_normalizing_sylow_pair(group, p, q, caps)
        if got:
            conclusion = Verdict.yes(
                "a Sylow %d-subgroup normalizes a Sylow %d-subgroup" % (p, q),
                p_sylow=_sub_witness(pair[0]),
                q_sylow=_sub_witness(pair[1]),
            )
        else:
            conclusion = Verdict.no("no Sylow %d-subgroup normalizes a Sylow %d-subgroup" % (p, q))
    except CapacityError as exc:
        conclusion = Verdict.undetermined("normalizing pair search unavailable: %s" % exc)
    return _implication_check("t4.1", params, premise, conclusion)


def _implication_check(name: str, params: dict, premise: Verdict, conclusion: Verdict) -> TheoremCheck:
    """Package premise => conclusion; vacuous premises agree by convention."""
    check = TheoremCheck(name, params, premise, conclusion, note="one-sided implication")
    if premise.holds is False:
        check.agree = True
    elif premise.holds is None or conclusion.holds is None:
        check.agree = None
    else:
        check.agree = bool(conclusion.holds)
    return check


def check_core_characterization(
    group: PermutationGroup, p: int, q: int, caps: Optional[Caps] = None
) -> TheoremCheck:
    """For p-solvable groups: a Sylow p-subgroup normalizes some Sylow
    q-subgroup iff the quotient by the p'-core has order prime to q."""
    caps = caps or default_caps()
    params = {"p": p, "q": q}
    try:
        if not subgroups.is_p_solvable(group, p, caps):
            lhs = Verdict.undetermined("group is not %d-solvable; statement does not apply" % p)
            rhs = Verdict.undetermined("not evaluated")
            return TheoremCheck("t4.2", params, lhs, rhs, note="precondition failed")
        core = subgroups.op_prime_core(group, p, caps)
        quotient_order = group.order // core.order
        if p_part(quotient_order, q) == 1:
            rhs = Verdict.yes(
                "order of group over its %d'-core is prime to %d" % (p, q),
                core_order=core.order,
                quotient_order=quotient_order,
            )
        else:
            rhs = Verdict.no(
                "quotient by the %d'-core has order divisible by %d" % (p, q),
                core_order=core.order,
                quotient_order=quotient_order,
            )
        got, pair = subgroups.exists_normalizing_sylow_pair(group, p, q, caps)
        if got:
            lhs = Verdict.yes(
                "a Sylow %d-subgroup normalizes a Sylow %d-subgroup" % (p, q),
                p_sylow=_sub_witness(pair[0]),
                q_sylow=_sub_witness(pair[1]),
            )
        else:
            lhs = Verdict.no("no Sylow %d-subgroup normalizes a Sylow %d-subgroup" % (p, q))
    except CapacityError as exc:
        lhs = Verdict.undetermined("core characterization unavailable: %s" % exc)
        rhs = Verdict.undetermined("core characterization unavailable: %s" % exc)
    return TheoremCheck("t4.2", params, lhs, rhs)


def check_odd_sizes_solvability(
    group: PermutationGroup, q: int, caps: Optional[Caps] = None
) -> TheoremCheck:
    """Odd q (q odd prime): all q-element class sizes odd forces
    q-solvability, and then a Sylow 2-subgroup normalizes a Sylow
    q-subgroup."""
    caps = caps or default_caps()
    if q == 2:
        raise PreconditionError("q must be an odd prime")
    params = {"q": q}
    table, blocked = _table_for(group, caps)
    premise = blocked or sizes_coprime_criterion(table, q, 2)
    conclusion: Verdict
    try:
        solvable = subgroups.is_p_solvable(group, q, caps)
        if not solvable:
            conclusion = Verdict.no("group is not %d-solvable" % q)
        else:
            got, pair = subgroups.exists_normalizing_sylow_pair(group, 2, q, caps)
            if got:
                conclusion = Verdict.yes(
                    "%d-solvable and a Sylow 2-subgroup normalizes a Sylow %d-subgroup"
                    % (q, q),
                    p_sylow=_sub_witness(pair[0]),
                    q_sylow=_sub_witness(pair[1]),
                )
            else:
                conclusion = Verdict.no(
                    "%d-solvable but no Sylow 2-subgroup normalizes a Sylow %d-subgroup"
                    % (q, q)
                )
    except CapacityError as exc:
        conclusion = Verdict.undetermined("solvability check unavailable: %s" % exc)
    return _implication_check("t4.3", params, premise, conclusion)


def default_prime_sets(order: int) -> List[Tuple[int, ...]]:
    """Prime sets exercised by default: all pairs, odd primes, all primes."""
    primes = prime_factors(order)
    out: List[Tuple[int, ...]] = [tuple(c) for c in combinations(primes, 2)]
    odd = tuple(p for p in primes if p != 2)
    if len(odd) > 2:
        out.append(odd)
    if len(primes) > 2 and primes not in out:
        out.append(primes)
    return out


def check_group(
    group: PermutationGroup,
    theorem: str,
    caps: Optional[Caps] = None,
    pairs: Optional[Sequence[Tuple[int, int]]] = None,
    prime_sets: Optional[Sequence[Sequence[int]]] = None,
    principal_block_clear=None,
) -> List[TheoremCheck]:
    """All default checks of one theorem for one group."""
    caps = caps or default_caps()
    order = group.order
    primes = prime_factors(order)
    checks: List[TheoremCheck] = []
    if theorem == "A":
        for p, q in pairs or combinations(primes, 2):
            checks.append(check_theorem_a(group, p, q, caps))
    elif theorem == "B":
        for pi in prime_sets or default_prime_sets(order):
            checks.append(check_theorem_b(group, pi, caps))
    elif theorem == "C":
        for pi in prime_sets or default_prime_sets(order):
            checks.append(
                check_theorem_c(group, pi, caps, principal_block_clear=principal_block_clear)
            )
    elif theorem == "t4.1":
        for p, q in pairs or [(p, q) for p in primes for q in primes if p != q]:
            checks.append(check_sylow_normalization(group, p, q, caps))
    elif theorem == "t4.2":
        for p, q in pairs or [(p, q) for p in primes for q in primes if p != q]:
            checks.append(check_core_characterization(group, p, q, caps))
    elif theorem == "t4.3":
        for q in [q for q in primes if q != 2]:
            checks.append(check_odd_sizes_solvability(group, q, caps))
    else:
        raise PreconditionError("unknown theorem %r" % (theorem,))
    return checks
