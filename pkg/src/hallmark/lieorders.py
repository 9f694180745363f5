"""Exact arithmetic for classical-group orders and block-witness class sizes.

Everything here is unbounded-integer replay: generic orders of the classical
groups over F_q, multiplicative orders of q modulo odd primes, class sizes of
distinguished semisimple elements built from Singer-type blocks, and the
coprime-index torus chains that produce abelian Hall {r,s}-subgroups.  The
point is that each class-size expression carries an asserted divisor, and the
implication "both block witnesses have class size coprime to the other prime
=> the two multiplicative orders agree and a torus chain of index coprime to
rs exists" can be checked exactly at concrete parameters.

Family names: GL, GU, Sp, SOodd (dimension 2n+1), SOplus / SOminus
(dimension 2n, discriminant sign +/-).  Orders follow the generic formulas,
e.g. |GL_n(q)| = q^(n(n-1)/2) * prod(q^j - 1) and the SO^eps form carrying
the (q^n - eps) factor; class sizes are quotients of these, so any consistent
convention gives the same divisibility facts.
"""

import json
import os
import time
from itertools import combinations
from math import prod

from .classdata import p_part, prime_factors
from .errors import MalformedInputError, PreconditionError
from .gf import multiplicative_order

__all__ = [
    "FAMILIES",
    "ClassSize",
    "class_size_sl",
    "class_size_so",
    "class_size_sp",
    "class_size_su",
    "cyclotomic_value",
    "exceptional_rows",
    "group_order",
    "load_grid_manifest",
    "ord_mod",
    "ord_mod_neg",
    "run_grid",
    "verify_pair",
]

FAMILIES = ("GL", "GU", "Sp", "SOodd", "SOplus", "SOminus")

GRID_SCHEMA = "hallmark-lie-grid/1"
GRID_REPORT_SCHEMA = "hallmark-lie-grid-report/1"

_DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def _require_prime(p: int, role: str) -> None:
    if p < 2 or prime_factors(p) != (p,):
        raise PreconditionError("%s must be prime, got %r" % (role, p))


def _require_prime_power(q: int) -> None:
    if q < 2 or len(prime_factors(q)) != 1:
        raise PreconditionError("q must be a prime power >= 2, got %r" % (q,))


def _exact_div(num: int, den: int) -> int:
    quo, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("expected %d to divide %d exactly" % (den, num))
    return quo


def _order(family: str, n: int, q: int) -> int:
    # Internal evaluator; n = 0 means the empty group in a quotient formula.
    if n == 0:
        return 1
    if family == "GL":
        return q ** (n * (n - 1) // 2) * prod(q ** j - 1 for j in range(1, n + 1))
    if family == "GU":
        return q ** (n * (n - 1) // 2) * prod(
            q ** j - (-1) ** j for j in range(1, n + 1)
        )
    if family in ("Sp", "SOodd"):
        return q ** (n * n) * prod(q ** (2 * j) - 1 for j in range(1, n + 1))
    sign = 1 if family == "SOplus" else -1
    return (
        q ** (n * (n - 1))
        * (q ** n - sign)
        * prod(q ** (2 * j) - 1 for j in range(1, n))
    )


def group_order(family: str, n: int, q: int) -> int:
    """Generic order of the classical group of rank parameter n over F_q."""
    if family not in FAMILIES:
        raise MalformedInputError(
            "unknown family %r; expected one of %s" % (family, ", ".join(FAMILIES))
        )
    if not isinstance(n, int) or n < 1:
        raise MalformedInputError("rank must be a positive integer, got %r" % (n,))
    _require_prime_power(q)
    return _order(family, n, q)


def _so_order(d: int, eps: int, q: int) -> int:
    # Orthogonal order addressed by dimension; odd d ignores the sign.
    if d == 0:
        return 1
    if d % 2:
        return _order("SOodd", d // 2, q)
    return _order("SOplus" if eps == 1 else "SOminus", d // 2, q)


def ord_mod(r: int, q: int) -> int:
    """Least k >= 1 with q^k = 1 mod r."""
    _require_prime(r, "r")
    if q % r == 0:
        raise PreconditionError("ord_mod needs r coprime to q, got r=%d q=%d" % (r, q))
    return multiplicative_order(q % r, r)


def ord_mod_neg(r: int, q: int) -> int:
    """Least k >= 1 with (-q)^k = 1 mod r."""
    _require_prime(r, "r")
    if q % r == 0:
        raise PreconditionError(
            "ord_mod_neg needs r coprime to q, got r=%d q=%d" % (r, q)
        )
    return multiplicative_order((-q) % r, r)


def cyclotomic_value(n: int, q: int) -> int:
    """Value of the n-th cyclotomic polynomial at the integer q."""
    if n < 1:
        raise PreconditionError("cyclotomic index must be >= 1, got %r" % (n,))
    if q < 2:
        raise PreconditionError("evaluation point must be >= 2, got %r" % (q,))
    primes = prime_factors(n)
    num = den = 1
    for size in range(len(primes) + 1):
        for subset in combinations(primes, size):
            term = q ** (n // prod(subset, start=1)) - 1
            if size % 2 == 0:
                num *= term
            else:
                den *= term
    return _exact_div(num, den)


def _block_exponent(base: int, r: int, n: int) -> int:
    # Largest m >= 0 with base * r^m <= n; caller guarantees base <= n.
    m = 0
    while base * r ** (m + 1) <= n:
        m += 1
    return m


class ClassSize:
    """One block-witness class size together with its guaranteed divisor."""

    __slots__ = ("family", "case", "params", "value", "divisor", "ambient")

    def __init__(self, family, case, params, value, divisor, ambient):
        self.family = family
        self.case = case
        self.params = params
        self.value = value
        self.divisor = divisor
        self.ambient = ambient

    @property
    def divisor_holds(self) -> bool:
        return self.value % self.divisor == 0

    @property
    def divides_ambient(self) -> bool:
        return self.ambient % self.value == 0

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "case": self.case,
            "params": dict(self.params),
            "value": self.value,
            "divisor": self.divisor,
            "ambient": self.ambient,
            "divisor_holds": self.divisor_holds,
            "divides_ambient": self.divides_ambient,
        }

    def __repr__(self):
        return "ClassSize(%s/%s, value=%d)" % (self.family, self.case, self.value)


def _linear_common(family, n, q, r, case, k):
    """Shared special-case displays for the linear and unitary families.

    "excess" and "pair" cover the boundary where r divides the torus of
    rank one (k = 1): the first needs room n >= r+1, the second is the
    tight square n == r whose witness pairs an eigenvalue with its inverse
    and has class size divisible by r itself.
    """
    unitary = family == "GU"
    sign = -1 if unitary else 1

    def tor(j):
        # q^j - 1 for GL, q^j - (-1)^j for GU
        return q ** j - (-1) ** j if unitary else q ** j - 1

    if k != 1:
        raise PreconditionError(
            "case %r needs k = 1 (r dividing q %s 1), got k = %d"
            % (case, "+" if unitary else "-", k)
        )
    special = _exact_div(_order(family, n, q), q - sign)
    if case == "excess":
        if n < r + 1:
            raise PreconditionError("case 'excess' needs n >= r + 1, got n=%d r=%d" % (n, r))
        torus = q ** r + 1 if unitary else q ** r - 1
        value = _exact_div(special, torus * _order(family, n - r - 1, q))
        divisor = prod(tor(j) for j in range(2, r)) * (q ** (r + 1) - 1)
        label = "SU" if unitary else "SL"
        params = {"n": n, "q": q, "r": r, "k": k, "ambient": "%s_%d(%d)" % (label, n, q)}
        return ClassSize(family, case, params, value, divisor, special)
    if n != r:
        raise PreconditionError("case 'pair' needs n == r, got n=%d r=%d" % (n, r))
    value = _exact_div(special, (q - sign) * _order(family, n - 2, q))
    label = "SU" if unitary else "SL"
    params = {"n": n, "q": q, "r": r, "k": k, "ambient": "%s_%d(%d)" % (label, n, q)}
    return ClassSize(family, case, params, value, r, special)


def class_size_sl(n: int, q: int, r: int, case: str = "block") -> ClassSize:
    """Class size of the distinguished r-element block witness in GL_n(q).

    The default "block" witness is a cyclic GL_1(q^kappa) block padded by
    the identity, kappa = k * r^m with k = ord_r(q) and m maximal subject
    to k * r^m <= n; its class size is divisible by prod(q^j - 1, j < kappa).
    """
    _require_prime_power(q)
    if n < 1:
        raise MalformedInputError("rank must be a positive integer, got %r" % (n,))
    k = ord_mod(r, q)
    if k > n:
        raise PreconditionError(
            "r = %d does not divide the group order in rank %d (k = %d > n)" % (r, n, k)
        )
    if case in ("excess", "pair"):
        return _linear_common("GL", n, q, r, case, k)
    if case != "block":
        raise MalformedInputError("unknown GL case %r" % (case,))
    m = _block_exponent(k, r, n)
    kappa = k * r ** m
    ambient = _order("GL", n, q)
    value = _exact_div(ambient, (q ** kappa - 1) * _order("GL", n - kappa, q))
    divisor = prod(q ** j - 1 for j in range(1, kappa))
    params = {
        "n": n, "q": q, "r": r, "k": k, "m": m, "kappa": kappa,
        "ambient": "GL_%d(%d)" % (n, q),
    }
    return ClassSize("GL", case, params, value, divisor, ambient)


def class_size_su(n: int, q: int, r: int, case: str = "block") -> ClassSize:
    """Class size of the distinguished r-element block witness in GU_n(q).

    For odd k = ord_r(-q) the block is GU_1(q^kappa) on kappa dimensions;
    for even k = 2*k1 the cyclic block GL_1(q^(2*kappa)) sits on 2*kappa
    dimensions with kappa = k1 * r^m, m maximal with k * r^m <= n so the
    block fits.  Both carry divisor prod(q^j - (-1)^j) below the block.
    """
    _require_prime_power(q)
    if n < 1:
        raise MalformedInputError("rank must be a positive integer, got %r" % (n,))
    k = ord_mod_neg(r, q)
    if k > n:
        raise PreconditionError(
            "r = %d does not divide the group order in rank %d (k = %d > n)" % (r, n, k)
        )
    if case in ("excess", "pair"):
        return _linear_common("GU", n, q, r, case, k)
    if case != "block":
        raise MalformedInputError("unknown GU case %r" % (case,))
    ambient = _order("GU", n, q)
    m = _block_exponent(k, r, n)
    if k % 2:
        kappa = k * r ** m
        value = _exact_div(ambient, (q ** kappa + 1) * _order("GU", n - kappa, q))
        top = kappa
    else:
        kappa = (k // 2) * r ** m
        value = _exact_div(
            ambient, (q ** (2 * kappa) - 1) * _order("GU", n - 2 * kappa, q)
        )
        top = 2 * kappa
    divisor = prod(q ** j - (-1) ** j for j in range(1, top))
    params = {
        "n": n, "q": q, "r": r, "k": k, "m": m, "kappa": kappa,
        "ambient": "GU_%d(%d)" % (n, q),
    }
    return ClassSize("GU", case, params, value, divisor, ambient)


def _case1_divisor(q: int, big: int, step: int, copies: int) -> int:
    # prod(q^(2j) - 1, j < big, step does not divide j)
    #   * prod(q^(i*step) + (-1)^i, 1 <= i < copies)
    first = prod(q ** (2 * j) - 1 for j in range(1, big) if j % step)
    second = prod(q ** (i * step) + (-1) ** i for i in range(1, copies))
    return first * second


def class_size_sp(n: int, q: int, r: int, case: str = "auto") -> ClassSize:
    """Class size of the distinguished r-element block witness in Sp_2n(q).

    "split" (k = ord_r(q) odd) embeds GL_1(q^kappa) on a plus-type 2*kappa
    subspace; "twisted" (k even) embeds GU_1(q^kappa) on a minus-type one,
    kappa built from K = k/2.  "twisted-stack" repeats the twisted block
    a = floor(n/K) times, which needs a < r so no block index collapses.
    """
    _require_prime_power(q)
    if n < 1:
        raise MalformedInputError("rank must be a positive integer, got %r" % (n,))
    k = ord_mod(r, q)
    if case == "auto":
        case = "split" if k % 2 else "twisted"
    ambient = _order("Sp", n, q)
    label = "Sp_%d(%d)" % (2 * n, q)
    if case == "split":
        if k % 2 == 0:
            raise PreconditionError("case 'split' needs k odd, got k = %d" % k)
        if k > n:
            raise PreconditionError("case 'split' needs k <= n, got k=%d n=%d" % (k, n))
        m = _block_exponent(k, r, n)
        kappa = k * r ** m
        value = _exact_div(ambient, (q ** kappa - 1) * _order("Sp", n - kappa, q))
        divisor = prod(q ** (2 * j) - 1 for j in range(1, kappa))
        params = {"n": n, "q": q, "r": r, "k": k, "m": m, "kappa": kappa, "ambient": label}
        return ClassSize("Sp", case, params, value, divisor, ambient)
    if k % 2:
        raise PreconditionError("case %r needs k even, got k = %d" % (case, k))
    big_k = k // 2
    if big_k > n:
        raise PreconditionError(
            "case %r needs k/2 <= n, got k/2=%d n=%d" % (case, big_k, n)
        )
    if case == "twisted":
        m = _block_exponent(big_k, r, n)
        kappa = big_k * r ** m
        value = _exact_div(ambient, (q ** kappa + 1) * _order("Sp", n - kappa, q))
        divisor = prod(q ** (2 * j) - 1 for j in range(1, kappa))
        params = {"n": n, "q": q, "r": r, "k": k, "m": m, "kappa": kappa, "ambient": label}
        return ClassSize("Sp", case, params, value, divisor, ambient)
    if case != "twisted-stack":
        raise MalformedInputError("unknown Sp case %r" % (case,))
    a = n // big_k
    if a >= r:
        raise PreconditionError(
            "case 'twisted-stack' needs floor(n/(k/2)) < r, got %d >= %d" % (a, r)
        )
    value = _exact_div(
        ambient, _order("GU", a, q ** big_k) * _order("Sp", n - a * big_k, q)
    )
    divisor = _case1_divisor(q, a * big_k, big_k, a)
    params = {"n": n, "q": q, "r": r, "k": k, "a": a, "kappa": big_k, "ambient": label}
    return ClassSize("Sp", case, params, value, divisor, ambient)


def class_size_so(d: int, eps: int, q: int, r: int, case: str = "auto") -> ClassSize:
    """Class size of the distinguished r-element block witness in SO_d(q).

    Cases mirror the symplectic ones ("split", "twisted", "twisted-stack"),
    except that the sign of the ambient form matters: removing a plus-type
    block keeps eps, removing a minus-type block flips it.  The "-drop"
    variants step the block size down by one power of r; they exist because
    the whole group can coincide with the one form that has no room for the
    undropped block (split needs a plus-type 2*kappa subspace, so SO^- of
    dimension exactly 2*kappa falls back to "split-drop", and dually SO^+
    to "twisted-drop").
    """
    _require_prime_power(q)
    if d % 2 == 0:
        if eps not in (1, -1):
            raise MalformedInputError(
                "even dimension needs eps in {1, -1}, got %r" % (eps,)
            )
    elif eps != 0:
        raise MalformedInputError("odd dimension needs eps = 0, got %r" % (eps,))
    n = d // 2
    if n < 1:
        raise MalformedInputError("dimension %r leaves no rank" % (d,))
    k = ord_mod(r, q)
    ambient = _so_order(d, eps, q)
    label = "SO^%s_%d(%d)" % ({1: "+", -1: "-", 0: ""}[eps], d, q)
    params = {"d": d, "eps": eps, "q": q, "r": r, "k": k, "ambient": label}

    if k % 2:
        if k > n:
            raise PreconditionError("split cases need k <= n, got k=%d n=%d" % (k, n))
        m = _block_exponent(k, r, n)
        kappa = k * r ** m
        drop = d == 2 * kappa and eps == -1
        if case == "auto":
            case = "split-drop" if drop else "split"
        if case == "split":
            if drop:
                raise PreconditionError(
                    "no plus-type block of dimension %d inside SO^-_%d" % (2 * kappa, d)
                )
            value = _exact_div(
                ambient, (q ** kappa - 1) * _so_order(d - 2 * kappa, eps, q)
            )
            divisor = prod(q ** (2 * j) - 1 for j in range(1, kappa))
            params.update(m=m, kappa=kappa)
            return ClassSize("SO", case, params, value, divisor, ambient)
        if case != "split-drop":
            raise MalformedInputError("case %r needs k even" % (case,))
        if not drop:
            raise PreconditionError(
                "case 'split-drop' needs the group to be SO^- of dimension 2*kappa"
            )
        if m < 1:
            raise PreconditionError("case 'split-drop' needs m >= 1, got m = 0")
        kappa1 = kappa // r
        value = _exact_div(
            ambient, (q ** kappa1 - 1) * _so_order(d - 2 * kappa1, eps, q)
        )
        divisor = prod(q ** (2 * j) - 1 for j in range(1, kappa1))
        params.update(m=m, kappa=kappa, kappa1=kappa1)
        return ClassSize("SO", case, params, value, divisor, ambient)

    big_k = k // 2
    if big_k > n:
        raise PreconditionError(
            "twisted cases need k/2 <= n, got k/2=%d n=%d" % (big_k, n)
        )
    m = _block_exponent(big_k, r, n)
    kappa = big_k * r ** m
    drop = d == 2 * kappa and eps == 1
    if case == "auto":
        case = "twisted-drop" if drop else "twisted"
    if case == "twisted":
        if drop:
            raise PreconditionError(
                "no minus-type block of dimension %d inside SO^+_%d" % (2 * kappa, d)
            )
        value = _exact_div(
            ambient, (q ** kappa + 1) * _so_order(d - 2 * kappa, -eps, q)
        )
        divisor = prod(q ** (2 * j) - 1 for j in range(1, kappa))
        params.update(m=m, kappa=kappa)
        return ClassSize("SO", case, params, value, divisor, ambient)
    if case == "twisted-stack":
        a = n // big_k
        if a >= r:
            raise PreconditionError(
                "case 'twisted-stack' needs floor(n/(k/2)) < r, got %d >= %d" % (a, r)
            )
        alpha = (-1) ** a
        if d == 2 * a * big_k and eps == -alpha:
            raise PreconditionError(
                "stacked blocks exhaust SO^%+d of dimension %d" % (eps, d)
            )
        value = _exact_div(
            ambient,
            _order("GU", a, q ** big_k) * _so_order(d - 2 * a * big_k, eps * alpha, q),
        )
        divisor = _case1_divisor(q, a * big_k, big_k, a)
        params.update(a=a, kappa=big_k)
        return ClassSize("SO", case, params, value, divisor, ambient)
    if case != "twisted-drop":
        raise MalformedInputError("unknown SO case %r" % (case,))
    if not drop:
        raise PreconditionError(
            "case 'twisted-drop' needs the group to be SO^+ of dimension 2*kappa"
        )
    if m < 1:
        raise PreconditionError("case 'twisted-drop' needs m >= 1, got m = 0")
    kappa1 = kappa // r
    value = _exact_div(
        ambient, _order("GU", r - 1, q ** kappa1) * _so_order(2 * kappa1, 1, q)
    )
    divisor = _case1_divisor(q, kappa1 * (r - 1), kappa1, r - 1)
    params.update(m=m, kappa=kappa, kappa1=kappa1)
    return ClassSize("SO", case, params, value, divisor, ambient)


def _family_order_of_q(family: str, r: int, q: int) -> int:
    # The unitary family tracks powers of -q, everything else powers of q.
    return ord_mod_neg(r, q) if family == "GU" else ord_mod(r, q)


def _auto_witness(family: str, n: int, q: int, r: int) -> ClassSize:
    if family == "GL":
        return class_size_sl(n, q, r)
    if family == "GU":
        return class_size_su(n, q, r)
    if family == "Sp":
        return class_size_sp(n, q, r)
    if family == "SOodd":
        return class_size_so(2 * n + 1, 0, q, r)
    eps = 1 if family == "SOplus" else -1
    return class_size_so(2 * n, eps, q, r)


def _chain_report(family: str, n: int, q: int, k: int, r: int, s: int) -> dict:
    """Torus chain data: copies of the rank-k torus and the rs-part match.

    The chain packs `copies` commuting cyclic tori of order `factor` into
    the group; its index is coprime to rs exactly when the r- and s-parts
    of the ambient order are captured by the torus product, which is what
    `match` tests.  For the even-dimensional orthogonal groups one torus
    copy is traded away unless the discriminant factor q^n - eps happens
    to carry the same prime, hence the sign juggling on `copies`.
    """
    if family in ("GL", "GU"):
        big_k = k
        if family == "GU":
            factor = q ** k + 1 if k % 2 else q ** k - 1
        else:
            factor = q ** k - 1
        copies = n // k
    else:
        big_k = k if k % 2 else k // 2
        factor = q ** big_k - 1 if k % 2 else q ** big_k + 1
        if family in ("Sp", "SOodd"):
            copies = n // big_k
        else:
            eps = 1 if family == "SOplus" else -1
            copies = (n - 1) // big_k
            if n % big_k == 0:
                joined = 1 if k % 2 else (-1) ** (n // big_k)
                if eps == joined:
                    copies += 1
    ambient = _order(family, n, q)
    r_ambient = p_part(ambient, r)
    s_ambient = p_part(ambient, s)
    r_torus = p_part(factor, r) ** copies
    s_torus = p_part(factor, s) ** copies
    return {
        "torus_factor": factor,
        "copies": copies,
        "rank": big_k,
        "r_part_ambient": r_ambient,
        "r_part_torus": r_torus,
        "s_part_ambient": s_ambient,
        "s_part_torus": s_torus,
        "match": r_ambient == r_torus and s_ambient == s_torus,
    }


def _stack_value(family: str, n: int, q: int, prime: int, big_k: int, a: int) -> int:
    """Class size of the stacked twisted witness, one block fewer when the
    full stack would exhaust the group (possible only for the even-dimension
    orthogonal forms)."""
    if family == "Sp":
        return class_size_sp(n, q, prime, case="twisted-stack").value
    if family == "SOodd":
        return class_size_so(2 * n + 1, 0, q, prime, case="twisted-stack").value
    eps = 1 if family == "SOplus" else -1
    alpha = (-1) ** a
    if 2 * n == 2 * a * big_k and eps == -alpha:
        ambient = _so_order(2 * n, eps, q)
        return _exact_div(
            ambient, _order("GU", a - 1, q ** big_k) * _so_order(2 * big_k, 1, q)
        )
    return class_size_so(2 * n, eps, q, prime, case="twisted-stack").value


def verify_pair(family: str, n: int, q: int, r: int, s: int) -> dict:
    """Check the block-witness divisibility implication for the pair (r, s).

    Computes the r-element and s-element block witnesses and tests: if each
    class size is coprime to the other prime, then either the multiplicative
    orders of q at r and at s agree and the torus chain has index coprime to
    rs, or (for SO^- of dimension exactly 4K, one order K odd and the other
    2K) the mixed torus GL_1(q^K) x GU_1(q^K) does.  Points where one prime
    misses the group order entirely are vacuous.
    """
    if family not in FAMILIES:
        raise MalformedInputError(
            "unknown family %r; expected one of %s" % (family, ", ".join(FAMILIES))
        )
    if not isinstance(n, int) or n < 1:
        raise MalformedInputError("rank must be a positive integer, got %r" % (n,))
    _require_prime_power(q)
    for p, role in ((r, "r"), (s, "s")):
        _require_prime(p, role)
        if p == 2:
            raise PreconditionError("%s must be odd, got 2" % role)
        if q % p == 0:
            raise PreconditionError("%s = %d divides q = %d" % (role, p, q))
    if r == s:
        raise PreconditionError("r and s must be distinct, both are %d" % r)

    order = _order(family, n, q)
    k = _family_order_of_q(family, r, q)
    l = _family_order_of_q(family, s, q)
    report = {
        "family": family,
        "n": n,
        "q": q,
        "r": r,
        "s": s,
        "order": order,
        "k": k,
        "l": l,
    }
    inactive = [p for p in (r, s) if order % p]
    if inactive:
        report.update(
            status="vacuous", inactive=inactive, witnesses=[], premise=False,
            orders_equal=None, chain=None, consistent=True,
        )
        return report

    witnesses = []
    premise = True
    for prime, other in ((r, s), (s, r)):
        w = _auto_witness(family, n, q, prime)
        entry = w.to_json()
        entry["prime"] = prime
        entry["other_prime_divides"] = w.value % other == 0
        entry["own_prime_divides"] = w.value % prime == 0
        if entry["other_prime_divides"]:
            premise = False
        witnesses.append(entry)

    orders_equal = k == l
    chain = _chain_report(family, n, q, k, r, s) if orders_equal else None
    mixed = None
    if premise and not orders_equal and family not in ("GL", "GU"):
        # Coprimality of both witnesses forces the halved orders to agree,
        # so an order mismatch means opposite parities with a common K.  The
        # stacked witness then decides: coprime to the odd-order prime it
        # pins the group to SO^- of dimension 4K, where the product of a
        # split and a twisted rank-K torus is a Hall {r, s}-subgroup.
        big_r = k if k % 2 else k // 2
        big_s = l if l % 2 else l // 2
        if big_r == big_s:
            big_k = big_r
            even_prime, odd_prime = (r, s) if k % 2 == 0 else (s, r)
            stack = _stack_value(family, n, q, even_prime, big_k, n // big_k)
            endpoint = family == "SOminus" and n == 2 * big_k
            factor = (q ** big_k - 1) * (q ** big_k + 1)
            mixed = {
                "torus_factor": factor,
                "rank": big_k,
                "stack_witness": stack,
                "stack_coprime": stack % odd_prime != 0,
                "endpoint": endpoint,
                "r_part_ambient": p_part(order, r),
                "r_part_torus": p_part(factor, r),
                "s_part_ambient": p_part(order, s),
                "s_part_torus": p_part(factor, s),
            }
            mixed["match"] = (
                mixed["stack_coprime"]
                and endpoint
                and mixed["r_part_ambient"] == mixed["r_part_torus"]
                and mixed["s_part_ambient"] == mixed["s_part_torus"]
            )
            if not mixed["stack_coprime"]:
                premise = False
    consistent = (
        (not premise)
        or (orders_equal and chain["match"])
        or (mixed is not None and mixed["match"])
    )
    report.update(
        status="witnessed", witnesses=witnesses, premise=premise,
        orders_equal=orders_equal, chain=chain, mixed_torus=mixed,
        consistent=consistent,
    )
    return report


def load_grid_manifest(path: str = None) -> dict:
    """Load and validate a grid manifest; None means the shipped one."""
    if path is None:
        path = os.path.join(_DATA_DIR, "lie_grid.json")
    try:
        with open(path, "rb") as handle:
            manifest = json.load(handle)
    except (OSError, ValueError) as exc:
        raise MalformedInputError("cannot read grid manifest %s: %s" % (path, exc))
    if not isinstance(manifest, dict) or manifest.get("schema") != GRID_SCHEMA:
        raise MalformedInputError(
            "grid manifest %s must declare schema %r" % (path, GRID_SCHEMA)
        )
    needed = {"schema", "families", "prime_powers", "max_rank", "primes"}
    missing = needed - set(manifest)
    if missing:
        raise MalformedInputError(
            "grid manifest %s is missing %s" % (path, ", ".join(sorted(missing)))
        )
    for family in manifest["families"]:
        if family not in FAMILIES:
            raise MalformedInputError("grid manifest names unknown family %r" % (family,))
    return manifest


def run_grid(manifest: dict) -> dict:
    """Run verify_pair over every point of the manifest grid.

    Besides the headline implication, every produced witness is checked for
    its asserted divisor and for dividing the ambient order; any failure is
    reported with its grid coordinates.
    """
    started = time.monotonic()
    points = witnessed = vacuous = 0
    failures = []
    primes = sorted(manifest["primes"])
    for family in manifest["families"]:
        for q in sorted(manifest["prime_powers"]):
            for n in range(1, manifest["max_rank"] + 1):
                for i, r in enumerate(primes):
                    if r == 2 or q % r == 0:
                        continue
                    for s in primes[i + 1:]:
                        if s == 2 or q % s == 0:
                            continue
                        rep = verify_pair(family, n, q, r, s)
                        points += 1
                        if rep["status"] == "vacuous":
                            vacuous += 1
                        else:
                            witnessed += 1
                        where = {"family": family, "n": n, "q": q, "r": r, "s": s}
                        if not rep["consistent"]:
                            failures.append(dict(where, reason="implication"))
                        for w in rep["witnesses"]:
                            if not w["divisor_holds"]:
                                failures.append(dict(where, reason="divisor"))
                            if not w["divides_ambient"]:
                                failures.append(dict(where, reason="ambient"))
    return {
        "schema": GRID_REPORT_SCHEMA,
        "points": points,
        "witnessed": witnessed,
        "vacuous": vacuous,
        "failures": failures,
        "ok": not failures,
        "elapsed": time.monotonic() - started,
    }


def _evaluate_factor(coeffs, q) -> int:
    return sum(c * q ** i for i, c in enumerate(coeffs))


def evaluate_q_product(entry: dict, q: int) -> int:
    """Evaluate a stored q-power times polynomial-factor product at q."""
    value = q ** entry["q_exponent"]
    for coeffs in entry["factors"]:
        value *= _evaluate_factor(coeffs, q)
    return value


def exceptional_rows() -> list:
    """Rows documenting the twisted and exceptional groups whose relevant
    tori are not maximal, with their generic orders and the centralizer
    orders attached; data only, consumed by divisibility checks."""
    path = os.path.join(_DATA_DIR, "exceptional_tori.json")
    with open(path, "rb") as handle:
        doc = json.load(handle)
    if doc.get("schema") != "hallmark-exceptional-tori/1":
        raise MalformedInputError("unexpected schema in %s" % path)
    return doc["rows"]


def check_exceptional_row(row: dict, q: int) -> dict:
    """Divisibility facts for one documented row at a concrete q."""
    ambient = evaluate_q_product(row["ambient"], q)
    centralizers = [evaluate_q_product(c, q) for c in row["centralizers"]]
    return {
        "group": row["group"],
        "q": q,
        "ambient": ambient,
        "centralizers_divide": [ambient % c == 0 for c in centralizers],
        "cyclotomic_divide": [
            ambient % cyclotomic_value(d, q) == 0 for d in row["torus_orders_d"]
        ],
    }
