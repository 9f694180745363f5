"""Reduction of cyclotomic integers modulo a prime.

For a conductor N and a prime p, write N = p^a * m with p not dividing
m.  Any ring map from Z[zeta_N] onto a field of characteristic p kills
zeta's p-power part and sends zeta_N to a root of the m-th cyclotomic
polynomial mod p, which lives in F_{p^d} for d the order of p mod m.
CycReducer realizes one such map concretely: zeta_N^e |-> t^(e mod m)
in F_p[t]/(f), where f is the first irreducible factor of the m-th
cyclotomic polynomial in coefficient order.  Fixing f this way pins the
same map on every run, so reduced values are comparable across calls
and across processes.
"""

from __future__ import annotations

from math import gcd

from .cyclotomic import Cyc
from .errors import PreconditionError
from .gf import FField, add, divmod_poly, least_irreducible, mul, multiplicative_order, trim

__all__ = ["CycReducer", "cyclotomic_mod", "irreducible_factors"]


def _divisors(n: int) -> list:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _mobius(n: int) -> int:
    mu = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def cyclotomic_mod(m: int, p: int) -> tuple:
    """The m-th cyclotomic polynomial with coefficients reduced mod p."""
    if m < 1:
        raise PreconditionError("cyclotomic index must be positive")
    num, den = (1,), (1,)
    for d in _divisors(m):
        mu = _mobius(m // d)
        if mu == 0:
            continue
        binom = tuple([p - 1] + [0] * (d - 1) + [1])  # x^d - 1
        if mu == 1:
            num = mul(num, binom, p)
        else:
            den = mul(den, binom, p)
    quo, rem = divmod_poly(num, den, p)
    if rem:
        raise PreconditionError("cyclotomic polynomial division left a remainder")
    return quo


def _root_of_order(field: FField, m: int) -> tuple:
    """Element of multiplicative order exactly m, by deterministic scan.

    Candidates a are taken in the base-p integer encoding of their
    coefficients; a^((order-1)/m) lands in the order-m subgroup, and only
    the prime factors of m are needed to certify the exact order, so the
    group order itself is never factored.
    """
    cofactor = (field.order - 1) // m
    prime_divs = []
    k = m
    d = 2
    while d * d <= k:
        if k % d == 0:
            prime_divs.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        prime_divs.append(k)
    for code in range(2, field.order):
        digits, rest = [], code
        while rest:
            digits.append(rest % field.p)
            rest //= field.p
        b = field.pow(tuple(digits), cofactor)
        if b != (1,) and all(field.pow(b, m // ell) != (1,) for ell in prime_divs):
            return b
    raise PreconditionError("no element of the requested order")  # m = 1 handled above


def irreducible_factors(m: int, p: int) -> list:
    """All monic irreducible factors of the m-th cyclotomic polynomial mod p.

    Each factor is a little-endian coefficient tuple of degree
    ord(p mod m); the list is sorted by coefficient tuple.  Requires p
    coprime to m (no repeated roots, all factors distinct).
    """
    if m == 1:
        return [(p - 1, 1)]  # x - 1
    if gcd(m, p) != 1:
        raise PreconditionError("cyclotomic factor listing needs p coprime to m")
    d = multiplicative_order(p, m)
    ambient = FField(p, least_irreducible(p, d))
    u = _root_of_order(ambient, m)
    upow = [(1,)]
    for _ in range(m - 1):
        upow.append(ambient.mul(upow[-1], u))
    # orbit representatives of the primitive exponents under j -> j*p
    seen = bytearray(m)
    factors = []
    for j in range(1, m):
        if seen[j] or gcd(j, m) != 1:
            continue
        orbit = []
        k = j
        while not seen[k]:
            seen[k] = 1
            orbit.append(k)
            k = k * p % m
        # minimal polynomial of u^j: product of (x - u^k) over the orbit
        poly = [(1,)]
        for k in orbit:
            neg_root = tuple(-c % p for c in upow[k])
            nxt = [()] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] = add(nxt[i + 1], c, p)
                nxt[i] = add(nxt[i], ambient.mul(neg_root, c), p)
            poly = nxt
        if any(len(c) > 1 for c in poly):
            raise PreconditionError("cyclotomic factor has a coefficient outside F_p")
        factors.append(tuple(c[0] if c else 0 for c in poly))
    factors.sort()
    return factors


class CycReducer:
    """Ring map Z[zeta_N] -> F_{p^d} fixed by the conductor and the prime.

    reduce() accepts plain ints and Cyc values whose conductor divides N;
    images are little-endian coefficient tuples in F_p[t]/(modulus), so
    they hash and compare directly.
    """

    __slots__ = ("conductor", "p", "m", "field", "modulus", "_powers")

    def __init__(self, conductor: int, p: int):
        if conductor < 1:
            raise PreconditionError("conductor must be positive")
        self.conductor = conductor
        self.p = p
        m = conductor
        while m % p == 0:
            m //= p
        self.m = m
        self.modulus = irreducible_factors(m, p)[0]
        self.field = FField(p, self.modulus)
        # field.mul needs reduced residues; for a degree-one modulus t + c
        # the generator t is itself reducible, to the constant -c
        if len(self.modulus) == 2:
            gen = trim(((-self.modulus[0]) % p,))
        else:
            gen = (0, 1)
        powers = [(1,)]
        for _ in range(m - 1):
            powers.append(self.field.mul(powers[-1], gen))
        self._powers = powers

    def reduce(self, value) -> tuple:
        if isinstance(value, int):
            return trim((value % self.p,))
        if not isinstance(value, Cyc):
            raise PreconditionError("reduce expects an int or a Cyc value")
        if self.conductor % value.n != 0:
            raise PreconditionError(
                "value conductor %d does not divide %d" % (value.n, self.conductor)
            )
        stride = self.conductor // value.n
        out = ()
        for e, c in sorted(value.canonical().items()):
            term = tuple(c * x % self.p for x in self._powers[e * stride % self.m])
            out = add(out, trim(term), self.p)
        return out
