"""Independent brute-force oracles.

Everything here recomputes group-theoretic facts from first principles
with plain tuples, dicts, and sets, sharing no arithmetic with the
package.  Slow on purpose; use only at desk scale.
"""

from itertools import combinations


def compose(a, b):
    """Image tuple of `apply a, then b`."""
    return tuple(b[a[i]] for i in range(len(a)))


def inverse(a):
    out = [0] * len(a)
    for i, image in enumerate(a):
        out[image] = i
    return tuple(out)


def identity(degree):
    return tuple(range(degree))


def element_order(a):
    n = 1
    cur = a
    ident = identity(len(a))
    while cur != ident:
        cur = compose(cur, a)
        n += 1
    return n


def close(gens, degree):
    """All products of the generators, as a set of image tuples."""
    ident = identity(degree)
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def conjugacy_classes(elements):
    """Partition a group (set of image tuples) into conjugacy classes."""
    elements = set(elements)
    remaining = set(elements)
    classes = []
    while remaining:
        x = min(remaining)
        orbit = {compose(compose(inverse(g), x), g) for g in elements}
        classes.append(orbit)
        remaining -= orbit
    return classes


def centralizer(elements, x):
    x = tuple(x)
    return {g for g in elements if compose(g, x) == compose(x, g)}


def is_abelian(elements):
    elements = list(elements)
    return all(
        compose(a, b) == compose(b, a) for a, b in combinations(elements, 2)
    )


def is_subgroup(elements, candidate):
    candidate = set(candidate)
    if identity(len(next(iter(candidate)))) not in candidate:
        return False
    return all(compose(a, b) in candidate for a in candidate for b in candidate)


def two_generated_subgroup_orders(elements, degree):
    """Orders of all subgroups generated by at most two elements.

    Complete for subgroup orders whose groups are all 2-generated,
    which covers every order p, p^2, pq, and p^2*q; callers must not
    conclude absence for orders outside that range.
    """
    elements = sorted(elements)
    orders = {1}
    singles = {}
    for a in elements:
        sub = frozenset(close([a], degree))
        singles[a] = sub
        orders.add(len(sub))
    for a, b in combinations(elements, 2):
        if b in singles[a]:
            continue
        orders.add(len(close([a, b], degree)))
    return orders


def p_part(n, p):
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out
