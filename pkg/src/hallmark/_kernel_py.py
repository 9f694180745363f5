"""Pure-Python enumeration kernels.

A permutation is packed as a bytes row: two big-endian bytes per point, so
rows of equal degree compare lexicographically exactly like their image
tuples.  Everything that walks a full element list (closure, conjugacy
partition, centralizer and normalizer scans) works on these rows; the
compiled kernel in _kernel_cy mirrors this module function for function.
"""

from __future__ import annotations

from math import lcm

BACKEND = "pure"


def pack(images) -> bytes:
    out = bytearray(2 * len(images))
    k = 0
    for v in images:
        out[k] = v >> 8
        out[k + 1] = v & 0xFF
        k += 2
    return bytes(out)


def unpack(row: bytes) -> tuple:
    return tuple((row[k] << 8) | row[k + 1] for k in range(0, len(row), 2))


def identity_row(degree: int) -> bytes:
    return pack(range(degree))


def compose(a: bytes, b: bytes) -> bytes:
    """Row of `apply a, then b`."""
    out = bytearray(len(a))
    for k in range(0, len(a), 2):
        j = ((a[k] << 8) | a[k + 1]) << 1
        out[k] = b[j]
        out[k + 1] = b[j + 1]
    return bytes(out)


def inverse(a: bytes) -> bytes:
    out = bytearray(len(a))
    for k in range(0, len(a), 2):
        j = ((a[k] << 8) | a[k + 1]) << 1
        p = k >> 1
        out[j] = p >> 8
        out[j + 1] = p & 0xFF
    return bytes(out)


def conjugate(a: bytes, g: bytes) -> bytes:
    """Row of g^-1 * a * g (apply g^-1, then a, then g)."""
    return compose(compose(inverse(g), a), g)


def order_of(a: bytes) -> int:
    n = len(a) >> 1
    seen = bytearray(n)
    result = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        p = start
        while not seen[p]:
            seen[p] = 1
            p = (a[2 * p] << 8) | a[2 * p + 1]
            length += 1
        result = lcm(result, length)
    return result


def orders_list(rows) -> list:
    return [order_of(r) for r in rows]


def close_group(gens, degree: int, cap: int):
    """Sorted closure of the generators, or None if it would exceed cap."""
    e = identity_row(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def conjugacy_partition(rows, gens) -> list:
    """Class id per row; ids are numbered by least member, rows sorted."""
    idx = {r: i for i, r in enumerate(rows)}
    ginv = [inverse(g) for g in gens]
    cid = [-1] * len(rows)
    c = 0
    for i in range(len(rows)):
        if cid[i] >= 0:
            continue
        cid[i] = c
        stack = [rows[i]]
        while stack:
            x = stack.pop()
            for g, gi in zip(gens, ginv):
                y = compose(compose(gi, x), g)
                j = idx[y]
                if cid[j] < 0:
                    cid[j] = c
                    stack.append(y)
        c += 1
    return cid


def centralizer_filter(rows, xs) -> list:
    """Rows commuting with every row in xs."""
    out = []
    for r in rows:
        for x in xs:
            if compose(r, x) != compose(x, r):
                break
        else:
            out.append(r)
    return out


def normalizer_filter(rows, sub_gens, sub_set) -> list:
    """Rows g with s^g in sub_set for every generator s."""
    out = []
    for g in rows:
        gi = inverse(g)
        for s in sub_gens:
            if compose(compose(gi, s), g) not in sub_set:
                break
        else:
            out.append(g)
    return out


def coset_min(n_rows, g: bytes) -> bytes:
    """Lexicographically least element of the coset N*g."""
    best = None
    for n in n_rows:
        c = compose(n, g)
        if best is None or c < best:
            best = c
    return best
