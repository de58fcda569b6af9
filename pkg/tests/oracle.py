"""Brute-force reference implementation over M_d(Z_n), in plain Python.

Shares no code with the package: matrices are tuples of tuples of ints,
the involution is the transpose (identity when d = 1), and every inverse
is found by trying all n^(d*d) candidates.
"""

from functools import lru_cache
from itertools import product


def mul(a, b, n):
    d = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(d)) % n for j in range(d))
                 for i in range(d))


def star(a):
    return tuple(zip(*a))


def sub(a, b, n):
    return tuple(tuple((x - y) % n for x, y in zip(r, s)) for r, s in zip(a, b))


@lru_cache(maxsize=None)
def carrier(n, d):
    return [tuple(tuple(flat[i * d:(i + 1) * d]) for i in range(d))
            for flat in product(range(n), repeat=d * d)]


def identity(n, d):
    return tuple(tuple(1 % n if i == j else 0 for j in range(d)) for i in range(d))


@lru_cache(maxsize=None)
def core_solutions(a, n):
    d = len(a)
    a2 = mul(a, a, n)
    out = []
    for x in carrier(n, d):
        ax = mul(a, x, n)
        if star(ax) == ax and mul(ax, x, n) == x and mul(x, a2, n) == a:
            out.append(x)
    return out


@lru_cache(maxsize=None)
def mp_solutions(a, n):
    d = len(a)
    out = []
    for x in carrier(n, d):
        ax, xa = mul(a, x, n), mul(x, a, n)
        if (mul(ax, a, n) == a and mul(xa, x, n) == x
                and star(ax) == ax and star(xa) == xa):
            out.append(x)
    return out


def weighted_core_solutions(a, e, n):
    d = len(a)
    a2 = mul(a, a, n)
    out = []
    for x in carrier(n, d):
        ax = mul(a, x, n)
        eax = mul(e, ax, n)
        if mul(ax, x, n) == x and mul(x, a2, n) == a and star(eax) == eax:
            out.append(x)
    return out


def hermitian_units(n, d):
    one = identity(n, d)
    els = carrier(n, d)
    return [e for e in els if star(e) == e and any(mul(e, y, n) == one for y in els)]


def core(a, n):
    sols = core_solutions(a, n)
    return sols[0] if sols else None


def flat(a):
    return [v for r in a for v in r]
