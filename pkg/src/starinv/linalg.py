"""Exact linear algebra used by the inverse solvers.

Field routines work on plain lists of lists of ``Fraction`` or
``GaussianRational`` scalars (rectangular shapes allowed). The modular
solver handles A x = b over Z_n for composite n by diagonalizing the
integer matrix [A | nI] with unimodular row and column operations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional, Sequence

from .gaussian import GaussianRational
from .starring import CarrierSpec, Element, zero

Matrix = list  # list[list[scalar]]


# -- field matrices ----------------------------------------------------------

def shape(m: Matrix) -> tuple:
    return (len(m), len(m[0]) if m else 0)


def matmul(x: Matrix, y: Matrix, zero_scalar=Fraction(0)) -> Matrix:
    inner = len(y)
    cols = len(y[0]) if y else 0
    out = []
    for r in x:
        row = []
        for j in range(cols):
            acc = zero_scalar
            for k in range(inner):
                acc = acc + r[k] * y[k][j]
            row.append(acc)
        out.append(row)
    return out


def transpose(m: Matrix, cols: Optional[int] = None) -> Matrix:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(c) for c in zip(*m)]


def star_matrix(spec: CarrierSpec, m: Matrix, cols: Optional[int] = None) -> Matrix:
    """Carrier involution extended to rectangular blocks."""
    t = transpose(m, cols)
    if spec.domain == "QI" and spec.involution == "conjugate-transpose":
        return [[x.conjugate() for x in r] for r in t]
    return t


def rref(m: Matrix) -> tuple:
    """Reduced row echelon form and pivot column list."""
    a = [list(r) for r in m]
    rows, cols = shape(a)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def identity(n: int, one=Fraction(1), zero_scalar=Fraction(0)) -> Matrix:
    return [[one if i == j else zero_scalar for j in range(n)] for i in range(n)]


def inverse(m: Matrix) -> Optional[Matrix]:
    """Inverse of a square field matrix, or None when singular."""
    n = len(m)
    if n == 0:
        return []
    z = m[0][0] * 0
    o = z + 1
    aug = [list(r) + [o if i == j else z for j in range(n)] for i, r in enumerate(m)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        return None
    return [r[n:] for r in red]


def full_rank_factorization(m: Matrix) -> tuple:
    """Return (F, G, r) with m = F G, F of full column rank r, G of full row rank r."""
    red, piv = rref(m)
    r = len(piv)
    F = [[row[c] for c in piv] for row in m]
    G = [list(red[i]) for i in range(r)]
    return F, G, r


def col_space_contains(big: Matrix, small: Matrix) -> bool:
    """col(small) is contained in col(big)."""
    aug = [list(x) + list(y) for x, y in zip(big, small)]
    return rank(aug) == rank(big)


def row_space_contains(big: Matrix, small: Matrix) -> bool:
    """row(small) is contained in row(big)."""
    return rank([list(r) for r in big] + [list(r) for r in small]) == rank(big)


def to_matrix(a: Element) -> Matrix:
    return [list(r) for r in a.entries]


def from_matrix(spec: CarrierSpec, m: Matrix) -> Element:
    return Element._from_rows(spec, m)


def zeros(rows: int, cols: int, z=Fraction(0)) -> Matrix:
    return [[z] * cols for _ in range(rows)]


# -- solving over a field ----------------------------------------------------

def solve_field(A: Matrix, b: Sequence) -> Optional[list]:
    """One solution of A x = b over a field, or None."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    aug = [list(A[i]) + [b[i]] for i in range(rows)]
    red, piv = rref(aug)
    if cols in piv:
        return None
    z = Fraction(0)
    x = [z] * cols
    for i, c in enumerate(piv):
        x[c] = red[i][cols]
    return x


# -- solving over Z_n --------------------------------------------------------

def _diagonalize(M: list) -> tuple:
    """Unimodular U, V with U M V diagonal (no divisibility chain needed)."""
    m = len(M)
    p = len(M[0]) if m else 0
    D = [list(r) for r in M]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(p)] for i in range(p)]
    for t in range(min(m, p)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, p):
                    v = D[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                return U, D, V
            _, i, j = best
            if i != t:
                D[t], D[i] = D[i], D[t]
                U[t], U[i] = U[i], U[t]
            if j != t:
                for row in D:
                    row[t], row[j] = row[j], row[t]
                for row in V:
                    row[t], row[j] = row[j], row[t]
            piv = D[t][t]
            clean = True
            for i in range(t + 1, m):
                q = D[i][t] // piv
                if q:
                    D[i] = [x - q * y for x, y in zip(D[i], D[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                if D[i][t]:
                    clean = False
            for j in range(t + 1, p):
                q = D[t][j] // piv
                if q:
                    for row in D:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                if D[t][j]:
                    clean = False
            if clean:
                break
    return U, D, V


def solve_mod(A: Sequence[Sequence[int]], b: Sequence[int], n: int) -> Optional[list]:
    """One solution of A x = b (mod n), or None if the system is inconsistent."""
    m = len(A)
    k = len(A[0]) if m else 0
    M = [list(A[i]) + [n if i == j else 0 for j in range(m)] for i in range(m)]
    U, D, V = _diagonalize(M)
    c = [sum(u * bb for u, bb in zip(row, b)) for row in U]
    p = k + m
    w = [0] * p
    for i in range(m):
        d = D[i][i] if i < p else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d:
                return None
            w[i] = c[i] // d
    z = [sum(V[i][j] * w[j] for j in range(p)) for i in range(p)]
    return [x % n for x in z[:k]]


# -- linear systems in an unknown ring element -------------------------------

def _basis(spec: CarrierSpec) -> list:
    """Additive generators over Z (for ZN) or Q (for Q, QI)."""
    d = spec.dim
    units = [Fraction(1)] if spec.domain != "QI" else [GaussianRational(1), GaussianRational(0, 1)]
    z0 = zero(spec).entries[0][0]
    out = []
    for i in range(d):
        for j in range(d):
            for u in units:
                rows = [[z0] * d for _ in range(d)]
                rows[i][j] = 1 if spec.domain == "ZN" else u
                out.append(Element._from_rows(spec, rows))
    return out


def _coords(spec: CarrierSpec, elements: Sequence[Element]) -> list:
    out = []
    for e in elements:
        for r in e.entries:
            for x in r:
                if spec.domain == "QI":
                    out.extend((x.re, x.im))
                else:
                    out.append(x)
    return out


def solve_linear(
    system: Callable[[Element], Sequence[Element]],
    rhs: Sequence[Element],
) -> Optional[Element]:
    """Find one x with ``system(x) == rhs`` (componentwise), or None.

    ``system`` must be additive in x and commute with scalar multiplication
    by integers (ZN) or rationals (Q, QI); every map built from fixed ring
    products and the involution qualifies. The unknown's carrier is taken
    from ``rhs``.
    """
    spec = rhs[0].spec
    basis = _basis(spec)
    cols = [_coords(spec, system(e)) for e in basis]
    target = _coords(spec, rhs)
    A = [list(r) for r in zip(*cols)]
    if spec.domain == "ZN":
        sol = solve_mod(A, target, spec.modulus)
    else:
        sol = solve_field(A, target)
    if sol is None:
        return None
    x = zero(spec)
    for coef, e in zip(sol, basis):
        if coef:
            x = x + _scale(e, coef)
    return x


def _scale(e: Element, coef) -> Element:
    return Element._from_rows(e.spec, ([x * coef for x in r] for r in e.entries))
