"""Exact integer linear algebra for abelianized group presentations.

Everything here runs over Z with arbitrary precision: Smith normal form
with unimodular certificates, a fraction-free determinant used to re-verify
those certificates, and resultants for the circulant shortcut that computes
the abelianization order of a cyclic presentation straight from the
exponent vector of its defining word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

from .presentations import Presentation

Matrix = list[list[int]]


def _copy_matrix(mat: Sequence[Sequence[int]]) -> Matrix:
    rows = [list(map(int, row)) for row in mat]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
    return rows


def _identity_matrix(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matrix_multiply(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimensions disagree")
    cols = len(b[0]) if b else 0
    return [
        [sum(row[k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for row in a
    ]


def bareiss_determinant(mat: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    All intermediate values are exact integers (every division below is
    exact), so there is no overflow or rounding anywhere.
    """
    a = _copy_matrix(mat)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("square matrix required")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(
    mat: Sequence[Sequence[int]],
) -> tuple[Matrix, Matrix, Matrix]:
    """Diagonalize an integer matrix: returns (d, u, v) with u*mat*v = d,
    u and v unimodular, d diagonal with non-negative entries in a
    divisibility chain and zeros trailing.

    Pivot selection always takes a smallest-magnitude nonzero entry of the
    working submatrix, which keeps intermediate entries tame without any
    randomization.
    """
    a = _copy_matrix(mat)
    m = len(a)
    n = len(a[0]) if m else 0
    u = _identity_matrix(m)
    v = _identity_matrix(n)

    def row_add(src: int, dst: int, c: int) -> None:
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def col_add(src: int, dst: int, c: int) -> None:
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    k = 0
    while k < min(m, n):
        best: tuple[int, int] | None = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j] and (
                    best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])
                ):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != k:
            a[k], a[bi] = a[bi], a[k]
            u[k], u[bi] = u[bi], u[k]
        if bj != k:
            for r in a:
                r[k], r[bj] = r[bj], r[k]
            for r in v:
                r[k], r[bj] = r[bj], r[k]
        pivot = a[k][k]
        dirty = False
        for i in range(k + 1, m):
            if a[i][k]:
                row_add(k, i, -(a[i][k] // pivot))
                if a[i][k]:
                    dirty = True
        for j in range(k + 1, n):
            if a[k][j]:
                col_add(k, j, -(a[k][j] // pivot))
                if a[k][j]:
                    dirty = True
        if dirty:
            continue
        stray = None
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if a[i][j] % pivot:
                    stray = i
                    break
            if stray is not None:
                break
        if stray is not None:
            row_add(stray, k, 1)
            continue
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            u[k] = [-x for x in u[k]]
        k += 1
    return a, u, v


def verify_snf_certificate(
    mat: Sequence[Sequence[int]],
    d: Sequence[Sequence[int]],
    u: Sequence[Sequence[int]],
    v: Sequence[Sequence[int]],
) -> bool:
    """Re-check a Smith normal form from scratch: the transform identity,
    unimodularity of both certificates (via independent determinants), and
    the diagonal shape with its divisibility chain.
    """
    mat = _copy_matrix(mat)
    d = _copy_matrix(d)
    u = _copy_matrix(u)
    v = _copy_matrix(v)
    m = len(mat)
    n = len(mat[0]) if m else 0
    if len(u) != m or any(len(r) != m for r in u):
        return False
    if len(v) != n or any(len(r) != n for r in v):
        return False
    if len(d) != m or any(len(r) != n for r in d):
        return False
    if matrix_multiply(matrix_multiply(u, mat), v) != d:
        return False
    if abs(bareiss_determinant(u)) != 1 or abs(bareiss_determinant(v)) != 1:
        return False
    diag = []
    for i in range(m):
        for j in range(n):
            if i != j and d[i][j]:
                return False
        if i < n:
            diag.append(d[i][i])
    for i, entry in enumerate(diag):
        if entry < 0:
            return False
        if i + 1 < len(diag):
            nxt = diag[i + 1]
            if entry == 0:
                if nxt != 0:
                    return False
            elif nxt % entry:
                return False
    return True


# -- abelian invariants ------------------------------------------------------


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group: free rank plus torsion orders in
    a divisibility chain (each listed order > 1)."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("negative rank")
        for i, t in enumerate(self.torsion):
            if t < 2:
                raise ValueError("torsion orders must exceed 1")
            if i and t % self.torsion[i - 1]:
                raise ValueError("torsion orders must form a divisibility chain")

    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.rank:
            return None
        return prod(self.torsion) if self.torsion else 1

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts: list[str] = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def cokernel(rows: Sequence[Sequence[int]], num_columns: int) -> AbelianGroup:
    """Z^num_columns modulo the lattice spanned by the given rows."""
    rows = _copy_matrix(rows)
    if rows and len(rows[0]) != num_columns:
        raise ValueError("row width does not match column count")
    if not rows:
        return AbelianGroup(num_columns)
    d, _, _ = smith_normal_form(rows)
    diag = [d[i][i] for i in range(min(len(rows), num_columns))]
    nonzero = [x for x in diag if x]
    return AbelianGroup(num_columns - len(nonzero), tuple(x for x in nonzero if x > 1))


def first_homology(pres: Presentation) -> AbelianGroup:
    """Abelianization of a presented group (first homology of any space
    with that fundamental group)."""
    return cokernel(pres.relation_matrix(), pres.num_generators)


# -- resultants and circulants ------------------------------------------------


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _pseudo_remainder(f: list[int], g: list[int]) -> list[int]:
    """r with lc(g)^(deg f - deg g + 1) * f = q*g + r and deg r < deg g."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    for _ in range(len(f) - dg):
        if len(r) > dg:
            top = r[-1]
            shift = len(r) - 1 - dg
            r = [lc * x for x in r]
            for i, c in enumerate(g):
                r[shift + i] -= top * c
            r = _trim(r)
        else:
            r = [lc * x for x in r]
    return r


def resultant(f: Sequence[int], g: Sequence[int]) -> int:
    """Resultant of two integer polynomials (coefficient lists, index =
    degree), computed exactly by a primitive pseudo-remainder sequence.

    The correction factors of each pseudo-division step are tracked as one
    exact rational multiplier, so the result is the true integer resultant,
    sign included. The resultant against the zero polynomial is 0.
    """
    a = _trim(list(map(int, f)))
    b = _trim(list(map(int, g)))
    if not a or not b:
        return 0
    sign = 1
    mult = Fraction(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        if da < db:
            a, b = b, a
            if (da * db) % 2:
                sign = -sign
            continue
        if db == 0:
            scaled = mult * Fraction(b[0]) ** da
            assert scaled.denominator == 1
            return sign * scaled.numerator
        r = _pseudo_remainder(a, b)
        if not r:
            return 0
        content = 0
        for c in r:
            content = gcd(content, c)
        r = [c // content for c in r]
        dr = len(r) - 1
        if (da * db) % 2:
            sign = -sign
        mult *= Fraction(content) ** db
        mult *= Fraction(b[-1]) ** (da - dr - (da - db + 1) * db)
        a, b = b, r


def circulant_order(first_row: Sequence[int]) -> int:
    """Absolute determinant of the circulant matrix with the given first
    row, i.e. the abelianization order of a cyclic presentation whose
    defining word has that exponent vector. Returns 0 when infinite.

    Computed as |Res(f(x), x^n - 1)| with f the first-row polynomial; the
    determinant of a circulant is the product of f over the n-th roots of
    unity, which is exactly that resultant up to sign.
    """
    n = len(first_row)
    if n == 0:
        raise ValueError("empty first row")
    cyclo = [-1] + [0] * (n - 1) + [1]
    return abs(resultant(list(first_row), cyclo))
