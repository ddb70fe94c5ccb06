"""Fraction-free exact linear algebra for small dense rational matrices.

Bareiss elimination keeps every intermediate entry an integer (each is a
minor of the input), so coefficient swell stays bounded by determinant
size. All matrices here are tiny (catalecticants and Sylvester blocks,
at most a few dozen rows), so no attention is paid to sparsity.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


def _as_int_rows(rows: list[list[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Clear denominators row by row. Returns integer rows and the scale of each."""
    out = []
    scales = []
    for row in rows:
        den = 1
        for x in row:
            xd = x.denominator if isinstance(x, Fraction) else 1
            den = den * xd // gcd(den, xd)
        out.append([int(x * den) for x in row])
        scales.append(den)
    return out, scales


def _exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise ArithmeticError("Bareiss division was not exact")
    return q


def int_row_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Returns (echelon rows, pivot column indices). Row order below the
    pivots is deterministic: the first row with a nonzero entry in the
    current column is promoted.
    """
    m = len(rows)
    if m == 0:
        return [], []
    n = len(rows[0])
    a = [list(r) for r in rows]
    pivots: list[int] = []
    prev = 1
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        # every row below is rescaled each step, zero multiplier or not,
        # otherwise the next division by prev is no longer exact
        for i in range(rank + 1, m):
            q = a[i][col]
            ri, rr = a[i], a[rank]
            for c in range(n):
                ri[c] = _exact_div(p * ri[c] - q * rr[c], prev)
        prev = p
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    return a, pivots


def matrix_rank(rows: list[list[Fraction]]) -> int:
    int_rows, _ = _as_int_rows(rows)
    _, pivots = int_row_echelon(int_rows)
    return len(pivots)


def primitive_vector(v: list[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector.

    Deterministic: the first nonzero entry comes out positive.
    """
    den = 1
    for x in v:
        xd = x.denominator if isinstance(x, Fraction) else 1
        den = den * xd // gcd(den, xd)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def kernel_basis(rows: list[list[Fraction]], ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of the right kernel, one vector per free column.

    Basis vectors are ordered by free column index and normalized by
    primitive_vector, so repeated calls give identical output.
    """
    if not rows:
        basis = []
        for fc in range(ncols):
            v = [0] * ncols
            v[fc] = 1
            basis.append(tuple(v))
        return basis
    int_rows, _ = _as_int_rows(rows)
    ech, pivots = int_row_echelon(int_rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for k in reversed(range(len(pivots))):
            pc = pivots[k]
            row = ech[k]
            s = Fraction(0)
            for c in range(pc + 1, ncols):
                if row[c] and v[c]:
                    s += Fraction(row[c]) * v[c]
            v[pc] = -s / row[pc]
        basis.append(primitive_vector(v))
    return basis


def det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant via Bareiss with row pivoting."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    int_rows, scales = _as_int_rows(rows)
    a = int_rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return Fraction(0)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            q = a[i][k]
            for c in range(k + 1, n):
                a[i][c] = _exact_div(p * a[i][c] - q * a[k][c], prev)
            a[i][k] = 0
        prev = p
    scale = 1
    for s in scales:
        scale *= s
    return Fraction(sign * a[n - 1][n - 1], scale)


def solve(a_rows: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Solve a square rational system by Gaussian elimination.

    Returns None when the matrix is singular. Used only for tiny systems
    (Gram matrices of kernel bases), so plain Fraction pivoting is fine.
    """
    n = len(a_rows)
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a_rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        for i in range(n):
            if i == col or aug[i][col] == 0:
                continue
            factor = aug[i][col] / inv
            for c in range(col, n + 1):
                aug[i][c] -= factor * aug[col][c]
    return [aug[i][n] / aug[i][i] for i in range(n)]
