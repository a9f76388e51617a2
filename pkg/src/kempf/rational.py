"""Exact rational linear algebra on tuples of ``Fraction``.

Matrices are tuples of row tuples. Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import NotInvertible, ShapeMismatch

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use int or 'p/q'")
    return Fraction(value)


def vector(values: Iterable) -> Vector:
    return tuple(as_fraction(v) for v in values)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(vector(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ShapeMismatch("ragged matrix")
    return m


def square(rows: Iterable[Iterable]) -> Matrix:
    m = matrix(rows)
    if any(len(r) != len(m) for r in m):
        raise ShapeMismatch(f"expected a square matrix, got {len(m)} rows")
    return m


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple(tuple(Fraction(0) for _ in range(m)) for _ in range(n))


def unit(n: int, i: int, j: int) -> Matrix:
    """The matrix unit E_ij (0-based)."""
    return tuple(
        tuple(Fraction(int(r == i and c == j)) for c in range(n)) for r in range(n)
    )


def diagonal(entries: Sequence) -> Matrix:
    n = len(entries)
    return tuple(
        tuple(as_fraction(entries[i]) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    n = sum(len(b) for b in blocks)
    rows = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                rows[off + i][off + j] = v
        off += len(b)
    return tuple(tuple(r) for r in rows)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ShapeMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x...")
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((as_fraction(x) * y for x, y in zip(u, v)), Fraction(0))


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(c, a: Matrix) -> Matrix:
    c = as_fraction(c)
    return tuple(tuple(c * x for x in r) for r in a)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return sub(matmul(a, b), matmul(b, a))


def power(a: Matrix, k: int) -> Matrix:
    result = identity(len(a))
    for _ in range(k):
        result = matmul(result, a)
    return result


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for r in a for x in r)


def is_diagonal(a: Matrix) -> bool:
    return all(a[i][j] == 0 for i in range(len(a)) for j in range(len(a)) if i != j)


def submatrix(a: Matrix, coords: Sequence[int]) -> Matrix:
    return tuple(tuple(a[i][j] for j in coords) for i in coords)


def conjugate(g: Matrix, a: Matrix, g_inv: Matrix | None = None) -> Matrix:
    """Return g a g^-1."""
    if g_inv is None:
        g_inv = inverse(g)
    return matmul(matmul(g, a), g_inv)


def rref(a: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [[as_fraction(x) for x in r] for r in a]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(a: Sequence[Sequence]) -> int:
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of {v : a v = 0}; one vector per free column, unit in that column."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    rows, pivots = rref(a)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(a: Matrix, b: Sequence) -> Vector:
    """Solve a x = b for square nonsingular a."""
    n = len(a)
    aug = [list(a[i]) + [as_fraction(b[i])] for i in range(n)]
    rows, pivots = rref(aug)
    if pivots != list(range(n)):
        raise NotInvertible("singular linear system")
    return tuple(rows[i][n] for i in range(n))


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(a[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise NotInvertible("matrix is singular")
    return tuple(tuple(rows[i][n:]) for i in range(n))


def det(a: Matrix) -> Fraction:
    rows = [list(r) for r in a]
    n = len(rows)
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        p = rows[c][c]
        result *= p
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def leading_minors(a: Matrix) -> list[Fraction]:
    return [det(tuple(tuple(r[:k]) for r in a[:k])) for k in range(1, len(a) + 1)]


def lcm_denominators(v: Iterable[Fraction]) -> int:
    out = 1
    for x in v:
        d = x.denominator
        out = out * d // gcd(out, d)
    return out


def primitive_integer_vector(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest positive multiple of v with coprime integer entries."""
    m = lcm_denominators(v)
    ints = [int(x * m) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive multiple")
    return tuple(x // g for x in ints)
