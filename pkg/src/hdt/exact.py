"""Exact rational scalars, vectors and small dense matrices.

Everything runs on Python's arbitrary-precision ``Fraction``; no rounding
can occur anywhere in this module.  Matrices are tiny (at most the rank of
a Lie algebra, 8), so plain Gaussian elimination with the first nonzero
pivot is all we need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


class SingularMatrixError(ValueError):
    """A linear solve met a matrix that is singular over the rationals."""


def rat(x) -> Fraction:
    """Coerce an int, Fraction or decimal string to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        # exact binary value of the float, not a decimal re-reading
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


def rational_vector(entries: Iterable) -> tuple[Fraction, ...]:
    return tuple(rat(e) for e in entries)


def rational_arith(a, b, op: str) -> Fraction:
    """Combine two rationals with one of add/sub/mul/div.

    Division by zero raises ``ZeroDivisionError``.  Results are always in
    lowest terms with positive denominator (a ``Fraction`` invariant).
    """
    a, b = rat(a), rat(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def mat_vec(m: Sequence[Sequence], v: Sequence) -> tuple[Fraction, ...]:
    if len(m) and len(m[0]) != len(v):
        raise ValueError("dimension mismatch")
    return tuple(sum((rat(mij) * rat(vj) for mij, vj in zip(row, v)), Fraction(0)) for row in m)


def solve_linear(m: Sequence[Sequence], v: Sequence) -> tuple[Fraction, ...]:
    """Solve m x = v exactly for square invertible m over the rationals.

    Gaussian elimination, pivoting on the first nonzero entry of each
    column (no numerical strategy is needed over Q).
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if len(v) != n:
        raise ValueError("dimension mismatch")
    aug = [[rat(x) for x in row] + [rat(v[i])] for i, row in enumerate(m)]

    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular over the rationals")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        piv = aug[col][col]
        for r in range(n):
            if r == col:
                continue
            factor = aug[r][col] / piv
            if factor == 0:
                continue
            for c in range(col, n + 1):
                aug[r][c] -= factor * aug[col][c]

    return tuple(aug[r][n] / aug[r][r] for r in range(n))


def invert_matrix(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse of a small square rational matrix (column by column)."""
    n = len(m)
    cols = []
    for j in range(n):
        e = [Fraction(0)] * n
        e[j] = Fraction(1)
        cols.append(solve_linear(m, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]
