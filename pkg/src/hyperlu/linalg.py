"""Exact rational row reduction and nullspaces."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    A = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(A):
            break
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}, one vector per free column."""
    R, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def primitive_integer(v: Sequence) -> list[int]:
    """Scale a rational vector to coprime integers with first nonzero entry positive."""
    fr = [Fraction(x) for x in v]
    d = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * d) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return [-x for x in ints] if lead < 0 else ints


def canonical_basis(vectors: Sequence[Sequence]) -> list[list[int]]:
    """Reduced-echelon basis of the span, each row made primitive-integer."""
    if not vectors:
        return []
    R, _ = rref(vectors)
    return [primitive_integer(row) for row in R]


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0]) if rows else 0


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    return canonical_basis(a) == canonical_basis(b)
