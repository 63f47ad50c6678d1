"""Small exact linear algebra over QQ (Fractions) and GF(p)."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

import numpy as np

from . import _kernels

Matrix = List[List[Fraction]]


def to_fractions(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, List[int]]:
    A = to_fractions(rows)
    if not A:
        return A, []
    m, n = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of the right kernel, one vector per row."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    A, piv = rref(rows)
    n = len(A[0])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, c in enumerate(piv):
            v[c] = -A[r][f]
        basis.append(v)
    return basis


def inverse(rows: Sequence[Sequence]) -> Matrix:
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    A, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in A]


def complete_to_basis(rows: Sequence[Sequence], n: int) -> Matrix:
    """Append standard unit rows until ``rows`` span the whole space."""
    out = to_fractions(rows)
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        if rank(out + [e]) > len(out):
            out.append(e)
        if len(out) == n:
            break
    return out


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    A = np.array([[int(v) % p for v in row] for row in rows], dtype=np.int64)
    if A.size == 0:
        return 0
    return int(_kernels.rank_mod_p(A, p))
