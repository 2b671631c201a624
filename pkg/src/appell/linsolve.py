"""Exact Gaussian elimination over Q."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def solve_exact(rows: Sequence[Sequence], rhs: Sequence):
    """Solve A c = b exactly.

    Returns one solution as a list of Fractions (free variables set to zero),
    or ``None`` when the system is inconsistent.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [vi - factor * vr for vi, vr in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][-1] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][-1]
    return sol


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    m = len(rows)
    ncols = len(rows[0])
    mat = [[Fraction(v) for v in row] for row in rows]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, m):
            if mat[i][c] != 0:
                factor = mat[i][c] / mat[r][c]
                mat[i] = [vi - factor * vr for vi, vr in zip(mat[i], mat[r])]
        r += 1
    return r
