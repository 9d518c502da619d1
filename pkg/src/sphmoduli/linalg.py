"""Exact linear algebra over the rationals.

Matrices are lists of rows, entries are Fractions.  Everything here is
deterministic and allocation-happy; sizes stay small (a few hundred rows
at most), so clarity wins over cleverness.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Vec = list
Mat = list


def fvec(entries: Sequence) -> Vec:
    return [Fraction(e) for e in entries]


def fmat(rows: Sequence[Sequence]) -> Mat:
    return [fvec(r) for r in rows]


def zeros(n: int) -> Vec:
    return [Fraction(0)] * n


def mat_vec(m: Mat, v: Sequence) -> Vec:
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in m]


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = [row[:] for row in m]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(m: Mat) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def solve_unique(a: Mat, b: Sequence) -> Optional[Vec]:
    """Solve a*x = b when the columns of `a` are independent.

    Returns the unique solution, or None when the system is inconsistent.
    Raises ValueError if the columns are dependent (no unique solution).
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if cols == 0:
        return [] if all(x == 0 for x in b) else None
    aug = [list(a[i]) + [Fraction(b[i])] for i in range(rows)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    if len(pivots) != cols:
        raise ValueError("columns are linearly dependent")
    x = zeros(cols)
    for r, c in enumerate(pivots):
        x[c] = red[r][cols]
    return x


def nullspace(a: Mat, cols: int) -> list[Vec]:
    """Basis of {x : a*x = 0}, for `a` with `cols` columns."""
    if cols == 0:
        return []
    if not a:
        basis = []
        for j in range(cols):
            v = zeros(cols)
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    red, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = zeros(cols)
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def in_span(basis: list[Vec], v: Sequence) -> bool:
    if not basis:
        return all(x == 0 for x in v)
    stacked = [list(row) for row in basis]
    r0 = rank(stacked)
    stacked.append(list(v))
    return rank(stacked) == r0


def span_intersection(a_basis: list[Vec], b_basis: list[Vec]) -> list[Vec]:
    """Basis of span(a) n span(b); all vectors of equal length."""
    if not a_basis or not b_basis:
        return []
    dim = len(a_basis[0])
    # Columns are [a1..ap | b1..bq]; kernel elements give intersection vectors.
    cols = len(a_basis) + len(b_basis)
    m = []
    for i in range(dim):
        m.append([a_basis[k][i] for k in range(len(a_basis))]
                 + [-b_basis[k][i] for k in range(len(b_basis))])
    result = []
    for ker in nullspace(m, cols):
        v = zeros(dim)
        for k, coeff in enumerate(ker[: len(a_basis)]):
            if coeff:
                v = [x + coeff * y for x, y in zip(v, a_basis[k])]
        if any(x != 0 for x in v):
            result.append(v)
    return independent_subset(result)


def independent_subset(vectors: list[Vec]) -> list[Vec]:
    """Greedy maximal independent sublist, preserving order."""
    kept: list[Vec] = []
    kept_rows: list[Vec] = []
    for v in vectors:
        if not kept_rows:
            if any(x != 0 for x in v):
                kept.append(v)
                kept_rows = [list(v)]
            continue
        trial = kept_rows + [list(v)]
        if rank(trial) > len(kept):
            kept.append(v)
            kept_rows = trial
    return kept


def reduce_mod(basis: list[Vec], vectors: list[Vec]) -> list[Vec]:
    """Sublist of `vectors` independent modulo span(basis)."""
    kept: list[Vec] = []
    current = [list(b) for b in basis]
    base_rank = rank(current) if current else 0
    for v in vectors:
        trial = current + [list(v)]
        if rank(trial) > base_rank + len(kept):
            kept.append(v)
            current = trial
    return kept
