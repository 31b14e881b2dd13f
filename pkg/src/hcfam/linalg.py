"""Exact Gaussian elimination over Q(i).

Rows are sparse dicts ``column -> GaussianRational``; the systems built by
the section matcher and the center probe are very sparse, so fill-in stays
small.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .arith import ONE, ZERO, GaussianRational

SparseRow = dict[int, GaussianRational]


def _clean(row: SparseRow) -> SparseRow:
    return {j: v for j, v in row.items() if v}


def rref(rows: Iterable[SparseRow]) -> tuple[list[SparseRow], list[int]]:
    """Reduced row echelon form; returns ``(rows, pivot_columns)``, pivots ascending."""
    pivots: dict[int, SparseRow] = {}
    for raw in rows:
        row = _clean(raw)
        # pivot rows are zero in every other pivot column, so one pass suffices
        for col in [c for c in row if c in pivots]:
            f = row.get(col)
            if not f:
                continue
            for j, v in pivots[col].items():
                nv = row.get(j, ZERO) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        if not row:
            continue
        col = min(row)
        inv = row[col].inv()
        row = {j: v * inv for j, v in row.items()}
        # eliminate the new pivot column from the existing pivot rows
        for prow in pivots.values():
            f = prow.get(col)
            if f:
                for j, v in row.items():
                    nv = prow.get(j, ZERO) - f * v
                    if nv:
                        prow[j] = nv
                    else:
                        prow.pop(j, None)
        pivots[col] = row
    cols = sorted(pivots)
    return [pivots[c] for c in cols], cols


def nullspace(rows: Iterable[SparseRow], ncols: int) -> list[list[GaussianRational]]:
    """Basis of ``{v : row . v == 0 for every row}`` as dense vectors of length ``ncols``.

    One vector per free column, with a 1 at that column, so the basis is in
    echelon form with respect to the free columns.
    """
    reduced, pivot_cols = rref(rows)
    pivot_set = set(pivot_cols)
    for c in pivot_cols:
        if c >= ncols:
            raise ValueError("row entry outside the declared column range")
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for c, row in zip(pivot_cols, reduced):
            coef = row.get(free)
            if coef:
                v[c] = -coef
        basis.append(v)
    return basis


def rank(matrix: Sequence[Sequence[GaussianRational]]) -> int:
    rows = [{j: v for j, v in enumerate(r) if v} for r in matrix]
    return len(rref(rows)[1])


def det(matrix: Sequence[Sequence[GaussianRational]]) -> GaussianRational:
    n = len(matrix)
    a = [list(r) for r in matrix]
    result = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        p = a[col][col]
        result = result * p
        inv = p.inv()
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                for c in range(col, n):
                    a[r][c] = a[r][c] - f * a[col][c]
    return result


def solve_in_span(basis: Sequence[Sequence[GaussianRational]],
                  target: Sequence[GaussianRational]) -> bool:
    """True iff ``target`` lies in the span of ``basis``."""
    return rank(list(basis) + [target]) == rank(basis) if basis else not any(target)
