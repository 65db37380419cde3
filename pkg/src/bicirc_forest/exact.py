"""Exact integer determinants and the brute-force forest count."""

from __future__ import annotations

from typing import Sequence

from .errors import NotSquare
from .graph import BicirculantSpec, BigMatrix, forest_matrix

__all__ = ["ORACLE_MAX_VERTICES", "det_exact", "forest_count_oracle"]

# Above this many vertices the closed formulas are authoritative.
ORACLE_MAX_VERTICES = 200


def det_exact(m: BigMatrix | Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination.

    Every intermediate quotient is exact (Sylvester's identity), so the
    whole computation stays in Python integers.
    """
    rows = m.to_rows() if isinstance(m, BigMatrix) else [list(map(int, r)) for r in m]
    size = len(rows)
    if size == 0 or any(len(r) != size for r in rows):
        raise NotSquare(f"determinant needs a square matrix, got {size} rows")
    a = [r[:] for r in rows]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[-1][-1]


def forest_count_oracle(spec: BicirculantSpec) -> int:
    """Number of rooted spanning forests as det(I + L), by elimination."""
    value = det_exact(forest_matrix(spec))
    assert value >= 1, f"det(I+L) must be positive, got {value}"
    return value
