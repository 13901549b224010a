"""Dyck paths counted by their number of DDU factors."""
from __future__ import annotations

from collections import Counter
from typing import Dict, List

from exactmath import binomial, catalan, pow2
from structures.dyck import count_ddu, iter_dyck_paths


def ddu_closed(n: int, k: int) -> int:
    """2^(n-1-2k) binom(n-1, 2k) C(k); the empty path has no DDU."""

    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or 2 * k > n - 1:
        return 0
    return pow2(n - 1 - 2 * k) * binomial(n - 1, 2 * k) * catalan(k)


def ddu_row(n: int) -> Dict[int, int]:
    """Counts for semilength ``n`` by walking every path."""

    counts = Counter(count_ddu(path) for path in iter_dyck_paths(n))
    return dict(sorted(counts.items()))


def ddu_distribution(nmax: int, *, start: int = 1) -> Dict[int, Dict[int, int]]:
    return {n: ddu_row(n) for n in range(start, nmax + 1)}


def flatten_triangle(rows: Dict[int, Dict[int, int]]) -> List[int]:
    """Rows in ascending n, k ascending inside each row, zeros dropped."""

    flat: List[int] = []
    for n in sorted(rows):
        row = rows[n]
        flat.extend(row[k] for k in sorted(row) if row[k])
    return flat


__all__ = ["ddu_closed", "ddu_distribution", "ddu_row", "flatten_triangle"]
