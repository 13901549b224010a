"""u/v tables from the decomposition by the base triangle's apex.

For apex r = 1 or r = n the base triangle leaves one sub-polygon of n-1
triangles; for 2 <= r <= n-1 it leaves two, of r-1 and n-r triangles, whose
black ears add up. That gives

    v(n, k) = 2 v(n-1, k)   + S(n, k)
    u(n, k) = 2 v(n-1, k-1) + S(n, k)
    S(n, k) = sum_{r=2}^{n-1} sum_j v(r-1, j) v(n-r, k-j)

The inner sum runs over every j, absent entries being zero, which covers the
fractional-looking bounds without any floor/ceiling choice.
"""
from __future__ import annotations

from typing import Dict, Optional, Tuple

from common.logging import get_logger

from .brute import brute_table
from .tables import Provenance, StatKind, StatTable

LOGGER = get_logger(__name__)

SEED_ROWS = 3
U_BASE_VALUES: Dict[Tuple[int, int], int] = {(1, 1): 1, (2, 2): 2, (3, 2): 5}

Rows = Dict[int, Dict[int, int]]


class DependencyError(RuntimeError):
    """A table needed by a recurrence does not reach far enough."""


def _convolve_into(total: Dict[int, int], first: Dict[int, int], second: Dict[int, int], weight: int) -> None:
    for j, left in first.items():
        for i, right in second.items():
            total[i + j] = total.get(i + j, 0) + weight * left * right


def _split_sums(rows: Rows, n: int) -> Dict[int, int]:
    """S(n, k) for every k, from the pairs of sub-polygons of a and b triangles, a + b = n - 1."""

    total: Dict[int, int] = {}
    for a in range(1, (n - 1) // 2 + 1):
        b = n - 1 - a
        # (a, b) and (b, a) contribute the same convolution
        _convolve_into(total, rows.get(a, {}), rows.get(b, {}), 1 if a == b else 2)
    return total


def _check_nmax(nmax: int) -> None:
    if not isinstance(nmax, int) or nmax < 1:
        raise ValueError(f"nmax must be a positive integer, got {nmax!r}")


def v_recurrence(nmax: int, seed: Optional[StatTable] = None) -> StatTable:
    """v(n, k) for n <= nmax; rows n <= 3 come from ``seed`` (brute force by default)."""

    _check_nmax(nmax)
    if seed is None:
        seed = brute_table(StatKind.V, min(SEED_ROWS, nmax))
    if seed.kind is not StatKind.V or seed.nmax < min(SEED_ROWS, nmax):
        raise DependencyError(f"v recurrence needs v rows 1..{min(SEED_ROWS, nmax)} as seed")
    rows: Rows = {n: seed.row(n) for n in range(1, min(SEED_ROWS, nmax) + 1)}
    for n in range(SEED_ROWS + 1, nmax + 1):
        previous = rows[n - 1]
        split = _split_sums(rows, n)
        row: Dict[int, int] = {}
        for k in range(1, n + 1):
            value = 2 * previous.get(k, 0) + split.get(k, 0)
            if value:
                row[k] = value
        rows[n] = row
        LOGGER.debug("v recurrence row n=%s: %s", n, row)
    entries = {(n, k): value for n, row in rows.items() for k, value in row.items()}
    return StatTable(StatKind.V, Provenance.RECURRENCE, nmax, entries)


def u_recurrence(nmax: int, v: StatTable) -> StatTable:
    """u(n, k) for n <= nmax from a v table reaching at least nmax-1."""

    _check_nmax(nmax)
    if v.kind is not StatKind.V:
        raise DependencyError(f"u recurrence needs a v table, got {v.kind.value}")
    if nmax > SEED_ROWS and v.nmax < nmax - 1:
        raise DependencyError(f"u recurrence up to n={nmax} needs v rows through {nmax - 1}, have {v.nmax}")
    rows = v.rows()
    entries = {cell: value for cell, value in U_BASE_VALUES.items() if cell[0] <= nmax}
    for n in range(SEED_ROWS + 1, nmax + 1):
        previous = rows.get(n - 1, {})
        split = _split_sums(rows, n)
        for k in range(2, (n + 2) // 2 + 1):
            value = 2 * previous.get(k - 1, 0) + split.get(k, 0)
            if value:
                entries[(n, k)] = value
    return StatTable(StatKind.U, Provenance.RECURRENCE, nmax, entries)


__all__ = ["DependencyError", "U_BASE_VALUES", "u_recurrence", "v_recurrence"]
