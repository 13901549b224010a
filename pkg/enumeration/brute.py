"""Brute-force u/v tables: walk every dissection and count ears."""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Tuple

from common.logging import get_logger
from structures.dissection import black_ear_count, ear_count

from .dissections import DEFAULT_CAP, check_size, enumerate_dissections
from .tables import Provenance, StatKind, StatTable

LOGGER = get_logger(__name__)

Partition = Tuple[int, int]


def _count_partition(partition: Partition) -> Tuple[int, Counter, Counter]:
    n, apex = partition
    ears: Counter = Counter()
    black: Counter = Counter()
    for dissection in enumerate_dissections(n, apex=apex, cap=n):
        ears[ear_count(dissection)] += 1
        black[black_ear_count(dissection)] += 1
    return n, ears, black


def _partitions(nmax: int) -> List[Partition]:
    return [(n, apex) for n in range(1, nmax + 1) for apex in range(1, n + 1)]


def _collect(results: Iterable[Tuple[int, Counter, Counter]]) -> Tuple[Dict, Dict]:
    u_entries: Dict[Tuple[int, int], int] = {}
    v_entries: Dict[Tuple[int, int], int] = {}
    for n, ears, black in results:
        for k, count in ears.items():
            u_entries[(n, k)] = u_entries.get((n, k), 0) + count
        for k, count in black.items():
            v_entries[(n, k)] = v_entries.get((n, k), 0) + count
    return u_entries, v_entries


def brute_tables(
    nmax: int,
    *,
    workers: int = 1,
    cap: int = DEFAULT_CAP,
) -> Tuple[StatTable, StatTable]:
    """Both tables from a single pass over the dissections of size 1..nmax.

    With ``workers > 1`` the pass is split by base apex across processes;
    counts are summed, so the result does not depend on scheduling.
    """

    check_size(nmax, cap)
    partitions = _partitions(nmax)
    if workers > 1:
        LOGGER.info("Counting ears for n<=%s with %s workers", nmax, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_count_partition, partitions))
    else:
        results = [_count_partition(partition) for partition in partitions]
    u_entries, v_entries = _collect(results)
    LOGGER.info("Brute-force tables built for n<=%s", nmax)
    return (
        StatTable(StatKind.U, Provenance.BRUTE, nmax, u_entries),
        StatTable(StatKind.V, Provenance.BRUTE, nmax, v_entries),
    )


def brute_table(
    kind: StatKind | str,
    nmax: int,
    *,
    workers: int = 1,
    cap: int = DEFAULT_CAP,
) -> StatTable:
    u_table, v_table = brute_tables(nmax, workers=workers, cap=cap)
    return u_table if StatKind(kind) is StatKind.U else v_table


__all__ = ["brute_table", "brute_tables"]
