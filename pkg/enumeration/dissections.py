"""Streaming enumeration of dissections.

The triangle on the base is chosen first (its positive apex ``r``
ascending), then the sub-polygon between 0 and ``r`` is triangulated, then
the one between ``r`` and -1, each in the same order recursively. Nothing is
materialized beyond the current dissection.
"""
from __future__ import annotations

from typing import Iterator, Optional, Tuple

from common.logging import get_logger
from structures.dissection import Dissection

LOGGER = get_logger(__name__)

DEFAULT_CAP = 14

InternalTriangle = Tuple[int, int, int]


class EnumerationRangeError(ValueError):
    """Requested size is outside 1..cap."""


def _triangulations(i: int, j: int) -> Iterator[Tuple[InternalTriangle, ...]]:
    if j - i < 2:
        yield ()
        return
    for m in range(i + 1, j):
        for left in _triangulations(i, m):
            for right in _triangulations(m, j):
                yield ((i, m, j),) + left + right


def _build(n: int, triangles: Tuple[InternalTriangle, ...]) -> Dissection:
    return Dissection.from_apexes(n, {(i, j): m for i, m, j in triangles})


def check_size(n: int, cap: int = DEFAULT_CAP) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= cap:
        raise EnumerationRangeError(f"n must be in 1..{cap}, got {n!r}")


def _stream(n: int, apexes: range) -> Iterator[Dissection]:
    top = n + 1
    for r in apexes:
        LOGGER.debug("Enumerating n=%s with base apex r=%s", n, r)
        for left in _triangulations(0, r):
            for right in _triangulations(r, top):
                yield _build(n, ((0, r, top),) + left + right)


def enumerate_dissections(
    n: int,
    *,
    apex: Optional[int] = None,
    cap: int = DEFAULT_CAP,
) -> Iterator[Dissection]:
    """Yield each of the C_n dissections of the (n+2)-gon exactly once.

    ``apex`` restricts the stream to dissections whose base triangle has
    that positive vertex; the union over ``apex`` in 1..n is the full stream.
    """

    check_size(n, cap)
    if apex is None:
        apexes = range(1, n + 1)
    else:
        if not 1 <= apex <= n:
            raise EnumerationRangeError(f"apex must be in 1..{n}, got {apex}")
        apexes = range(apex, apex + 1)
    return _stream(n, apexes)


__all__ = ["DEFAULT_CAP", "EnumerationRangeError", "check_size", "enumerate_dissections"]
