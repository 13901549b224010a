"""Triangle dissections of a based convex (n+2)-gon.

Vertices carry the labels -1, 0, 1, ..., n counterclockwise from the left
endpoint of the base, so the base is the side {-1, 0}. All public
interfaces speak these labels. Internally vertex -1 is moved to position
n+1, which turns every sub-polygon hanging off an edge into a contiguous
index range ``i..j`` with the base being ``(0, n+1)``.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import DissectionValidationError

Edge = Tuple[int, int]
InternalEdge = Tuple[int, int]
BASE: Edge = (-1, 0)


def to_internal(label: int, n: int) -> int:
    return n + 1 if label == -1 else label


def to_label(index: int, n: int) -> int:
    return -1 if index == n + 1 else index


def normalize_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def is_side(a: int, b: int, n: int) -> bool:
    """True when {a, b} is a side of the (n+2)-gon (the base included)."""

    a, b = normalize_edge(a, b)
    return b - a == 1 or (a == -1 and b == n)


def is_base(a: int, b: int) -> bool:
    return normalize_edge(a, b) == BASE


def crosses(first: Edge, second: Edge) -> bool:
    """Strict interleaving of endpoints in circular order.

    Labels already increase counterclockwise from -1, so circular order is
    plain integer order. Chords sharing an endpoint never cross.
    """

    a, b = normalize_edge(*first)
    c, d = normalize_edge(*second)
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class Triangle:
    """A triangle of a dissection, vertices ascending from -1."""

    vertices: Tuple[int, int, int]

    def edges(self) -> Tuple[Edge, Edge, Edge]:
        a, b, c = self.vertices
        return ((a, b), (b, c), (a, c))

    def side_count(self, n: int) -> int:
        return sum(1 for a, b in self.edges() if is_side(a, b, n))

    def black_side_count(self, n: int) -> int:
        return sum(1 for a, b in self.edges() if is_side(a, b, n) and not is_base(a, b))


def _validate(n: int, diagonals: Sequence[Edge]) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DissectionValidationError("n >= 1", f"got n={n!r}")
    for a, b in diagonals:
        for label in (a, b):
            if not isinstance(label, int) or isinstance(label, bool) or not -1 <= label <= n:
                raise DissectionValidationError(
                    "labels in -1..n", f"diagonal {{{a},{b}}} has label {label!r} outside -1..{n}"
                )
        if a == b:
            raise DissectionValidationError("distinct endpoints", f"degenerate diagonal {{{a},{b}}}")
        if is_side(a, b, n):
            raise DissectionValidationError(
                "diagonals join nonadjacent vertices", f"{{{a},{b}}} is a polygon side"
            )
    if len(set(diagonals)) != len(diagonals):
        raise DissectionValidationError("distinct diagonals", "a diagonal is listed twice")
    if len(diagonals) != n - 1:
        raise DissectionValidationError(
            "exactly n-1 diagonals", f"n={n} needs {n - 1}, got {len(diagonals)}"
        )
    for index, first in enumerate(diagonals):
        for second in diagonals[index + 1 :]:
            if crosses(first, second):
                raise DissectionValidationError(
                    "noncrossing diagonals",
                    f"{{{first[0]},{first[1]}}} crosses {{{second[0]},{second[1]}}}",
                )


@dataclass(frozen=True)
class Dissection:
    """A triangulation given by its n-1 diagonals.

    Any iterable of pairs is accepted; the stored form is canonical (pairs
    ascending, sorted lexicographically) and is validated on construction.
    """

    n: int
    diagonals: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        try:
            canonical = tuple(sorted(normalize_edge(a, b) for a, b in self.diagonals))
        except (TypeError, ValueError) as exc:
            raise DissectionValidationError("diagonals are pairs of integers", str(exc)) from exc
        object.__setattr__(self, "diagonals", canonical)
        _validate(self.n, canonical)

    @classmethod
    def construct(
        cls,
        n: int,
        diagonals: Tuple[Edge, ...],
        apexes: Dict[InternalEdge, int],
    ) -> "Dissection":
        """Build without validation, like pydantic's ``model_construct``.

        The enumerator produces canonical diagonals together with the
        preorder apex map, so both are trusted as given.
        """

        instance = object.__new__(cls)
        object.__setattr__(instance, "n", n)
        object.__setattr__(instance, "diagonals", diagonals)
        instance.__dict__["_apexes"] = apexes
        return instance

    @classmethod
    def from_apexes(cls, n: int, apexes: Dict[InternalEdge, int]) -> "Dissection":
        """Trusted build from a preorder apex map in internal positions."""

        diagonals: List[Edge] = []
        for (i, j), m in apexes.items():
            if m - i > 1:
                diagonals.append(normalize_edge(to_label(i, n), to_label(m, n)))
            if j - m > 1:
                diagonals.append(normalize_edge(to_label(m, n), to_label(j, n)))
        diagonals.sort()
        return cls.construct(n, tuple(diagonals), apexes)

    @functools.cached_property
    def _apexes(self) -> Dict[InternalEdge, int]:
        """Apex of the triangle on each diagonal/base, preorder from the base."""

        n = self.n
        top = n + 1
        neighbors: List[set[int]] = [set() for _ in range(n + 2)]
        for index in range(top):
            neighbors[index].add(index + 1)
            neighbors[index + 1].add(index)
        neighbors[0].add(top)
        neighbors[top].add(0)
        for a, b in self.diagonals:
            i, j = to_internal(a, n), to_internal(b, n)
            neighbors[i].add(j)
            neighbors[j].add(i)

        apexes: Dict[InternalEdge, int] = {}
        stack: List[InternalEdge] = [(0, top)]
        while stack:
            i, j = stack.pop()
            if j - i < 2:
                continue
            candidates = [m for m in range(i + 1, j) if m in neighbors[i] and m in neighbors[j]]
            if len(candidates) != 1:
                raise DissectionValidationError(
                    "triangulation", f"edge ({to_label(i, n)},{to_label(j, n)}) has {len(candidates)} apexes"
                )
            m = candidates[0]
            apexes[(i, j)] = m
            stack.append((m, j))
            stack.append((i, m))
        return apexes

    def internal_triangles(self) -> Iterable[Tuple[int, int, int]]:
        """Triangles as ``(i, m, j)`` in internal positions, preorder."""

        for (i, j), m in self._apexes.items():
            yield i, m, j

    def apex_on(self, a: int, b: int) -> Optional[int]:
        """Apex of the triangle on the far side of {a, b} as seen from the base.

        Defined for the base and every diagonal; ``None`` for other sides.
        """

        i, j = sorted((to_internal(a, self.n), to_internal(b, self.n)))
        apex = self._apexes.get((i, j))
        return None if apex is None else to_label(apex, self.n)

    def mirror(self) -> "Dissection":
        """Reflection that fixes the base and swaps its endpoints."""

        size = self.n + 2

        def reflect(label: int) -> int:
            return (self.n + 2 - label) % size - 1

        return Dissection(self.n, [(reflect(a), reflect(b)) for a, b in self.diagonals])


def triangles_of(d: Dissection) -> List[Triangle]:
    """The n triangles of ``d``, starting with the one on the base."""

    n = d.n
    triangles: List[Triangle] = []
    for i, m, j in d.internal_triangles():
        a, b, c = sorted((to_label(i, n), to_label(m, n), to_label(j, n)))
        triangles.append(Triangle((a, b, c)))
    return triangles


def _side_counts(d: Dissection) -> Iterable[Tuple[int, int]]:
    base = (0, d.n + 1)
    for i, m, j in d.internal_triangles():
        black = (m - i == 1) + (j - m == 1)
        yield black + ((i, j) == base), black


def ear_count(d: Dissection) -> int:
    """Triangles with at least two polygon sides, the base counting as one."""

    return sum(1 for sides, _ in _side_counts(d) if sides >= 2)


def black_ear_count(d: Dissection) -> int:
    """Triangles with at least two non-base polygon sides."""

    return sum(1 for _, black in _side_counts(d) if black >= 2)


__all__ = [
    "BASE",
    "Dissection",
    "Edge",
    "Triangle",
    "black_ear_count",
    "crosses",
    "ear_count",
    "is_base",
    "is_side",
    "normalize_edge",
    "to_internal",
    "to_label",
    "triangles_of",
]
