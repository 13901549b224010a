"""Dissection <-> binary tree through the dual tree.

The triangle on the base is the root. The triangle on an edge (i, j) with
apex m has two children, the sub-polygons on (i, m) and (m, j); polygon
sides give absent children, so a dissection of n triangles becomes a binary
tree on n nodes.

Orientation: ``"clockwise"`` (the default) makes the left child the
sub-polygon met first when walking clockwise from the base, i.e. the one on
(m, j). This is the convention that sends the n=8 example dissection with
diagonals {-1,4},{-1,5},{-1,7},{0,3},{0,4},{1,3},{5,7} to the path
UUUUDDUDDDUDUUDD. ``"counterclockwise"`` is the mirror image. The DDU
count law holds for both, since the number of DDUs only depends on how many
nodes have two children.
"""
from __future__ import annotations

from typing import Dict, Optional, Tuple

from structures.dissection import Dissection
from structures.errors import TreeValidationError
from structures.trees import BinaryNode, BinaryTree

CLOCKWISE = "clockwise"
COUNTERCLOCKWISE = "counterclockwise"
ORIENTATIONS = (CLOCKWISE, COUNTERCLOCKWISE)


def _check_orientation(orientation: str) -> bool:
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    return orientation == CLOCKWISE


def dissection_to_binary(d: Dissection, orientation: str = CLOCKWISE) -> BinaryTree:
    clockwise = _check_orientation(orientation)
    apexes: Dict[Tuple[int, int], int] = {(i, j): m for i, m, j in d.internal_triangles()}

    def node(i: int, j: int) -> Optional[BinaryNode]:
        m = apexes.get((i, j))
        if m is None:
            return None
        low, high = node(i, m), node(m, j)
        if clockwise:
            return BinaryNode(left=high, right=low)
        return BinaryNode(left=low, right=high)

    return BinaryTree(node(0, d.n + 1))


def binary_to_dissection(tree: BinaryTree, orientation: str = CLOCKWISE) -> Dissection:
    clockwise = _check_orientation(orientation)
    if tree.root is None:
        raise TreeValidationError("n >= 1", "the empty tree has no dissection")
    apexes: Dict[Tuple[int, int], int] = {}

    def place(current: BinaryNode, i: int, j: int) -> None:
        low = current.right if clockwise else current.left
        high = current.left if clockwise else current.right
        m = i + (low.size if low is not None else 0) + 1
        apexes[(i, j)] = m
        if low is not None:
            place(low, i, m)
        if high is not None:
            place(high, m, j)

    place(tree.root, 0, tree.n + 1)
    return Dissection.from_apexes(tree.n, apexes)


__all__ = [
    "CLOCKWISE",
    "COUNTERCLOCKWISE",
    "ORIENTATIONS",
    "binary_to_dissection",
    "dissection_to_binary",
]
