"""Binary trees and ordered (plane) trees.

Both are immutable nested values, so acyclicity and a single root hold by
construction. Sizes are cached at construction time to keep the bijection
stages linear.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Tuple


@dataclass(frozen=True)
class BinaryNode:
    left: Optional["BinaryNode"] = None
    right: Optional["BinaryNode"] = None
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        size = 1
        if self.left is not None:
            size += self.left.size
        if self.right is not None:
            size += self.right.size
        object.__setattr__(self, "size", size)


@dataclass(frozen=True)
class BinaryTree:
    """A binary tree on ``n`` nodes; ``root is None`` is the empty tree."""

    root: Optional[BinaryNode] = None

    @property
    def n(self) -> int:
        return 0 if self.root is None else self.root.size


@dataclass(frozen=True)
class OrderedTree:
    """A root with an ordered sequence of subtrees; ``edges`` counts all edges."""

    children: Tuple["OrderedTree", ...] = ()
    edges: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        children = tuple(self.children)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "edges", sum(child.edges + 1 for child in children))


def _binary_nodes(n: int) -> Iterator[Optional[BinaryNode]]:
    if n == 0:
        yield None
        return
    for left_size in range(n):
        for left in _binary_nodes(left_size):
            for right in _binary_nodes(n - 1 - left_size):
                yield BinaryNode(left, right)


def iter_binary_trees(n: int) -> Iterator[BinaryTree]:
    """Every binary tree on ``n`` nodes, smaller left subtrees first."""

    if n < 0:
        raise ValueError(f"node count must be >= 0, got {n}")
    for root in _binary_nodes(n):
        yield BinaryTree(root)


def _forests(n: int) -> Iterator[Tuple[OrderedTree, ...]]:
    if n == 0:
        yield ()
        return
    for first_edges in range(n):
        for first in _forests(first_edges):
            for rest in _forests(n - 1 - first_edges):
                yield (OrderedTree(first),) + rest


def iter_ordered_trees(n: int) -> Iterator[OrderedTree]:
    """Every ordered tree with ``n`` edges."""

    if n < 0:
        raise ValueError(f"edge count must be >= 0, got {n}")
    for forest in _forests(n):
        yield OrderedTree(forest)


__all__ = ["BinaryNode", "BinaryTree", "OrderedTree", "iter_binary_trees", "iter_ordered_trees"]
