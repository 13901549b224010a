"""Ordered tree <-> Dyck path: walk around the tree, U going down an edge, D coming back."""
from __future__ import annotations

from typing import List, Union

from structures.dyck import DOWN, UP, DyckPath
from structures.serialization import ordered_from_payload
from structures.trees import OrderedTree


def ordered_to_dyck(tree: OrderedTree) -> DyckPath:
    steps: List[str] = []

    def walk(node: OrderedTree) -> None:
        for child in node.children:
            steps.append(UP)
            walk(child)
            steps.append(DOWN)

    walk(tree)
    return DyckPath("".join(steps))


def dyck_to_ordered(path: Union[DyckPath, str]) -> OrderedTree:
    if not isinstance(path, DyckPath):
        path = DyckPath(path)
    root: list = []
    stack = [root]
    for step in path.steps:
        if step == UP:
            child: list = []
            stack[-1].append(child)
            stack.append(child)
        else:
            stack.pop()
    return ordered_from_payload(root)


__all__ = ["dyck_to_ordered", "ordered_to_dyck"]
