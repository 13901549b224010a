"""Binary tree <-> ordered tree (left child = first child, right child = next sibling).

The binary tree on n nodes becomes the forest of its right-chain from the
root; a planted root on top of that forest gives one ordered tree with n
edges. The empty binary tree maps to the root-only tree.
"""
from __future__ import annotations

from typing import List, Optional, Tuple

from structures.trees import BinaryNode, BinaryTree, OrderedTree


def _forest(node: Optional[BinaryNode]) -> Tuple[OrderedTree, ...]:
    trees: List[OrderedTree] = []
    while node is not None:
        trees.append(OrderedTree(_forest(node.left)))
        node = node.right
    return tuple(trees)


def binary_to_ordered(tree: BinaryTree) -> OrderedTree:
    return OrderedTree(_forest(tree.root))


def _chain(children: Tuple[OrderedTree, ...]) -> Optional[BinaryNode]:
    node: Optional[BinaryNode] = None
    for child in reversed(children):
        node = BinaryNode(left=_chain(child.children), right=node)
    return node


def ordered_to_binary(tree: OrderedTree) -> BinaryTree:
    return BinaryTree(_chain(tree.children))


__all__ = ["binary_to_ordered", "ordered_to_binary"]
