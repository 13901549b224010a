"""Canonical text forms.

- Dissection: ``{"n":2,"diagonals":[[0,2]]}`` (compact, pairs ascending and
  sorted), byte-exact.
- DyckPath: the bare step word, e.g. ``UUDDUD``.
- Trees: nested JSON lists. A binary node is ``[left, right]`` with ``null``
  for an absent child; an ordered tree is the list of its subtrees.
"""
from __future__ import annotations

import json
from typing import Any, List, Optional

from .dissection import Dissection
from .dyck import DyckPath
from .errors import ParseError, ValidationError
from .trees import BinaryNode, BinaryTree, OrderedTree

_COMPACT = (",", ":")


def dissection_to_payload(d: Dissection) -> dict:
    return {"n": d.n, "diagonals": [[a, b] for a, b in d.diagonals]}


def serialize_dissection(d: Dissection) -> str:
    return json.dumps(dissection_to_payload(d), separators=_COMPACT)


def dissection_from_payload(payload: Any) -> Dissection:
    if not isinstance(payload, dict):
        raise ParseError("dissection", "top level must be an object")
    missing = [key for key in ("n", "diagonals") if key not in payload]
    if missing:
        raise ParseError("dissection", f"missing keys {missing}")
    n = payload["n"]
    diagonals = payload["diagonals"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError("dissection", "n must be an integer")
    if not isinstance(diagonals, list) or not all(
        isinstance(pair, list) and len(pair) == 2 for pair in diagonals
    ):
        raise ParseError("dissection", "diagonals must be a list of [a, b] pairs")
    try:
        return Dissection(n, [tuple(pair) for pair in diagonals])
    except ValidationError as exc:
        raise ParseError("dissection", f"violates invariant '{exc.invariant}' ({exc.detail})") from exc


def parse_dissection(text: str) -> Dissection:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("dissection", f"malformed JSON: {exc.msg}") from exc
    return dissection_from_payload(payload)


def serialize_dyck(path: DyckPath) -> str:
    return path.steps


def parse_dyck(text: str) -> DyckPath:
    try:
        return DyckPath(text.strip())
    except ValidationError as exc:
        raise ParseError("Dyck path", f"violates invariant '{exc.invariant}' ({exc.detail})") from exc


def _binary_node_payload(node: Optional[BinaryNode]) -> Optional[list]:
    if node is None:
        return None
    return [_binary_node_payload(node.left), _binary_node_payload(node.right)]


def binary_to_payload(tree: BinaryTree) -> Optional[list]:
    return _binary_node_payload(tree.root)


def _binary_node_from_payload(payload: Any) -> Optional[BinaryNode]:
    if payload is None:
        return None
    if not isinstance(payload, list) or len(payload) != 2:
        raise ParseError("binary tree", "each node must be a [left, right] pair")
    return BinaryNode(_binary_node_from_payload(payload[0]), _binary_node_from_payload(payload[1]))


def binary_from_payload(payload: Any) -> BinaryTree:
    return BinaryTree(_binary_node_from_payload(payload))


def ordered_to_payload(tree: OrderedTree) -> List[Any]:
    return [ordered_to_payload(child) for child in tree.children]


def ordered_from_payload(payload: Any) -> OrderedTree:
    if not isinstance(payload, list):
        raise ParseError("ordered tree", "each tree must be a list of subtrees")
    return OrderedTree(tuple(ordered_from_payload(child) for child in payload))


def serialize_binary(tree: BinaryTree) -> str:
    return json.dumps(binary_to_payload(tree), separators=_COMPACT)


def serialize_ordered(tree: OrderedTree) -> str:
    return json.dumps(ordered_to_payload(tree), separators=_COMPACT)


__all__ = [
    "binary_from_payload",
    "binary_to_payload",
    "dissection_from_payload",
    "dissection_to_payload",
    "ordered_from_payload",
    "ordered_to_payload",
    "parse_dissection",
    "parse_dyck",
    "serialize_binary",
    "serialize_dissection",
    "serialize_dyck",
    "serialize_ordered",
]
