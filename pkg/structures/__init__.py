"""Dissections, trees, Dyck paths, their statistics and text forms."""

from .dissection import (
    BASE,
    Dissection,
    Edge,
    Triangle,
    black_ear_count,
    crosses,
    ear_count,
    is_base,
    is_side,
    triangles_of,
)
from .dyck import DyckPath, count_ddu, ddu_positions, iter_dyck_paths
from .errors import (
    DissectionValidationError,
    DyckPathValidationError,
    ParseError,
    TreeValidationError,
    ValidationError,
)
from .serialization import (
    binary_from_payload,
    binary_to_payload,
    dissection_from_payload,
    dissection_to_payload,
    ordered_from_payload,
    ordered_to_payload,
    parse_dissection,
    parse_dyck,
    serialize_binary,
    serialize_dissection,
    serialize_dyck,
    serialize_ordered,
)
from .trees import BinaryNode, BinaryTree, OrderedTree, iter_binary_trees, iter_ordered_trees

__all__ = [
    "BASE",
    "BinaryNode",
    "BinaryTree",
    "Dissection",
    "DissectionValidationError",
    "DyckPath",
    "DyckPathValidationError",
    "Edge",
    "OrderedTree",
    "ParseError",
    "Triangle",
    "TreeValidationError",
    "ValidationError",
    "binary_from_payload",
    "binary_to_payload",
    "black_ear_count",
    "count_ddu",
    "crosses",
    "ddu_positions",
    "dissection_from_payload",
    "dissection_to_payload",
    "ear_count",
    "is_base",
    "is_side",
    "iter_binary_trees",
    "iter_dyck_paths",
    "iter_ordered_trees",
    "ordered_from_payload",
    "ordered_to_payload",
    "parse_dissection",
    "parse_dyck",
    "serialize_binary",
    "serialize_dissection",
    "serialize_dyck",
    "serialize_ordered",
    "triangles_of",
]
