"""Three-stage bijection from dissections to Dyck paths and its inverse."""

from .chain import STAGES, black_ears_clockwise, dissection_to_dyck, dyck_to_dissection, map_dissection
from .dual_tree import (
    CLOCKWISE,
    COUNTERCLOCKWISE,
    ORIENTATIONS,
    binary_to_dissection,
    dissection_to_binary,
)
from .glove import dyck_to_ordered, ordered_to_dyck
from .natural import binary_to_ordered, ordered_to_binary

__all__ = [
    "CLOCKWISE",
    "COUNTERCLOCKWISE",
    "ORIENTATIONS",
    "STAGES",
    "binary_to_dissection",
    "binary_to_ordered",
    "black_ears_clockwise",
    "dissection_to_binary",
    "dissection_to_dyck",
    "dyck_to_dissection",
    "dyck_to_ordered",
    "map_dissection",
    "ordered_to_binary",
    "ordered_to_dyck",
]
