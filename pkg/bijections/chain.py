"""Dissection -> binary tree -> ordered tree -> Dyck path, and back.

Black ears of the dissection are exactly the leaves of the binary tree, and
DDU factors of the path are exactly its nodes with two children, so the
path has one DDU fewer than the dissection has black ears.
"""
from __future__ import annotations

from typing import List, Union

from structures.dissection import Dissection, Triangle, to_label
from structures.dyck import DyckPath
from structures.errors import DissectionValidationError

from .dual_tree import CLOCKWISE, binary_to_dissection, dissection_to_binary
from .glove import dyck_to_ordered, ordered_to_dyck
from .natural import binary_to_ordered, ordered_to_binary

STAGES = ("binary", "ordered", "dyck")


def dissection_to_dyck(d: Dissection, orientation: str = CLOCKWISE) -> DyckPath:
    return ordered_to_dyck(binary_to_ordered(dissection_to_binary(d, orientation)))


def dyck_to_dissection(path: Union[DyckPath, str], orientation: str = CLOCKWISE) -> Dissection:
    if not isinstance(path, DyckPath):
        path = DyckPath(path)
    if path.semilength < 1:
        raise DissectionValidationError("n >= 1", "the empty path has no dissection")
    return binary_to_dissection(ordered_to_binary(dyck_to_ordered(path)), orientation)


def map_dissection(d: Dissection, to: str, orientation: str = CLOCKWISE):
    """Image of ``d`` at the requested stage."""

    if to not in STAGES:
        raise ValueError(f"unknown stage {to!r}; expected one of {STAGES}")
    binary = dissection_to_binary(d, orientation)
    if to == "binary":
        return binary
    ordered = binary_to_ordered(binary)
    if to == "ordered":
        return ordered
    return ordered_to_dyck(ordered)


def black_ears_clockwise(d: Dissection) -> List[Triangle]:
    """Black ears ordered by their tip vertex, clockwise from the base."""

    n = d.n
    ears = []
    for i, m, j in d.internal_triangles():
        if m - i == 1 and j - m == 1:
            labels = sorted((to_label(i, n), to_label(m, n), to_label(j, n)))
            ears.append((m, Triangle((labels[0], labels[1], labels[2]))))
    ears.sort(key=lambda item: item[0], reverse=True)
    return [triangle for _, triangle in ears]


__all__ = ["STAGES", "black_ears_clockwise", "dissection_to_dyck", "dyck_to_dissection", "map_dissection"]
