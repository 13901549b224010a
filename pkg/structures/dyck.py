"""Dyck paths over the alphabet {U, D}."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple, Union

from .errors import DyckPathValidationError

UP = "U"
DOWN = "D"


@dataclass(frozen=True)
class DyckPath:
    """Balanced word of n upsteps and n downsteps, no prefix below zero."""

    steps: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.steps, str):
            raise DyckPathValidationError("alphabet {U,D}", f"expected text, got {type(self.steps).__name__}")
        height = 0
        for index, step in enumerate(self.steps):
            if step == UP:
                height += 1
            elif step == DOWN:
                height -= 1
            else:
                raise DyckPathValidationError("alphabet {U,D}", f"step {index} is {step!r}")
            if height < 0:
                raise DyckPathValidationError("prefix balance #U >= #D", f"violated at step {index}")
        if height != 0:
            raise DyckPathValidationError("equal numbers of U and D", f"final height {height}")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps


def ddu_positions(path: Union[DyckPath, str]) -> List[int]:
    """Start indices of the DDU factors, left to right."""

    if not isinstance(path, DyckPath):
        path = DyckPath(path)
    steps = path.steps
    return [index for index in range(len(steps) - 2) if steps[index : index + 3] == "DDU"]


def count_ddu(path: Union[DyckPath, str]) -> int:
    # two DDU factors can never overlap, so a plain scan counts each once
    return len(ddu_positions(path))


def iter_dyck_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength ``n`` in lexicographic order (U before D)."""

    if n < 0:
        raise ValueError(f"semilength must be >= 0, got {n}")
    stack: List[Tuple[str, int, int]] = [("", 0, 0)]
    while stack:
        prefix, ups, downs = stack.pop()
        if ups == n and downs == n:
            yield DyckPath(prefix)
            continue
        if downs < ups:
            stack.append((prefix + DOWN, ups, downs + 1))
        if ups < n:
            stack.append((prefix + UP, ups + 1, downs))


__all__ = ["DOWN", "DyckPath", "UP", "count_ddu", "ddu_positions", "iter_dyck_paths"]
