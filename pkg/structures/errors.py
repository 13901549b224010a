"""Exceptions raised by the combinatorial structures."""
from __future__ import annotations


class ValidationError(ValueError):
    """A structure violates one of its invariants."""

    def __init__(self, invariant: str, detail: str = "") -> None:
        self.invariant = invariant
        self.detail = detail
        message = f"{invariant}: {detail}" if detail else invariant
        super().__init__(message)


class DissectionValidationError(ValidationError):
    pass


class DyckPathValidationError(ValidationError):
    pass


class TreeValidationError(ValidationError):
    pass


class ParseError(ValueError):
    """Text or JSON that cannot be turned into a structure."""

    def __init__(self, kind: str, reason: str) -> None:
        self.kind = kind
        self.reason = reason
        super().__init__(f"cannot parse {kind}: {reason}")


__all__ = [
    "DissectionValidationError",
    "DyckPathValidationError",
    "ParseError",
    "TreeValidationError",
    "ValidationError",
]
