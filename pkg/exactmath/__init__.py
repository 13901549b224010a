"""Exact arithmetic primitives."""

from .numbers import InexactDivisionError, Nat, binomial, catalan, exact_div, pow2

__all__ = ["InexactDivisionError", "Nat", "binomial", "catalan", "exact_div", "pow2"]
