"""Exact integer arithmetic for Catalan numbers, binomials and powers of two.

Indices are plain machine integers; values are Python ints, so nothing
overflows. Every division goes through :func:`exact_div`, which refuses to
round.
"""
from __future__ import annotations

import functools
import math

Nat = int


class InexactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""

    def __init__(self, numerator: int, denominator: int, context: str = "") -> None:
        self.numerator = numerator
        self.denominator = denominator
        self.context = context
        where = f" in {context}" if context else ""
        super().__init__(f"{numerator} is not divisible by {denominator}{where}")


def exact_div(numerator: Nat, denominator: int, *, context: str = "") -> Nat:
    """Divide, asserting a zero remainder."""

    if denominator == 0:
        raise ZeroDivisionError(f"exact_div by zero{' in ' + context if context else ''}")
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(numerator, denominator, context)
    return quotient


def binomial(n: int, k: int) -> Nat:
    """n choose k, zero outside 0 <= k <= n."""

    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@functools.lru_cache(maxsize=None)
def catalan(n: int) -> Nat:
    """The n-th Catalan number, memoized by n."""

    if n < 0:
        raise ValueError(f"catalan requires n >= 0, got {n}")
    return exact_div(math.comb(2 * n, n), n + 1, context="catalan")


def pow2(m: int) -> Nat:
    if m < 0:
        raise ValueError(f"pow2 requires m >= 0, got {m}")
    return 1 << m


__all__ = ["InexactDivisionError", "Nat", "binomial", "catalan", "exact_div", "pow2"]
