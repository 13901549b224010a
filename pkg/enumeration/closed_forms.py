"""Closed forms for v(n, k) and u(n, k)."""
from __future__ import annotations

from exactmath import InexactDivisionError, binomial, catalan, exact_div, pow2

from .recurrences import U_BASE_VALUES
from .tables import Provenance, StatKind, StatTable


class FormulaConsistencyError(RuntimeError):
    """Two evaluations of the same closed form disagree or do not divide."""


def v_closed(n: int, k: int) -> int:
    """v(n, k) = 2^(n+1-2k) * binom(n-1, 2k-2) * C(k-1)."""

    if n < 1:
        raise ValueError(f"v_closed requires n >= 1, got {n}")
    if k < 1 or 2 * k - 2 > n - 1:
        return 0
    return pow2(n + 1 - 2 * k) * binomial(n - 1, 2 * k - 2) * catalan(k - 1)


def u_closed_two_term(n: int, k: int) -> int:
    """u(n, k) = 2^(n+1-2k) (binom(n-2, 2k-3) C(k-1) + 4 binom(n-2, 2k-4) C(k-2)).

    The power can go negative on a vanishing term, so each term carries its
    own power of two: 2^(n+1-2k) and 4 * 2^(n+1-2k) = 2^(n+3-2k).
    """

    if n < 2 or k < 2:
        return 0
    total = 0
    first = binomial(n - 2, 2 * k - 3)
    if first:
        total += pow2(n + 1 - 2 * k) * first * catalan(k - 1)
    second = binomial(n - 2, 2 * k - 4)
    if second:
        total += pow2(n + 3 - 2 * k) * second * catalan(k - 2)
    return total


def u_closed_fraction(n: int, k: int) -> int:
    """u(n, k+1) = 2^(n-2k) binom(n, 2k) C(k) (n+2) k / (n(n-1)), shifted to u(n, k)."""

    if n < 2 or k < 2:
        return 0
    j = k - 1
    if 2 * j > n:
        return 0
    numerator = pow2(n - 2 * j) * binomial(n, 2 * j) * catalan(j) * (n + 2) * j
    return exact_div(numerator, n * (n - 1), context=f"u_closed({n},{k})")


def u_closed(n: int, k: int) -> int:
    """u(n, k) for n >= 2; both closed forms are evaluated and must agree."""

    if n < 2:
        raise ValueError(f"u_closed requires n >= 2, got {n}")
    if not 2 <= k <= (n + 2) // 2:
        return 0
    try:
        simplified = u_closed_fraction(n, k)
    except InexactDivisionError as exc:
        raise FormulaConsistencyError(str(exc)) from exc
    two_term = u_closed_two_term(n, k)
    if simplified != two_term:
        raise FormulaConsistencyError(
            f"u_closed({n},{k}): simplified form {simplified} != two-term form {two_term}"
        )
    return simplified


def closed_table(kind: StatKind | str, nmax: int) -> StatTable:
    """Closed-form table; the u row n=1 is the base value u(1,1)=1."""

    kind = StatKind(kind)
    if nmax < 1:
        raise ValueError(f"nmax must be >= 1, got {nmax}")
    entries = {}
    for n in range(1, nmax + 1):
        if kind is StatKind.V:
            for k in range(1, (n + 1) // 2 + 1):
                entries[(n, k)] = v_closed(n, k)
        elif n == 1:
            entries[(1, 1)] = U_BASE_VALUES[(1, 1)]
        else:
            for k in range(2, (n + 2) // 2 + 1):
                entries[(n, k)] = u_closed(n, k)
    return StatTable(kind, Provenance.CLOSED, nmax, entries)


__all__ = [
    "FormulaConsistencyError",
    "closed_table",
    "u_closed",
    "u_closed_fraction",
    "u_closed_two_term",
    "v_closed",
]
