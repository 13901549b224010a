from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

REPO_ROOT = Path(__file__).resolve().parents[1]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from exactmath import InexactDivisionError, binomial, catalan, exact_div, pow2


def _pascal_rows(size: int) -> list[list[int]]:
    rows = [[1]]
    for _ in range(size):
        previous = rows[-1]
        rows.append([1] + [previous[i] + previous[i + 1] for i in range(len(previous) - 1)] + [1])
    return rows


def test_binomial_examples() -> None:
    assert binomial(7, 0) == 1
    assert binomial(3, 4) == 0
    assert binomial(5, 2) == 10
    assert binomial(4, -1) == 0


def test_binomial_matches_pascal_triangle() -> None:
    for n, row in enumerate(_pascal_rows(40)):
        assert [binomial(n, k) for k in range(n + 1)] == row


def test_catalan_examples() -> None:
    assert catalan(0) == 1
    assert catalan(3) == 5
    assert catalan(8) == 1430
    assert catalan(11) == 58786


def test_catalan_satisfies_segner_recurrence() -> None:
    for n in range(1, 60):
        assert catalan(n) == sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


def test_pow2_examples() -> None:
    assert pow2(0) == 1
    assert pow2(1) == 2
    assert pow2(10) == 1024
    with pytest.raises(ValueError):
        pow2(-1)


def test_exact_div_rejects_remainder() -> None:
    assert exact_div(42, 7) == 6
    with pytest.raises(InexactDivisionError):
        exact_div(43, 7, context="catalan(3)")


@given(st.integers(min_value=0, max_value=300), st.integers(min_value=0, max_value=300))
def test_binomial_symmetry(n: int, k: int) -> None:
    if k > n:
        assert binomial(n, k) == 0
    else:
        assert binomial(n, k) == binomial(n, n - k)


@given(st.integers(min_value=1, max_value=300), st.integers(min_value=1, max_value=300))
def test_binomial_pascal_rule(n: int, k: int) -> None:
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(min_value=0, max_value=500))
def test_catalan_central_binomial_form(n: int) -> None:
    assert catalan(n) * (n + 1) == binomial(2 * n, n)
