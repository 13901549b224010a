from __future__ import annotations

import sys
from pathlib import Path
from unittest import TestCase
from unittest.mock import patch

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from enumeration import RelationReport
from evals import identities
from evals.identities import (
    IDENTITY_NAMES,
    IdentityCheck,
    IdentityConsistencyError,
    IdentityReport,
    UnknownIdentityError,
    amdeberhan_lhs,
    amdeberhan_rhs,
    main_rhs,
    super_ballot,
    super_ballot_difference,
    touchard_rhs,
    touchard_summand_check,
    applicable_identities,
    lower_limit,
    verify,
    verify_all,
)
from exactmath import catalan


def test_main_identity_examples() -> None:
    assert main_rhs(2) == 2
    assert main_rhs(5) == 42
    assert main_rhs(9) == 4862
    with pytest.raises(ValueError):
        main_rhs(1)


def test_touchard_examples() -> None:
    assert touchard_rhs(0) == 1
    assert touchard_rhs(2) == 5
    assert touchard_rhs(10) == 58786


def test_amdeberhan_examples() -> None:
    assert amdeberhan_lhs(1) == amdeberhan_rhs(1) == 1
    assert amdeberhan_lhs(2) == amdeberhan_rhs(2) == 4
    assert amdeberhan_lhs(0) == amdeberhan_rhs(0) == 0


def test_super_ballot_values() -> None:
    assert [super_ballot(n) for n in range(5)] == [2, 3, 6, 14, 36]
    assert all(super_ballot_difference(n) == super_ballot(n) for n in range(60))


@pytest.mark.parametrize("name", ["main", "touchard", "amdeberhan", "superballot"])
def test_identities_hold_up_to_fifty(name: str) -> None:
    report = verify(name, 50)
    assert report.passed
    payload = report.to_payload()
    assert payload["identity"] == name
    assert payload["pass"] is True
    assert payload["failures"] == []


def test_main_identity_checked_from_two() -> None:
    report = verify("main", 10)
    assert [check.n for check in report.checks] == list(range(2, 11))
    assert all(check.lhs == catalan(check.n) for check in report.checks)


def test_large_n_stays_exact() -> None:
    report = verify("main", 200)
    assert report.passed
    assert report.checks[-1].lhs == catalan(200)


def test_relation_wrapped_by_verify() -> None:
    report = verify("relation", 12, provenance="brute")
    assert isinstance(report, RelationReport)
    assert report.passed


def test_touchard_summands_are_black_ear_counts() -> None:
    report = touchard_summand_check(24)
    assert report.passed
    assert len(report.checks) == sum(n // 2 + 1 for n in range(25))


def test_verify_all_runs_every_identity() -> None:
    reports = verify_all(20)
    assert len(reports) == len(IDENTITY_NAMES)
    assert all(report.passed for report in reports)


def test_verify_rejects_bad_arguments() -> None:
    with pytest.raises(UnknownIdentityError):
        verify("pythagoras", 10)
    with pytest.raises(ValueError):
        verify("main", 201)


def test_range_below_the_lower_limit_is_rejected() -> None:
    with pytest.raises(ValueError):
        verify("main", 1)
    with pytest.raises(ValueError):
        verify("amdeberhan", 0)
    assert lower_limit("relation") == 1
    with pytest.raises(UnknownIdentityError):
        lower_limit("pythagoras")


def test_verify_all_skips_identities_that_start_later() -> None:
    assert "main" not in applicable_identities(1)
    assert applicable_identities(0) == ["touchard", "superballot", "touchard-summand"]
    reports = verify_all(1)
    assert len(reports) == len(IDENTITY_NAMES) - 1
    assert all(report.passed and report.to_payload()["checked"] > 0 for report in reports)


def test_failure_payload_uses_decimal_strings() -> None:
    report = IdentityReport("main", 2, 3, [IdentityCheck(2, 2, 2), IdentityCheck(3, 5, 6)])
    assert not report.passed
    assert report.to_payload()["failures"] == [{"n": 3, "lhs": "5", "rhs": "6"}]


class SuperBallotConsistencyTests(TestCase):
    def test_disagreeing_evaluations_raise(self) -> None:
        with patch.object(identities, "super_ballot_difference", return_value=0):
            with self.assertRaises(IdentityConsistencyError):
                super_ballot(3)

    def test_inexact_division_is_an_internal_error(self) -> None:
        with patch.object(identities, "catalan", return_value=7):
            with self.assertRaises(IdentityConsistencyError):
                identities.super_ballot_value(1)

    def test_report_mismatch_is_not_an_exception(self) -> None:
        broken = (0, lambda n: catalan(n + 1), lambda n: 0)
        with patch.dict(identities._IDENTITIES, {"touchard": broken}):
            report = verify("touchard", 3)
        self.assertFalse(report.passed)
        self.assertEqual([check.n for check in report.failures], [0, 1, 2, 3])
