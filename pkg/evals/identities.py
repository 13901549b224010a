"""Exact checks of the Catalan identities.

Fractional summands are never evaluated on their own: each sum is computed
with a common denominator cleared and divided once at the end through
``exact_div``, so a transcription error shows up as an exception instead of
a rounded value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from common.logging import get_logger
from enumeration.closed_forms import v_closed
from enumeration.relation import RelationReport, relation_check
from enumeration.tables import Provenance
from exactmath import InexactDivisionError, binomial, catalan, exact_div, pow2

LOGGER = get_logger(__name__)

ARITHMETIC_CAP = 200


class UnknownIdentityError(ValueError):
    """``verify`` was asked for an identity it does not know."""


class IdentityConsistencyError(RuntimeError):
    """A denominator did not divide, or two exact evaluations disagree."""


@dataclass(frozen=True)
class IdentityCheck:
    n: int
    lhs: int
    rhs: int
    k: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class IdentityReport:
    identity: str
    nmin: int
    nmax: int
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.passed]

    def to_payload(self) -> Dict[str, Any]:
        failures = []
        for check in self.failures:
            entry: Dict[str, Any] = {"n": check.n, "lhs": str(check.lhs), "rhs": str(check.rhs)}
            if check.k is not None:
                entry["k"] = check.k
            failures.append(entry)
        return {
            "identity": self.identity,
            "nmin": self.nmin,
            "nmax": self.nmax,
            "checked": len(self.checks),
            "pass": self.passed,
            "failures": failures,
        }


def _divide(numerator: int, denominator: int, context: str) -> int:
    try:
        return exact_div(numerator, denominator, context=context)
    except InexactDivisionError as exc:
        raise IdentityConsistencyError(str(exc)) from exc


def touchard_summand(n: int, k: int) -> int:
    return pow2(n - 2 * k) * binomial(n, 2 * k) * catalan(k)


def main_rhs(n: int) -> int:
    """sum_{1<=k<=n/2} 2^(n-2k) binom(n,2k) C(k) k(n+2) / (n(n-1)), for n >= 2."""

    if n < 2:
        raise ValueError(f"main identity needs n >= 2, got {n}")
    numerator = sum(touchard_summand(n, k) * k * (n + 2) for k in range(1, n // 2 + 1))
    return _divide(numerator, n * (n - 1), f"main_rhs({n})")


def touchard_rhs(n: int) -> int:
    """sum_{0<=k<=n/2} 2^(n-2k) binom(n,2k) C(k)."""

    if n < 0:
        raise ValueError(f"Touchard identity needs n >= 0, got {n}")
    return sum(touchard_summand(n, k) for k in range(0, n // 2 + 1))


def amdeberhan_lhs(n: int) -> int:
    """2n C(n+1) / (n+3)."""

    return _divide(2 * n * catalan(n + 1), n + 3, f"amdeberhan_lhs({n})")


def amdeberhan_rhs(n: int) -> int:
    """sum_{0<=k<=(n-1)/2} 2^(n-2k) binom(n,2k+1) C(k) (2k+1)/(k+2)."""

    if n < 0:
        raise ValueError(f"Amdeberhan identity needs n >= 0, got {n}")
    ks = range(0, (n - 1) // 2 + 1) if n >= 1 else range(0)
    denominator = math.lcm(*(k + 2 for k in ks)) if ks else 1
    numerator = sum(
        pow2(n - 2 * k) * binomial(n, 2 * k + 1) * catalan(k) * (2 * k + 1) * (denominator // (k + 2))
        for k in ks
    )
    return _divide(numerator, denominator, f"amdeberhan_rhs({n})")


def super_ballot_value(n: int) -> int:
    """6 C(n+1) / (n+3)."""

    if n < 0:
        raise ValueError(f"super ballot number needs n >= 0, got {n}")
    return _divide(6 * catalan(n + 1), n + 3, f"super_ballot({n})")


def super_ballot_difference(n: int) -> int:
    """Twice Touchard's sum minus Amdeberhan's sum."""

    return 2 * touchard_rhs(n) - amdeberhan_rhs(n)


def super_ballot(n: int) -> int:
    value = super_ballot_value(n)
    difference = super_ballot_difference(n)
    if value != difference:
        raise IdentityConsistencyError(
            f"super_ballot({n}): 6C/(n+3)={value} but 2*touchard-amdeberhan={difference}"
        )
    return value


SidesFn = Callable[[int], int]

_IDENTITIES: Dict[str, Tuple[int, SidesFn, SidesFn]] = {
    "main": (2, catalan, main_rhs),
    "touchard": (0, lambda n: catalan(n + 1), touchard_rhs),
    "amdeberhan": (1, amdeberhan_lhs, amdeberhan_rhs),
    "superballot": (0, super_ballot_value, super_ballot_difference),
}
IDENTITY_NAMES = tuple(_IDENTITIES) + ("relation", "touchard-summand")
_EXTRA_LOWER_LIMITS = {"relation": 1, "touchard-summand": 0}


def lower_limit(identity: str) -> int:
    """Smallest n the identity is stated for."""

    if identity in _IDENTITIES:
        return _IDENTITIES[identity][0]
    if identity in _EXTRA_LOWER_LIMITS:
        return _EXTRA_LOWER_LIMITS[identity]
    raise UnknownIdentityError(f"unknown identity {identity!r}; expected one of {IDENTITY_NAMES}")


def applicable_identities(nmax: int) -> List[str]:
    return [name for name in IDENTITY_NAMES if lower_limit(name) <= nmax]


def touchard_summand_check(nmax: int) -> IdentityReport:
    """Each Touchard summand equals v(n+1, k+1)."""

    report = IdentityReport("touchard-summand", 0, nmax)
    for n in range(0, nmax + 1):
        for k in range(0, n // 2 + 1):
            report.checks.append(IdentityCheck(n, touchard_summand(n, k), v_closed(n + 1, k + 1), k=k))
    return report


def verify(
    identity: str,
    nmax: int,
    *,
    provenance: Provenance | str = Provenance.CLOSED,
    cap: int = ARITHMETIC_CAP,
) -> Union[IdentityReport, RelationReport]:
    """Check ``identity`` for every n from its lower limit to ``nmax``."""

    name = (identity or "").strip().lower()
    if name not in IDENTITY_NAMES:
        raise UnknownIdentityError(f"unknown identity {identity!r}; expected one of {IDENTITY_NAMES}")
    if nmax > cap:
        raise ValueError(f"nmax {nmax} exceeds the arithmetic cap {cap}")
    if nmax < lower_limit(name):
        raise ValueError(f"identity {name} starts at n={lower_limit(name)}; nmax {nmax} checks nothing")
    if name == "relation":
        return relation_check(nmax, provenance=provenance)
    if name == "touchard-summand":
        report = touchard_summand_check(nmax)
    else:
        nmin, lhs_fn, rhs_fn = _IDENTITIES[name]
        report = IdentityReport(name, nmin, nmax)
        for n in range(nmin, nmax + 1):
            report.checks.append(IdentityCheck(n, lhs_fn(n), rhs_fn(n)))
    if report.passed:
        LOGGER.info("Identity %s holds for %s..%s", name, report.nmin, nmax)
    else:
        LOGGER.warning("Identity %s fails at n=%s", name, [check.n for check in report.failures])
    return report


def verify_all(nmax: int, *, provenance: Provenance | str = Provenance.CLOSED) -> List[Union[IdentityReport, RelationReport]]:
    return [verify(name, nmax, provenance=provenance) for name in applicable_identities(nmax)]


__all__ = [
    "IDENTITY_NAMES",
    "IdentityCheck",
    "IdentityConsistencyError",
    "IdentityReport",
    "UnknownIdentityError",
    "amdeberhan_lhs",
    "amdeberhan_rhs",
    "applicable_identities",
    "lower_limit",
    "main_rhs",
    "super_ballot",
    "super_ballot_difference",
    "super_ballot_value",
    "touchard_rhs",
    "touchard_summand",
    "touchard_summand_check",
    "verify",
    "verify_all",
]
