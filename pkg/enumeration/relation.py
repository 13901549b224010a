"""Entrywise check of u(n,k) = v(n,k) + 2 v(n-1,k-1) - 2 v(n-1,k).

Absent entries (including the whole row n = 0) count as zero. Violations
are collected into the report, never raised.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from common.logging import get_logger

from .build import build_table
from .tables import Provenance, StatKind, StatTable

LOGGER = get_logger(__name__)


@dataclass(frozen=True)
class RelationViolation:
    n: int
    k: int
    lhs: int
    rhs: int


@dataclass
class RelationReport:
    nmax: int
    provenance: str
    checked: int = 0
    violations: List[RelationViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_payload(self) -> Dict[str, Any]:
        return {
            "identity": "relation",
            "nmax": self.nmax,
            "provenance": self.provenance,
            "checked": self.checked,
            "pass": self.passed,
            "failures": [
                {"n": item.n, "k": item.k, "lhs": str(item.lhs), "rhs": str(item.rhs)}
                for item in self.violations
            ],
        }


def relation_check(
    nmax: int,
    *,
    u: Optional[StatTable] = None,
    v: Optional[StatTable] = None,
    provenance: Provenance | str = Provenance.CLOSED,
) -> RelationReport:
    """Check every n in 1..nmax and every k that any of the four terms touches."""

    provenance = Provenance(provenance)
    if u is None:
        u = build_table(StatKind.U, provenance, nmax)
    if v is None:
        v = build_table(StatKind.V, provenance, nmax)
    label = u.provenance.value if u.provenance == v.provenance else f"{u.provenance.value}/{v.provenance.value}"
    report = RelationReport(nmax=nmax, provenance=label)
    for n in range(1, nmax + 1):
        for k in range(0, n // 2 + 3):
            lhs = u.get(n, k)
            rhs = v.get(n, k) + 2 * v.get(n - 1, k - 1) - 2 * v.get(n - 1, k)
            report.checked += 1
            if lhs != rhs:
                report.violations.append(RelationViolation(n, k, lhs, rhs))
    if report.passed:
        LOGGER.info("Relation holds for all %s cells with n<=%s", report.checked, nmax)
    else:
        LOGGER.warning("Relation fails at %s cells: %s", len(report.violations), report.violations[:5])
    return report


__all__ = ["RelationReport", "RelationViolation", "relation_check"]
