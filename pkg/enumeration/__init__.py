"""Exhaustive generation of dissections and the u/v statistic tables."""

from .brute import brute_table, brute_tables
from .build import build_table
from .closed_forms import (
    FormulaConsistencyError,
    closed_table,
    u_closed,
    u_closed_fraction,
    u_closed_two_term,
    v_closed,
)
from .ddu import ddu_closed, ddu_distribution, ddu_row, flatten_triangle
from .dissections import DEFAULT_CAP, EnumerationRangeError, enumerate_dissections
from .recurrences import DependencyError, u_recurrence, v_recurrence
from .relation import RelationReport, RelationViolation, relation_check
from .tables import Provenance, StatKind, StatTable, compare_tables, parse_csv

__all__ = [
    "DEFAULT_CAP",
    "DependencyError",
    "EnumerationRangeError",
    "FormulaConsistencyError",
    "Provenance",
    "RelationReport",
    "RelationViolation",
    "StatKind",
    "StatTable",
    "brute_table",
    "brute_tables",
    "build_table",
    "closed_table",
    "compare_tables",
    "ddu_closed",
    "ddu_distribution",
    "ddu_row",
    "enumerate_dissections",
    "flatten_triangle",
    "parse_csv",
    "relation_check",
    "u_closed",
    "u_closed_fraction",
    "u_closed_two_term",
    "u_recurrence",
    "v_closed",
    "v_recurrence",
]
