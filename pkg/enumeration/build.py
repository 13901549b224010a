"""Build a table of any kind from any provenance."""
from __future__ import annotations

from .brute import brute_table
from .closed_forms import closed_table
from .dissections import DEFAULT_CAP
from .recurrences import u_recurrence, v_recurrence
from .tables import Provenance, StatKind, StatTable


def build_table(
    kind: StatKind | str,
    provenance: Provenance | str,
    nmax: int,
    *,
    workers: int = 1,
    cap: int = DEFAULT_CAP,
) -> StatTable:
    kind = StatKind(kind)
    provenance = Provenance(provenance)
    if provenance is Provenance.BRUTE:
        return brute_table(kind, nmax, workers=workers, cap=cap)
    if provenance is Provenance.CLOSED:
        return closed_table(kind, nmax)
    v_table = v_recurrence(nmax)
    if kind is StatKind.V:
        return v_table
    return u_recurrence(nmax, v_table)


__all__ = ["build_table"]
