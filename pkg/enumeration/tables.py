"""Statistic tables u(n, k) and v(n, k)."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Any, Dict, Iterator, List, Mapping, Tuple

Cell = Tuple[int, int]


class StatKind(str, Enum):
    U = "u"  # ears: two polygon sides, base included
    V = "v"  # black ears: two non-base sides


class Provenance(str, Enum):
    BRUTE = "brute"
    RECURRENCE = "recurrence"
    CLOSED = "closed"


@dataclass(frozen=True)
class StatTable:
    """Exact values for 1 <= n <= nmax; only nonzero entries are stored."""

    kind: StatKind
    provenance: Provenance
    nmax: int
    entries: Mapping[Cell, int]
    _rows: Dict[int, Dict[int, int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        cleaned = {
            (int(n), int(k)): int(value)
            for (n, k), value in sorted(self.entries.items())
            if value and 1 <= n <= self.nmax
        }
        object.__setattr__(self, "kind", StatKind(self.kind))
        object.__setattr__(self, "provenance", Provenance(self.provenance))
        object.__setattr__(self, "entries", MappingProxyType(cleaned))
        rows: Dict[int, Dict[int, int]] = {}
        for (n, k), value in cleaned.items():
            rows.setdefault(n, {})[k] = value
        object.__setattr__(self, "_rows", rows)

    def get(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def row(self, n: int) -> Dict[int, int]:
        return dict(self._rows.get(n, {}))

    def rows(self) -> Dict[int, Dict[int, int]]:
        """Nonzero entries grouped by n, copied."""

        return {n: dict(row) for n, row in self._rows.items()}

    def row_sum(self, n: int) -> int:
        return sum(self.row(n).values())

    def cells(self) -> Iterator[Tuple[int, int, int]]:
        for (n, k), value in self.entries.items():
            yield n, k, value

    def to_payload(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "provenance": self.provenance.value,
            "nmax": self.nmax,
            "entries": [{"n": n, "k": k, "value": str(value)} for n, k, value in self.cells()],
        }

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "k", "value"])
        for n, k, value in self.cells():
            writer.writerow([n, k, str(value)])
        return buffer.getvalue()

    def render_text(self) -> str:
        """Rows n, columns k, blanks for zero, like the printed table."""

        if not self.entries:
            return f"{self.kind.value}({self.provenance.value}): empty\n"
        columns = sorted({k for _, k in self.entries})
        rows = sorted({n for n, _ in self.entries})
        cells = {cell: str(value) for cell, value in self.entries.items()}
        width = max(len(text) for text in cells.values())
        width = max(width, max(len(str(k)) for k in columns))
        head_width = max(len("n\\k"), max(len(str(n)) for n in rows))
        header = "n\\k".rjust(head_width) + " | " + " ".join(str(k).rjust(width) for k in columns)
        lines = [header, "-" * len(header)]
        for n in rows:
            values = " ".join(cells.get((n, k), "").rjust(width) for k in columns)
            lines.append(str(n).rjust(head_width) + " | " + values.rstrip())
        return "\n".join(lines) + "\n"


def parse_csv(text: str, kind: StatKind, provenance: Provenance) -> StatTable:
    """Read back what :meth:`StatTable.to_csv` wrote."""

    reader = csv.DictReader(io.StringIO(text))
    entries: Dict[Cell, int] = {}
    for record in reader:
        entries[(int(record["n"]), int(record["k"]))] = int(record["value"])
    nmax = max((n for n, _ in entries), default=0)
    return StatTable(kind, provenance, nmax, entries)


def compare_tables(first: StatTable, second: StatTable) -> List[Tuple[int, int, int, int]]:
    """Cells where the tables disagree, over their common rows."""

    nmax = min(first.nmax, second.nmax)
    cells = {cell for cell in first.entries if cell[0] <= nmax}
    cells |= {cell for cell in second.entries if cell[0] <= nmax}
    return [
        (n, k, first.get(n, k), second.get(n, k))
        for n, k in sorted(cells)
        if first.get(n, k) != second.get(n, k)
    ]


__all__ = ["Provenance", "StatKind", "StatTable", "compare_tables", "parse_csv"]
