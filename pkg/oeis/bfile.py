"""OEIS b-file parsing.

A b-file is plain text: ``#`` comment lines, blank lines, and data lines
``index value`` separated by whitespace.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

SEQ_ID_PATTERN = re.compile(r"^A\d{6}$")


class BFileParseError(ValueError):
    """Malformed b-file line."""

    def __init__(self, line_number: int, message: str) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class BFile:
    seq_id: Optional[str]
    entries: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def values(self) -> List[int]:
        return [value for _, value in self.entries]

    @property
    def first_index(self) -> Optional[int]:
        return self.entries[0][0] if self.entries else None

    def __len__(self) -> int:
        return len(self.entries)


def normalize_seq_id(seq_id: str) -> str:
    """``a7054`` / ``A007054`` -> ``A007054``."""

    text = (seq_id or "").strip().upper()
    if text.startswith("A"):
        text = text[1:]
    if not text.isdigit():
        raise ValueError(f"not an OEIS sequence id: {seq_id!r}")
    normalized = f"A{int(text):06d}"
    if not SEQ_ID_PATTERN.match(normalized):
        raise ValueError(f"not an OEIS sequence id: {seq_id!r}")
    return normalized


def bfile_name(seq_id: str) -> str:
    return "b" + normalize_seq_id(seq_id)[1:] + ".txt"


def parse_bfile(text: str, seq_id: Optional[str] = None) -> BFile:
    """Parse ``text``; line numbers in errors are 1-based over the whole input."""

    entries: List[Tuple[int, int]] = []
    previous: Optional[int] = None
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(line_number, f"expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise BFileParseError(line_number, f"non-integer field in {raw!r}") from exc
        if value < 0:
            raise BFileParseError(line_number, f"negative value {value}")
        if previous is not None and index <= previous:
            raise BFileParseError(line_number, f"index {index} does not increase after {previous}")
        previous = index
        entries.append((index, value))
    return BFile(normalize_seq_id(seq_id) if seq_id else None, entries)


__all__ = ["BFile", "BFileParseError", "bfile_name", "normalize_seq_id", "parse_bfile"]
