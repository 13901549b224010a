"""Cross-check computed sequences against OEIS b-files.

The b-file offset is not assumed: offsets 0..3 are tried and the first one
whose leading terms agree is used for the full comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from common.config import ConfigurationError, Settings
from common.logging import get_logger
from enumeration.ddu import ddu_distribution, flatten_triangle
from evals.identities import super_ballot

from .bfile import BFile, normalize_seq_id
from .client import fetch_bfile

LOGGER = get_logger(__name__)

OFFSETS = (0, 1, 2, 3)
MIN_LEADING_MATCH = 5
DEFAULT_NMAX = {"A007054": 20, "A091894": 8}


@dataclass(frozen=True)
class Divergence:
    index: int
    expected: int
    actual: int


@dataclass
class OeisReport:
    seq: str
    nmax: int
    passed: bool
    offset: Optional[int]
    compared: int
    computed: int = 0
    first_index: Optional[int] = None
    first_divergence: Optional[Divergence] = None
    mapping: str = ""

    @property
    def complete(self) -> bool:
        """Every computed term had a b-file term to compare with."""

        return self.compared >= self.computed

    def to_payload(self) -> Dict[str, Any]:
        divergence = None
        if self.first_divergence is not None:
            divergence = {
                "index": self.first_divergence.index,
                "expected": str(self.first_divergence.expected),
                "actual": str(self.first_divergence.actual),
            }
        return {
            "seq": self.seq,
            "nmax": self.nmax,
            "pass": self.passed,
            "offset": self.offset,
            "compared": self.compared,
            "computed": self.computed,
            "complete": self.complete,
            "first_index": self.first_index,
            "mapping": self.mapping,
            "first_divergence": divergence,
        }


def _leading_matches(ours: Sequence[int], theirs: Sequence[int], offset: int) -> int:
    count = 0
    for j, value in enumerate(ours):
        if offset + j >= len(theirs) or theirs[offset + j] != value:
            break
        count += 1
    return count


def choose_offset(ours: Sequence[int], theirs: Sequence[int]) -> tuple[Optional[int], int]:
    """Return (aligned offset or None, best offset by leading matches)."""

    needed = min(MIN_LEADING_MATCH, len(ours))
    scores = {offset: _leading_matches(ours, theirs, offset) for offset in OFFSETS}
    best = max(OFFSETS, key=lambda offset: (scores[offset], -offset))
    for offset in OFFSETS:
        if needed and scores[offset] >= needed:
            return offset, best
    return None, best


def compare_sequence(seq: str, nmax: int, ours: List[int], bfile: BFile, mapping: str) -> OeisReport:
    theirs = bfile.values
    aligned, best = choose_offset(ours, theirs)
    offset = aligned if aligned is not None else best
    compared = max(0, min(len(ours), len(theirs) - offset))
    if compared < len(ours):
        LOGGER.warning("%s: b-file has only %s terms past offset %s, %s computed", seq, compared, offset, len(ours))
    divergence = None
    for j in range(compared):
        if theirs[offset + j] != ours[j]:
            divergence = Divergence(bfile.entries[offset + j][0], theirs[offset + j], ours[j])
            break
    # terms past the end of the b-file are unverified
    passed = aligned is not None and divergence is None and compared == len(ours)
    first_index = bfile.entries[offset][0] if offset < len(bfile.entries) else None
    report = OeisReport(seq, nmax, passed, aligned, compared, len(ours), first_index, divergence, mapping)
    if passed:
        LOGGER.info("%s matches %s computed terms at offset %s", seq, compared, aligned)
    else:
        LOGGER.warning(
            "%s does not match: offset=%s divergence=%s compared=%s of %s", seq, aligned, divergence, compared, len(ours)
        )
    return report


def super_ballot_terms(nmax: int) -> List[int]:
    return [super_ballot(n) for n in range(0, nmax + 1)]


def ddu_terms(nmax: int) -> List[int]:
    return flatten_triangle(ddu_distribution(nmax, start=1))


def oeis_check(
    seq: str,
    nmax: Optional[int] = None,
    settings: Optional[Settings] = None,
    *,
    bfile: Optional[Path] = None,
    allow_network: Optional[bool] = None,
) -> OeisReport:
    seq = normalize_seq_id(seq)
    if seq not in DEFAULT_NMAX:
        raise ConfigurationError(f"oeis-check supports {sorted(DEFAULT_NMAX)}, got {seq}")
    nmax = DEFAULT_NMAX[seq] if nmax is None else nmax
    if seq == "A007054":
        ours = super_ballot_terms(nmax)
        mapping = "superBallot(n), n=0..nmax, against consecutive b-file terms"
    else:
        if nmax < 1:
            raise ConfigurationError("A091894 check needs nmax >= 1")
        ours = ddu_terms(nmax)
        mapping = "DDU triangle rows n=1..nmax, k ascending, against consecutive b-file terms"
    data = fetch_bfile(seq, settings, bfile=bfile, allow_network=allow_network)
    return compare_sequence(seq, nmax, ours, data, mapping)


__all__ = [
    "DEFAULT_NMAX",
    "Divergence",
    "OFFSETS",
    "OeisReport",
    "choose_offset",
    "compare_sequence",
    "ddu_terms",
    "oeis_check",
    "super_ballot_terms",
]
