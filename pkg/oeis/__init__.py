"""OEIS b-file parsing, offline-first fetching and sequence cross-checks."""

from .bfile import BFile, BFileParseError, bfile_name, normalize_seq_id, parse_bfile
from .check import OeisReport, oeis_check
from .client import TransportError, bfile_url, fetch_bfile

__all__ = [
    "BFile",
    "BFileParseError",
    "OeisReport",
    "TransportError",
    "bfile_name",
    "bfile_url",
    "fetch_bfile",
    "normalize_seq_id",
    "oeis_check",
    "parse_bfile",
]
