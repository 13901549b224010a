"""Evaluation utilities: exact identity checks."""

from .identities import (
    IDENTITY_NAMES,
    IdentityConsistencyError,
    IdentityReport,
    UnknownIdentityError,
    super_ballot,
    verify,
    verify_all,
)

__all__ = [
    "IDENTITY_NAMES",
    "IdentityConsistencyError",
    "IdentityReport",
    "UnknownIdentityError",
    "super_ballot",
    "verify",
    "verify_all",
]
