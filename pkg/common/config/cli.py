"""Normalized command-line configuration."""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .settings import ConfigurationError, Settings

FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class CliConfig:
    """Everything a subcommand needs, validated against the settings caps."""

    subcommand: str
    n: Optional[int] = None
    nmax: Optional[int] = None
    stat: str = "u"
    provenance: str = "brute"
    identity: Optional[str] = None
    to: Optional[str] = None
    path: Optional[str] = None
    input: Optional[Path] = None
    fmt: str = "text"
    bfile: Optional[Path] = None
    allow_network: bool = False
    seq: Optional[str] = None
    workers: int = 1
    settings: Settings = field(default_factory=Settings)

    @classmethod
    def from_namespace(cls, args: argparse.Namespace, settings: Settings) -> "CliConfig":
        config = cls(
            subcommand=args.command,
            n=getattr(args, "n", None),
            nmax=getattr(args, "nmax", None),
            stat=getattr(args, "stat", None) or "u",
            provenance=getattr(args, "provenance", None) or "brute",
            identity=getattr(args, "identity", None),
            to=getattr(args, "to", None),
            path=getattr(args, "path", None),
            input=getattr(args, "input", None),
            fmt=getattr(args, "format", None) or "text",
            bfile=getattr(args, "bfile", None),
            allow_network=bool(getattr(args, "allow_network", False)) or settings.allow_network,
            seq=getattr(args, "seq", None),
            workers=max(1, int(getattr(args, "workers", 1) or 1)),
            settings=settings,
        )
        config.validate()
        return config

    def validate(self) -> None:
        if self.fmt not in FORMATS:
            raise ConfigurationError(f"Unknown format {self.fmt!r}; expected one of {FORMATS}")
        for name in ("n", "nmax"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ConfigurationError(f"--{name} must be nonnegative, got {value}")
        if self.needs_enumeration:
            bound = self.nmax if self.nmax is not None else self.n
            cap = self.settings.enumeration_cap
            if bound is not None and bound > cap:
                raise ConfigurationError(
                    f"{self.subcommand}: bound {bound} exceeds the enumeration cap {cap}"
                )
        if self.nmax is not None and self.nmax > self.settings.arithmetic_cap:
            raise ConfigurationError(
                f"--nmax {self.nmax} exceeds the arithmetic cap {self.settings.arithmetic_cap}"
            )

    @property
    def needs_enumeration(self) -> bool:
        """True when the subcommand walks every structure of the given size."""

        if self.subcommand == "enumerate":
            return True
        if self.subcommand == "count-ddu":
            return self.nmax is not None
        if self.subcommand == "table":
            return self.provenance == "brute"
        if self.subcommand == "verify":
            return self.identity in (None, "all", "relation") and self.provenance == "brute"
        if self.subcommand == "oeis-check":
            return (self.seq or "").upper() == "A091894"
        return False
