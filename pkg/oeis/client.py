"""Offline-first b-file access.

Lookup order: an explicit file, the cache directory, the bundled fixtures,
and only then ``{base}/A007054/b007054.txt`` when the network is allowed.
Downloads are written to the cache atomically.
"""
from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Optional

from common.config import ConfigurationError, Settings
from common.logging import get_logger
from common.paths import ensure_dir

from .bfile import BFile, bfile_name, normalize_seq_id, parse_bfile

try:  # pragma: no cover - optional dependency
    import requests
except Exception:  # pragma: no cover - optional dependency
    requests = None

LOGGER = get_logger(__name__)


class TransportError(RuntimeError):
    """The OEIS download failed."""


def bfile_url(seq_id: str, base_url: str) -> str:
    seq_id = normalize_seq_id(seq_id)
    return f"{base_url.rstrip('/')}/{seq_id}/{bfile_name(seq_id)}"


def _read(path: Path, seq_id: str) -> BFile:
    return parse_bfile(path.read_text(encoding="utf-8"), seq_id)


def _write_atomic(path: Path, text: str) -> None:
    ensure_dir(path.parent)
    handle, temp_name = tempfile.mkstemp(prefix=path.name, suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(handle, "w", encoding="utf-8") as stream:
            stream.write(text)
        os.replace(temp_name, path)
    except BaseException:
        Path(temp_name).unlink(missing_ok=True)
        raise


def _download(url: str, timeout: float) -> str:
    if requests is None:
        raise TransportError("requests package unavailable; cannot download b-files")
    try:
        response = requests.get(url, timeout=timeout)
        response.raise_for_status()
    except Exception as exc:
        raise TransportError(f"GET {url} failed: {exc}") from exc
    return response.text


def fetch_bfile(
    seq_id: str,
    settings: Optional[Settings] = None,
    *,
    bfile: Optional[Path] = None,
    allow_network: Optional[bool] = None,
) -> BFile:
    settings = settings or Settings()
    seq_id = normalize_seq_id(seq_id)
    if bfile is not None:
        path = Path(bfile)
        if not path.exists():
            raise ConfigurationError(f"b-file not found: {path}")
        LOGGER.info("Using b-file %s for %s", path, seq_id)
        return _read(path, seq_id)

    name = bfile_name(seq_id)
    cached = Path(settings.cache_dir) / name
    if cached.exists():
        LOGGER.info("Cache hit for %s at %s", seq_id, cached)
        return _read(cached, seq_id)
    if settings.fixtures_dir is not None:
        fixture = Path(settings.fixtures_dir) / name
        if fixture.exists():
            LOGGER.info("Using bundled fixture %s", fixture)
            return _read(fixture, seq_id)

    network = settings.allow_network if allow_network is None else allow_network
    if not network:
        raise ConfigurationError(
            f"No local b-file for {seq_id} and network access is disabled (use --allow-network or --bfile)"
        )
    url = bfile_url(seq_id, settings.oeis_base_url)
    text = _download(url, settings.timeout)
    parsed = parse_bfile(text, seq_id)
    _write_atomic(cached, text)
    LOGGER.info("Fetched %s entries of %s into %s", len(parsed), seq_id, cached)
    return parsed


__all__ = ["TransportError", "bfile_url", "fetch_bfile"]
