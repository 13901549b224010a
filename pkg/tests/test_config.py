from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from unittest import TestCase
from unittest.mock import patch

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from common.config import CliConfig, ConfigurationError, Settings, load_settings
from common.logging import configure_logging, get_logger, resolve_level


def test_settings_file_values(tmp_path: Path) -> None:
    config = tmp_path / "settings.yml"
    config.write_text(
        "enumeration_cap: 9\narithmetic_cap: 80\ncache_dir: cache/oeis\nallow_network: yes\n"
        "oeis_base_url: https://mirror.example/\ntimeout: 2.5\n",
        encoding="utf-8",
    )
    with patch.dict(os.environ, {}, clear=False):
        os.environ.pop("CATALAN_EARS_CACHE", None)
        settings = load_settings(config)
    assert settings.enumeration_cap == 9
    assert settings.arithmetic_cap == 80
    assert settings.cache_dir == REPO_ROOT / "cache" / "oeis"
    assert settings.allow_network is True
    assert settings.oeis_base_url == "https://mirror.example"
    assert settings.timeout == 2.5


def test_defaults_and_bad_values() -> None:
    settings = Settings.from_raw({"enumeration_cap": "many", "fixtures_dir": None})
    assert settings.enumeration_cap == 14
    assert settings.arithmetic_cap == 200
    assert settings.fixtures_dir is None
    assert settings.allow_network is False


def test_missing_explicit_file_is_an_error(tmp_path: Path) -> None:
    with pytest.raises(ConfigurationError):
        load_settings(tmp_path / "absent.yml")


def test_non_mapping_file_is_an_error(tmp_path: Path) -> None:
    config = tmp_path / "settings.yml"
    config.write_text("- just\n- a list\n", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_settings(config)


def test_cache_env_override(tmp_path: Path) -> None:
    with patch.dict(os.environ, {"CATALAN_EARS_CACHE": str(tmp_path / "elsewhere")}):
        settings = Settings().with_env()
    assert settings.cache_dir == tmp_path / "elsewhere"


class SettingsWarningTests(TestCase):
    def test_unknown_keys_are_logged(self) -> None:
        with self.assertLogs("common.config.settings", level="WARNING") as captured:
            Settings.from_raw({"enumeration_cap": 5, "colour": "blue"})
        self.assertIn("colour", "\n".join(captured.output))


class CliConfigTests(TestCase):
    def _namespace(self, **values) -> argparse.Namespace:
        return argparse.Namespace(**values)

    def test_enumeration_bound_checked_against_cap(self) -> None:
        settings = Settings(enumeration_cap=6)
        with self.assertRaises(ConfigurationError):
            CliConfig.from_namespace(self._namespace(command="enumerate", n=7), settings)
        config = CliConfig.from_namespace(self._namespace(command="enumerate", n=6), settings)
        self.assertEqual(config.n, 6)

    def test_closed_tables_skip_the_enumeration_cap(self) -> None:
        settings = Settings(enumeration_cap=6)
        namespace = self._namespace(command="table", nmax=40, provenance="closed", stat="v", format="csv")
        config = CliConfig.from_namespace(namespace, settings)
        self.assertFalse(config.needs_enumeration)
        self.assertEqual(config.fmt, "csv")

    def test_arithmetic_cap_and_negative_bounds(self) -> None:
        with self.assertRaises(ConfigurationError):
            CliConfig.from_namespace(self._namespace(command="verify", nmax=201, identity="main"), Settings())
        with self.assertRaises(ConfigurationError):
            CliConfig.from_namespace(self._namespace(command="count-ddu", nmax=-1), Settings())

    def test_network_flag_from_settings(self) -> None:
        settings = Settings(allow_network=True)
        config = CliConfig.from_namespace(self._namespace(command="oeis-check", seq="A007054"), settings)
        self.assertTrue(config.allow_network)


def test_logging_level_from_environment() -> None:
    with patch.dict(os.environ, {"CATALAN_EARS_LOG_LEVEL": "warning"}):
        configure_logging()
        assert get_logger("catalan_ears.test").getEffectiveLevel() == 30
    configure_logging("INFO")


def test_explicit_level_wins_over_environment() -> None:
    with patch.dict(os.environ, {"CATALAN_EARS_LOG_LEVEL": "ERROR"}):
        assert resolve_level("debug") == 10
        assert resolve_level("bogus") == 40
        assert resolve_level(25) == 25
    with patch.dict(os.environ, {}, clear=False):
        os.environ.pop("CATALAN_EARS_LOG_LEVEL", None)
        assert resolve_level() == 20


def test_default_cache_dir_follows_environment_set_after_import(tmp_path: Path) -> None:
    with patch.dict(os.environ, {"CATALAN_EARS_CACHE": str(tmp_path / "late")}):
        assert Settings().cache_dir == tmp_path / "late"
