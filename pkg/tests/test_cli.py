from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from enumeration import Provenance, StatKind, parse_csv
from orchestrator.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main

OCTAGON_JSON = '{"n":8,"diagonals":[[-1,4],[-1,5],[-1,7],[0,3],[0,4],[1,3],[5,7]]}'


def _run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def offline_config(tmp_path: Path) -> Path:
    config = tmp_path / "settings.yml"
    config.write_text(f"cache_dir: {tmp_path / 'cache'}\nallow_network: false\n", encoding="utf-8")
    return config


def test_table_csv_reproduces_printed_table(printed_u_table: dict) -> None:
    code, output = _run("table", "--stat", "u", "--nmax", "9", "--format", "csv")
    assert code == EXIT_OK
    table = parse_csv(output, StatKind.U, Provenance.BRUTE)
    assert {cell: value for cell, value in table.entries.items() if cell[0] >= 2} == printed_u_table


def test_table_json_uses_decimal_strings() -> None:
    code, output = _run("table", "--stat", "v", "--provenance", "closed", "--nmax", "40", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(output)
    assert payload["provenance"] == "closed"
    assert all(isinstance(entry["value"], str) for entry in payload["entries"])


def test_map_single_triangle_to_dyck(tmp_path: Path) -> None:
    source = tmp_path / "d.json"
    source.write_text('{"n":1,"diagonals":[]}', encoding="utf-8")
    assert _run("map", "--to", "dyck", "--input", str(source)) == (EXIT_OK, "UD\n")


def test_map_octagon_through_stages(tmp_path: Path) -> None:
    source = tmp_path / "octagon.json"
    source.write_text(OCTAGON_JSON, encoding="utf-8")
    assert _run("map", "--input", str(source)) == (EXIT_OK, "UUUUDDUDDDUDUUDD\n")
    code, output = _run("map", "--to", "ordered", "--input", str(source), "--format", "json")
    assert code == EXIT_OK
    assert json.loads(output)["stage"] == "ordered"


def test_map_path_back_to_dissection() -> None:
    assert _run("map", "--path", "UUUUDDUDDDUDUUDD") == (EXIT_OK, OCTAGON_JSON + "\n")


def test_enumerate_outputs() -> None:
    code, output = _run("enumerate", "--n", "3")
    assert code == EXIT_OK
    assert len(output.splitlines()) == 5
    code, output = _run("enumerate", "--n", "4", "--to", "dyck", "--format", "json")
    assert len(set(json.loads(output))) == 14


def test_count_ddu_outputs() -> None:
    assert _run("count-ddu", "--path", "UUDDUD") == (EXIT_OK, "1\n")
    assert _run("count-ddu", "--nmax", "4") == (EXIT_OK, "1: 1\n2: 2\n3: 4 1\n4: 8 6\n")


def test_verify_main_identity() -> None:
    code, output = _run("verify", "--identity", "main", "--nmax", "50", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(output) == {"identity": "main", "nmin": 2, "nmax": 50, "checked": 49, "pass": True, "failures": []}


def test_verify_everything_in_text() -> None:
    code, output = _run("verify", "--nmax", "12")
    assert code == EXIT_OK
    assert all(line.endswith("up to n=12") and ": PASS" in line for line in output.splitlines())


def test_oeis_check_with_bundled_fixtures(offline_config: Path) -> None:
    code, output = _run("--config", str(offline_config), "oeis-check", "--seq", "A007054")
    assert code == EXIT_OK
    payload = json.loads(output)
    assert payload["pass"] is True
    assert payload["offset"] == 1
    code, output = _run("--config", str(offline_config), "oeis-check", "--seq", "A091894", "--nmax", "8")
    assert code == EXIT_OK


def test_oeis_check_tampered_fixture_fails(tmp_path: Path, offline_config: Path) -> None:
    text = (REPO_ROOT / "data" / "oeis" / "b007054.txt").read_text(encoding="utf-8")
    tampered = tmp_path / "b007054.txt"
    tampered.write_text(text.replace("\n5 36\n", "\n5 37\n"), encoding="utf-8")
    code, output = _run("--config", str(offline_config), "oeis-check", "--seq", "A007054", "--bfile", str(tampered))
    assert code == EXIT_FAILED
    assert json.loads(output)["first_divergence"]["index"] == 5


def test_oeis_check_without_data_is_a_usage_error(tmp_path: Path) -> None:
    config = tmp_path / "settings.yml"
    config.write_text(f"cache_dir: {tmp_path / 'cache'}\nfixtures_dir: null\n", encoding="utf-8")
    code, output = _run("--config", str(config), "oeis-check", "--seq", "A007054")
    assert code == EXIT_USAGE
    assert output == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["table"],
        ["frobnicate"],
        ["table", "--nmax", "20"],
        ["enumerate", "--n", "0"],
        ["verify", "--identity", "main", "--nmax", "500"],
        ["verify", "--identity", "main", "--nmax", "1"],
        ["count-ddu", "--path", "UDDU"],
        ["map", "--path", "UD", "--orientation", "sideways"],
    ],
)
def test_usage_errors_exit_two(argv: list[str]) -> None:
    code, output = _run(*argv)
    assert code == EXIT_USAGE
    assert output == ""


def test_module_entry_point_is_deterministic() -> None:
    cmd = [sys.executable, "-m", "orchestrator.cli", "table", "--stat", "u", "--provenance", "recurrence", "--nmax", "12"]
    first = subprocess.run(cmd, cwd=REPO_ROOT, capture_output=True, text=True)
    second = subprocess.run(cmd, cwd=REPO_ROOT, capture_output=True, text=True)
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout
    assert "1540" in first.stdout


def test_oeis_check_beyond_the_fixture_exits_one(offline_config: Path) -> None:
    code, output = _run("--config", str(offline_config), "oeis-check", "--seq", "A007054", "--nmax", "50", "--format", "text")
    assert code == EXIT_FAILED
    assert output == "A007054: INCOMPLETE offset=1 compared=29/51\n"


def test_verify_all_with_small_range_skips_main() -> None:
    code, output = _run("verify", "--nmax", "1")
    assert code == EXIT_OK
    assert [line.split(":")[0] for line in output.splitlines()] == [
        "touchard",
        "amdeberhan",
        "superballot",
        "relation",
        "touchard-summand",
    ]
