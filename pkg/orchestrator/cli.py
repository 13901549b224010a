"""``catalan-ears`` command line.

Results go to standard output, logs to standard error. Exit codes: 0 on
success, 1 when a verification fails, 2 on usage or configuration errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

from bijections import ORIENTATIONS, STAGES, dyck_to_dissection, map_dissection
from common.config import CliConfig, ConfigurationError, load_settings
from common.logging import configure_logging, get_logger
from enumeration import EnumerationRangeError, build_table, ddu_distribution, enumerate_dissections
from evals.identities import IDENTITY_NAMES, UnknownIdentityError, applicable_identities, verify
from oeis import BFileParseError, TransportError, oeis_check
from structures import DyckPath, ParseError, ValidationError, count_ddu, parse_dissection, parse_dyck
from structures.serialization import serialize_binary, serialize_dissection, serialize_ordered
from structures.trees import BinaryTree

LOGGER = get_logger(__name__)

PROG = "catalan-ears"
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (
    ConfigurationError,
    EnumerationRangeError,
    ParseError,
    ValidationError,
    UnknownIdentityError,
    BFileParseError,
    TransportError,
    FileNotFoundError,
    ValueError,
)


def _add_format(parser: argparse.ArgumentParser, default: str = "text") -> None:
    parser.add_argument("--format", choices=("json", "csv", "text"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Ears of triangle dissections and Catalan identities")
    parser.add_argument("--config", type=Path, help="Settings YAML (defaults to config/catalan_ears.yml)")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ...")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="u/v tables from any provenance")
    table.add_argument("--stat", choices=("u", "v"), default="u")
    table.add_argument("--provenance", choices=("brute", "recurrence", "closed"), default="brute")
    table.add_argument("--nmax", type=int, required=True)
    table.add_argument("--workers", type=int, default=1)
    _add_format(table)

    enum = sub.add_parser("enumerate", help="dump every dissection of size n, or its images")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--to", choices=STAGES, default=None)
    enum.add_argument("--orientation", choices=ORIENTATIONS, default=ORIENTATIONS[0])
    _add_format(enum)

    mapper = sub.add_parser("map", help="send one dissection through the bijection, or a path back")
    source = mapper.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", type=Path, help="dissection JSON file ('-' for stdin)")
    source.add_argument("--path", help="Dyck path to map back to a dissection")
    mapper.add_argument("--to", choices=STAGES, default="dyck")
    mapper.add_argument("--orientation", choices=ORIENTATIONS, default=ORIENTATIONS[0])
    _add_format(mapper)

    ddu = sub.add_parser("count-ddu", help="DDU count of a path, or the distribution for n<=nmax")
    ddu_source = ddu.add_mutually_exclusive_group(required=True)
    ddu_source.add_argument("--path")
    ddu_source.add_argument("--nmax", type=int)
    _add_format(ddu)

    check = sub.add_parser("verify", help="check an identity exactly")
    check.add_argument("--identity", choices=IDENTITY_NAMES + ("all",), default="all")
    check.add_argument("--nmax", type=int, required=True)
    check.add_argument("--provenance", choices=("brute", "recurrence", "closed"), default="closed")
    _add_format(check)

    seq = sub.add_parser("oeis-check", help="compare against an OEIS b-file")
    seq.add_argument("--seq", required=True, help="A007054 or A091894")
    seq.add_argument("--nmax", type=int, default=None)
    seq.add_argument("--bfile", type=Path, default=None)
    seq.add_argument("--allow-network", action="store_true")
    _add_format(seq, default="json")
    return parser


def _dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _rows_to_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(item) for item in row])
    return buffer.getvalue()


def _stage_text(image: Any) -> str:
    if isinstance(image, DyckPath):
        return image.steps
    if isinstance(image, BinaryTree):
        return serialize_binary(image)
    return serialize_ordered(image)


def _run_table(config: CliConfig, out: TextIO) -> int:
    table = build_table(
        config.stat,
        config.provenance,
        config.nmax,
        workers=config.workers,
        cap=config.settings.enumeration_cap,
    )
    if config.fmt == "csv":
        out.write(table.to_csv())
    elif config.fmt == "json":
        out.write(_dump_json(table.to_payload()))
    else:
        out.write(table.render_text())
    return EXIT_OK


def _run_enumerate(config: CliConfig, out: TextIO, orientation: str) -> int:
    lines: List[str] = []
    for dissection in enumerate_dissections(config.n, cap=config.settings.enumeration_cap):
        if config.to is None:
            lines.append(serialize_dissection(dissection))
        else:
            lines.append(_stage_text(map_dissection(dissection, config.to, orientation)))
    if config.fmt == "json" and config.to == "dyck":
        out.write(json.dumps(lines) + "\n")
    elif config.fmt == "json":
        out.write("[" + ",".join(lines) + "]\n")
    elif config.fmt == "csv":
        out.write(_rows_to_csv(["index", "value"], list(enumerate(lines))))
    else:
        out.write("".join(line + "\n" for line in lines))
    LOGGER.info("Enumerated %s structures of size %s", len(lines), config.n)
    return EXIT_OK


def _read_input(path: Path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    return path.read_text(encoding="utf-8")


def _run_map(config: CliConfig, out: TextIO, orientation: str) -> int:
    if config.path is not None:
        dissection = dyck_to_dissection(parse_dyck(config.path), orientation)
        out.write(serialize_dissection(dissection) + "\n")
        return EXIT_OK
    stage = config.to or "dyck"
    dissection = parse_dissection(_read_input(config.input))
    text = _stage_text(map_dissection(dissection, stage, orientation))
    if config.fmt == "json":
        image = text if stage == "dyck" else json.loads(text)
        out.write(_dump_json({"n": dissection.n, "stage": stage, "image": image}))
    else:
        out.write(text + "\n")
    return EXIT_OK


def _run_count_ddu(config: CliConfig, out: TextIO) -> int:
    if config.path is not None:
        path = parse_dyck(config.path)
        count = count_ddu(path)
        if config.fmt == "json":
            out.write(_dump_json({"path": path.steps, "ddu": count}))
        else:
            out.write(f"{count}\n")
        return EXIT_OK
    rows = ddu_distribution(config.nmax, start=1)
    if config.fmt == "json":
        payload = {str(n): {str(k): str(v) for k, v in row.items()} for n, row in rows.items()}
        out.write(_dump_json(payload))
    elif config.fmt == "csv":
        out.write(_rows_to_csv(["n", "k", "count"], [(n, k, v) for n, row in rows.items() for k, v in row.items()]))
    else:
        for n, row in rows.items():
            out.write(f"{n}: " + " ".join(str(row[k]) for k in sorted(row)) + "\n")
    return EXIT_OK


def _run_verify(config: CliConfig, out: TextIO) -> int:
    names = applicable_identities(config.nmax) if config.identity in (None, "all") else [config.identity]
    reports = [
        verify(name, config.nmax, provenance=config.provenance, cap=config.settings.arithmetic_cap)
        for name in names
    ]
    payloads = [report.to_payload() for report in reports]
    if config.fmt == "json":
        out.write(_dump_json(payloads[0] if len(payloads) == 1 else payloads))
    elif config.fmt == "csv":
        rows = [(p["identity"], config.nmax, p["pass"], len(p["failures"])) for p in payloads]
        out.write(_rows_to_csv(["identity", "nmax", "pass", "failures"], rows))
    else:
        for payload in payloads:
            status = "PASS" if payload["pass"] else f"FAIL ({len(payload['failures'])} failures)"
            out.write(f"{payload['identity']}: {status} up to n={config.nmax}\n")
    return EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED


def _run_oeis_check(config: CliConfig, out: TextIO) -> int:
    report = oeis_check(
        config.seq or "",
        config.nmax,
        config.settings,
        bfile=config.bfile,
        allow_network=config.allow_network,
    )
    if config.fmt == "json":
        out.write(_dump_json(report.to_payload()))
    else:
        status = "PASS" if report.passed else "FAIL"
        if not report.complete and report.first_divergence is None:
            status = "INCOMPLETE"
        line = f"{report.seq}: {status} offset={report.offset} compared={report.compared}/{report.computed}"
        if report.first_divergence is not None:
            divergence = report.first_divergence
            line += f" first divergence at index {divergence.index}: expected {divergence.expected}, got {divergence.actual}"
        out.write(line + "\n")
    return EXIT_OK if report.passed else EXIT_FAILED


def _dispatch(config: CliConfig, args: argparse.Namespace, out: TextIO) -> int:
    orientation = getattr(args, "orientation", ORIENTATIONS[0])
    handlers: Dict[str, Callable[[], int]] = {
        "table": lambda: _run_table(config, out),
        "enumerate": lambda: _run_enumerate(config, out, orientation),
        "map": lambda: _run_map(config, out, orientation),
        "count-ddu": lambda: _run_count_ddu(config, out),
        "verify": lambda: _run_verify(config, out),
        "oeis-check": lambda: _run_oeis_check(config, out),
    }
    return handlers[config.subcommand]()


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    out = out or sys.stdout
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    configure_logging(args.log_level)
    try:
        settings = load_settings(args.config)
        config = CliConfig.from_namespace(args, settings)
        return _dispatch(config, args, out)
    except USAGE_ERRORS as exc:
        LOGGER.error("%s", exc)
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
