"""Command line entry point: ``hopfcheck verify`` and ``hopfcheck tables``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .checks import SUITES
from .report import FORMATS, TABLE_KINDS, SuiteConfig, UsageError, emit_tables, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfcheck", description="Exact verification of Hopf fibration constructions.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", required=True, choices=SUITES + ("all",))
    verify.add_argument("--samples", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--format", choices=FORMATS, default="json")
    verify.add_argument("--output")
    verify.add_argument("--workers", type=int, default=1, help="run checks on this many threads")

    tables = sub.add_parser("tables", help="emit a golden table as CSV")
    tables.add_argument("--kind", required=True, choices=TABLE_KINDS)
    tables.add_argument("--output")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 on --help
        return int(exc.code or 0)
    try:
        if args.command == "tables":
            _write(emit_tables(args.kind), args.output)
            return EXIT_OK
        config = SuiteConfig(args.suite, args.samples, args.seed, args.format, args.output)
        report = run_suite(config, workers=max(1, args.workers))
    except UsageError as exc:
        print(f"hopfcheck: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(report.render(config.format), config.output)
    return EXIT_OK if report.ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
