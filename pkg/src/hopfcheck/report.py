"""Suite execution, report serialization and golden tables.

Report JSON keys appear in this order::

    suite, seed, samples, checks[{id, paper_ref, status, details, counterexample}],
    summary{total, passed, failed}

Checks are sorted by id and there are no timestamps, so equal configurations
give byte-identical output.
"""

from __future__ import annotations

import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import algebra, vectorfields
from .checks import SUITES, CheckResult, Context, checks_for

FORMATS = ("json", "text")
TABLE_KINDS = ("oct-mult", "commutators")
_MASK64 = (1 << 64) - 1


class UsageError(ValueError):
    """Invalid suite, format, sample count or seed."""


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    samples: int = 100
    seed: int = 0
    format: str = "json"
    output: str | None = None

    def __post_init__(self) -> None:
        if self.suite not in SUITES + ("all",):
            raise UsageError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES + ('all',))}")
        if self.samples < 1:
            raise UsageError("samples must be positive")
        if not 0 <= self.seed <= _MASK64:
            raise UsageError("seed must be an unsigned 64-bit integer")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")


@dataclass(frozen=True)
class CheckRecord:
    id: str
    paper_ref: str
    status: str
    details: str
    counterexample: tuple[str, ...] | None


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    seed: int
    samples: int
    checks: tuple[CheckRecord, ...]

    @property
    def passed(self) -> int:
        return sum(c.status == "pass" for c in self.checks)

    @property
    def failed(self) -> int:
        return sum(c.status == "fail" for c in self.checks)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def status_of(self, check_id: str) -> str:
        return next(c.status for c in self.checks if c.id == check_id)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "samples": self.samples,
            "checks": [
                {
                    "id": c.id,
                    "paper_ref": c.paper_ref,
                    "status": c.status,
                    "details": c.details,
                    "counterexample": list(c.counterexample) if c.counterexample is not None else None,
                }
                for c in self.checks
            ],
            "summary": {"total": len(self.checks), "passed": self.passed, "failed": self.failed},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite}  seed {self.seed}  samples {self.samples}"]
        for c in self.checks:
            lines.append(f"{c.id}: {c.status}  {c.details}")
            if c.counterexample is not None:
                lines.append(f"    counterexample ({', '.join(c.counterexample)})")
        lines.append(f"total {len(self.checks)}  passed {self.passed}  failed {self.failed}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _run_one(check, ctx: Context) -> CheckRecord:
    try:
        result = check.run(ctx)
    except Exception as exc:  # a crashing check is a failed check, not a crashed report
        result = CheckResult("fail", f"internal error: {type(exc).__name__}: {exc}")
    return CheckRecord(check.id, check.paper_ref, result.status, result.details, result.counterexample)


def run_suite(config: SuiteConfig, workers: int = 1) -> VerificationReport:
    ctx = Context(config.samples, config.seed)
    # materialize the shared samples before any worker touches them
    ctx.s3_points, ctx.s7_points, ctx.chart_points
    checks = checks_for(config.suite)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            records = list(pool.map(lambda c: _run_one(c, ctx), checks))
    else:
        records = [_run_one(c, ctx) for c in checks]
    records.sort(key=lambda r: r.id)
    return VerificationReport(config.suite, config.seed, config.samples, tuple(records))


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO(newline="")
    for row in rows:
        buf.write(",".join(str(c) for c in row) + "\n")
    return buf.getvalue()


def emit_tables(kind: str, fmt: str = "csv") -> str:
    """CSV text for the octonion table or the 21 commutator fields."""
    if fmt != "csv":
        raise UsageError(f"unknown table format {fmt!r}")
    if kind == "oct-mult":
        table = algebra.TABLES[8]
        header = [""] + [f"e{j}" for j in range(8)]
        return _csv([header] + [[f"e{i}"] + [table.cell(i, j) for j in range(8)] for i in range(8)])
    if kind == "commutators":
        header = ["i", "j"] + [f"m{r}{c}" for r in range(8) for c in range(8)]
        rows = []
        for i in range(1, 8):
            for j in range(i + 1, 8):
                m = vectorfields.yfield(i, j).matrix
                rows.append([i, j] + [int(a) for r in m for a in r])
        return _csv([header] + rows)
    raise UsageError(f"unknown table kind {kind!r}; choose from {', '.join(TABLE_KINDS)}")
