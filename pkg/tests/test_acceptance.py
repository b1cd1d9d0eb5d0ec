"""Acceptance gate: one pass/fail line per criterion, at the stated tolerances.

Criteria 3 and 8 contain sub-claims that no bracket convention satisfies
(see the README); they are checked as stated and fail.
"""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

from hopfcheck import algebra, checks, cli
from hopfcheck.algebra import AlgebraElement
from hopfcheck.report import SuiteConfig, VerificationReport, run_suite

from conftest import ACCEPTANCE_LINES

GOLDEN = Path(__file__).parent / "golden" / "oct_mult.csv"


@pytest.fixture(scope="module")
def report() -> VerificationReport:
    return run_suite(SuiteConfig("all"))


@pytest.fixture(scope="module")
def ctx() -> checks.Context:
    return checks.Context(100, 0)


def _statuses(report: VerificationReport, ids: list[str]) -> list[str]:
    return [f"{i}={report.status_of(i)}" for i in ids if report.status_of(i) != "pass"]


def _golden_products() -> dict[tuple[int, int], tuple[int, int]]:
    lines = GOLDEN.read_text(encoding="utf-8").splitlines()[1:]
    out = {}
    for i, line in enumerate(lines):
        for j, cell in enumerate(line.split(",")[1:]):
            out[(i, j)] = (-1 if cell.startswith("-") else 1, int(cell.lstrip("-")[1:]))
    return out


def criterion_1(report, ctx):
    failures = _statuses(report, ["algebra.octonion.table", "algebra.octonion.closed-form"])
    for (i, j), (sign, k) in _golden_products().items():
        got = tuple(algebra.mul(AlgebraElement.basis(8, i), AlgebraElement.basis(8, j)))
        if got != tuple(sign if m == k else 0 for m in range(8)):
            failures.append(f"e{i}e{j} differs from Table 1")
    return failures


def criterion_2(report, ctx):
    return _statuses(report, ["s3.frame.gram-identity", "s7-frame.gram-identity", "s3.frame.orthonormal", "s7-frame.orthonormal"])


def criterion_3(report, ctx):
    return _statuses(
        report, ["s7-frame.commutators.table", "s3.bracket.XY=2V", "s3.bracket.VY=2X", "s3.bracket.XV=2Y"]
    )


def criterion_4(report, ctx):
    return _statuses(report, ["s3.contact.omega", "s3.contact.theta", "s3.contact.eta"])


def criterion_5(report, ctx):
    failures = []
    if min(len(ctx.s3_points), len(ctx.s7_points)) < 100:
        failures.append("fewer than 100 sampled points")
    return failures + _statuses(
        report,
        [
            "s3-cr.holomorphic.dimension",
            "s3-cr.holomorphic.orthocomplement",
            "s7-cr.holomorphic.dimension",
            "s7-cr.holomorphic.orthocomplement",
            "s3-cr.j.relations",
            "s3-cr.kernel-fields",
        ],
    )


def criterion_6(report, ctx):
    return _statuses(report, ["s3-hopf.jacobian.kernel", "s3-hopf.minor-identity", "s3-hopf.fiber-curve"])


def criterion_7(report, ctx):
    return _statuses(report, ["s7-cr.chart.rank-kernel", "s7-cr.chart.determinant"])


def criterion_8(report, ctx):
    return _statuses(
        report,
        ["s7-cr.rank6.flag", "s7-cr.rank6.decomposition", "s7-cr.rank6.orthogonality", "s7-cr.rank6.bracket-sum"],
    )


def criterion_9(report, ctx):
    return _statuses(
        report,
        [
            "quat.vertical.Y45",
            "quat.vertical.Y46",
            "quat.vertical.Y56",
            "quat.coefficients.sum-of-squares",
            "quat.coefficients.inner-products",
            "quat.coefficients.other-pairs-vanish",
        ],
    )


def criterion_10(report, ctx):
    return _statuses(
        report, ["quat.theorem.clause-i", "quat.theorem.s1-witness", "quat.theorem.s2-basis", "quat.ehresmann.select"]
    )


def criterion_11(report, ctx):
    failures = _statuses(report, ["algebra.octonion.nonassociative", "s3.bracket-generating.X-alone"])
    original = algebra.TABLES[8]
    algebra.TABLES[8] = original.with_entry(4, 5, -1, 1)
    try:
        if run_suite(SuiteConfig("algebra")).ok:
            failures.append("flipped table entry went unnoticed")
    finally:
        algebra.TABLES[8] = original
    return failures


def criterion_12(report, ctx, tmp: Path):
    failures = []
    for suite in ("algebra", "s3"):
        outputs = []
        for k in range(2):
            path = tmp / f"{suite}{k}.json"
            cli.main(["verify", "--suite", suite, "--output", str(path)])
            outputs.append(path.read_bytes())
        if outputs[0] != outputs[1]:
            failures.append(f"{suite} report not byte-identical")
    codes = (
        cli.main(["verify", "--suite", "algebra", "--output", str(tmp / "ok.json")]),
        cli.main(["verify", "--suite", "s3", "--output", str(tmp / "bad.json")]),
        cli.main(["verify", "--suite", "nonexistent"]),
    )
    if codes != (0, 1, 2):
        failures.append(f"exit codes {codes}")
    out = tmp / "oct.csv"
    cli.main(["tables", "--kind", "oct-mult", "--output", str(out)])
    if out.read_bytes() != GOLDEN.read_bytes():
        failures.append("oct-mult CSV differs from the golden file")
    return failures


NAMES = {
    1: "octonion table fidelity",
    2: "frame orthonormality",
    3: "commutator table and S^3 bracket relations",
    4: "contact forms",
    5: "CR structure",
    6: "S^3 Hopf map",
    7: "CP^3 chart",
    8: "rank-6 distribution",
    9: "quaternionic Hopf map",
    10: "Ehresmann connection theorem",
    11: "negative controls",
    12: "CLI contract",
}


@pytest.mark.parametrize("n", sorted(NAMES))
def test_criterion(n, report, ctx, tmp_path):
    fn = globals()[f"criterion_{n}"]
    failures = fn(report, ctx, tmp_path) if n == 12 else fn(report, ctx)
    line = f"criterion {n:>2} {'PASS' if not failures else 'FAIL'}  {NAMES[n]}"
    if failures:
        line += "  [" + "; ".join(failures) + "]"
    ACCEPTANCE_LINES[n] = line
    print(line)
    assert not failures, line


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
