from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfcheck import algebra, checks, cli
from hopfcheck.report import SuiteConfig, UsageError, emit_tables, run_suite
from hopfcheck.sampling import S1_WITNESS, SplitMix64, inverse_stereographic, sample_sphere_points

GOLDEN = Path(__file__).parent / "golden"


def test_splitmix_reference_values():
    rng = SplitMix64(0)
    assert rng.next() == 0xE220A8397B1DCDAF
    assert rng.next() == 0x6E789E6AA1B965F4


def test_splitmix_rejects_bad_seed():
    with pytest.raises(ValueError):
        SplitMix64(-1)
    with pytest.raises(ValueError):
        SplitMix64(1 << 64)


def test_stereographic_examples():
    assert inverse_stereographic([0, 0, 0]).coords == (0, 0, 0, -1)
    assert inverse_stereographic([1, 0, 0]).coords == (1, 0, 0, 0)


@given(st.integers(0, (1 << 64) - 1), st.sampled_from([4, 8]))
def test_samples_are_exact_and_reproducible(seed, dim):
    pts = sample_sphere_points(dim, 3, seed)
    assert pts == sample_sphere_points(dim, 3, seed)
    assert len(pts) == 3 + 2 * dim + (dim == 8)
    for p in pts:
        assert sum(c * c for c in p) == 1
    for p in pts[:3]:
        # recover u from the point; its components are n/d with |n| <= 100, 1 <= d <= 100
        u = [c / (1 - p[-1]) for c in p[:-1]]
        assert all(abs(x.numerator) <= 100 and x.denominator <= 100 for x in u)


def test_sample_tail():
    pts = sample_sphere_points(8, 2, 0)
    assert pts[-1].coords == tuple(Fraction(c) for c in S1_WITNESS)
    with pytest.raises(ValueError):
        sample_sphere_points(6, 2, 0)
    with pytest.raises(ValueError):
        sample_sphere_points(4, 0, 0)


def test_suite_config_validation():
    with pytest.raises(UsageError):
        SuiteConfig("nope")
    with pytest.raises(UsageError):
        SuiteConfig("s3", samples=0)
    with pytest.raises(UsageError):
        SuiteConfig("s3", seed=-1)


def test_every_check_has_a_reference_and_suite():
    ids = list(checks.REGISTRY)
    assert len(ids) == len(set(ids))
    for c in checks.REGISTRY.values():
        assert c.paper_ref and c.suite in checks.SUITES
    for suite in checks.SUITES:
        assert checks.checks_for(suite)


def test_report_structure():
    report = run_suite(SuiteConfig("algebra", samples=5))
    data = json.loads(report.to_json())
    assert list(data) == ["suite", "seed", "samples", "checks", "summary"]
    assert list(data["checks"][0]) == ["id", "paper_ref", "status", "details", "counterexample"]
    assert [c["id"] for c in data["checks"]] == sorted(c["id"] for c in data["checks"])
    s = data["summary"]
    assert s["total"] == len(data["checks"]) == s["passed"] + s["failed"] + sum(c["status"] == "skip" for c in data["checks"])
    assert s["failed"] == 0


def test_failed_check_carries_rational_counterexample():
    report = run_suite(SuiteConfig("s3", samples=3))
    rec = next(c for c in report.checks if c.id == "s3.bracket.XY=2V")
    assert rec.status == "fail"
    assert rec.counterexample == ("1/1", "0/1", "0/1", "0/1")


def test_parallel_run_is_identical():
    cfg = SuiteConfig("s3-cr", samples=4)
    assert run_suite(cfg).to_json() == run_suite(cfg, workers=4).to_json()


def test_mutation_flipped_table_entry_fails_algebra(monkeypatch):
    flipped = algebra.OCTONION_TABLE.with_entry(4, 5, -1, 1)
    monkeypatch.setitem(algebra.TABLES, 8, flipped)
    report = run_suite(SuiteConfig("algebra", samples=3))
    assert not report.ok
    assert report.status_of("algebra.octonion.closed-form") == "fail"
    assert report.status_of("algebra.octonion.table") == "fail"


def test_oct_mult_table_matches_golden():
    assert emit_tables("oct-mult") == (GOLDEN / "oct_mult.csv").read_text(encoding="utf-8")


def test_commutator_table_rows():
    lines = emit_tables("commutators").splitlines()
    assert len(lines) == 22 and "\r" not in emit_tables("commutators")
    row = next(l for l in lines[1:] if l.startswith("4,5,"))
    values = [int(v) for v in row.split(",")[2:]]
    # Y45 = y1 d0 - y0 d1 - y3 d2 + y2 d3 + y5 d4 - y4 d5 - y7 d6 + y6 d7
    expected = {(0, 1): 1, (1, 0): -1, (2, 3): -1, (3, 2): 1, (4, 5): 1, (5, 4): -1, (6, 7): -1, (7, 6): 1}
    assert values == [expected.get((r, c), 0) for r in range(8) for c in range(8)]
    assert all(not l.endswith(",") for l in lines)
    with pytest.raises(UsageError):
        emit_tables("sedenions")


def test_cli_exit_codes(tmp_path, capsys):
    assert cli.main(["verify", "--suite", "algebra", "--samples", "3", "--output", str(tmp_path / "a.json")]) == 0
    assert cli.main(["verify", "--suite", "s3", "--samples", "3", "--format", "text"]) == 1
    assert "s3.bracket.XY=2V: fail" in capsys.readouterr().out
    assert cli.main(["verify", "--suite", "bogus"]) == 2
    assert cli.main(["verify", "--suite", "s3", "--samples", "0"]) == 2
    assert cli.main(["tables", "--kind", "nope"]) == 2
    assert cli.main([]) == 2


def test_cli_reports_are_byte_identical(tmp_path):
    paths = []
    for name in ("one.json", "two.json"):
        path = tmp_path / name
        cli.main(["verify", "--suite", "s3-hopf", "--samples", "4", "--seed", "7", "--output", str(path)])
        paths.append(path.read_bytes())
    assert paths[0] == paths[1]
    other = tmp_path / "three.json"
    cli.main(["verify", "--suite", "s3-hopf", "--samples", "4", "--seed", "8", "--output", str(other)])
    assert other.read_bytes() != paths[0]


def test_console_entry_point(tmp_path):
    out = tmp_path / "oct.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "hopfcheck", "tables", "--kind", "oct-mult", "--output", str(out)], capture_output=True
    )
    assert proc.returncode == 0
    assert out.read_bytes() == (GOLDEN / "oct_mult.csv").read_bytes()
