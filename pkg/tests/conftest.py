from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hopfcheck.sampling import inverse_stereographic

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=12)


def rational_vectors(n: int):
    return st.lists(small_fractions, min_size=n, max_size=n)


def sphere_points(dim: int):
    """Exact rational points on S^{dim-1}."""
    return rational_vectors(dim - 1).map(inverse_stereographic)


def algebra_elements(dim: int):
    from hopfcheck.algebra import AlgebraElement

    return rational_vectors(dim).map(AlgebraElement)


def half() -> Fraction:
    return Fraction(1, 2)


# filled by test_acceptance, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
