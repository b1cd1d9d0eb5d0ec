from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hopfcheck import fibrations as fb
from hopfcheck import linalg
from hopfcheck.sampling import S1_WITNESS
from hopfcheck.vectorfields import SpherePoint, eval_field

from conftest import sphere_points

X = sympy.symbols("x0:8", real=True)
E0 = SpherePoint.basis(8, 0)


def test_hopf_s3_examples():
    assert fb.hopf_s3_map([1, 0, 0, 0]) == (1, 0, 0)
    assert fb.hopf_s3_map([Fraction(3, 5), 0, Fraction(4, 5), 0]) == (Fraction(-7, 25), Fraction(24, 25), 0)


def test_hopf_s3_jacobian_against_sympy():
    z, w = X[0] + sympy.I * X[1], X[2] + sympy.I * X[3]
    zw = sympy.expand(2 * z * sympy.conjugate(w))
    comps = [X[0] ** 2 + X[1] ** 2 - X[2] ** 2 - X[3] ** 2, sympy.re(zw), sympy.im(zw)]
    jac = sympy.Matrix(comps).jacobian(X[:4])
    polys = fb.hopf_s3().polys()
    for comp, poly in zip(comps, polys):
        assert sympy.expand(comp - sum(c * sympy.Mul(*[x**e for x, e in zip(X, ex)]) for ex, c in poly.terms().items())) == 0
    printed = fb.hopf_s3_printed_jacobian()
    for i, j in itertools.product(range(3), range(4)):
        entry = sum(int(c) * sympy.Mul(*[x**e for x, e in zip(X, ex)]) for ex, c in printed[i, j].terms().items())
        assert sympy.expand(jac[i, j] - 2 * entry) == 0


def test_hopf_s3_kernel_at_e0():
    _, kernel = fb.hopf_s3_jacobian([1, 0, 0, 0])
    assert linalg.same_span(kernel, [[0, 1, 0, 0]])


def test_minor_identity_needs_the_unscaled_matrix():
    lhs, rhs = fb.minor_sum_identity()
    assert lhs == rhs
    scaled, _ = fb.minor_sum_identity(scale=2)
    assert scaled == rhs * 64


def test_fiber_curve_check():
    assert fb.fiber_curve_check([1, 0, 0, 0], 16)
    with pytest.raises(ValueError):
        fb.fiber_curve_check([1, 0, 0, 0], 3)


@given(sphere_points(4))
def test_hopf_s3_properties(p):
    assert sum(c * c for c in fb.hopf_s3_map(p)) == 1
    assert fb.s3_kernel_is_rotation(p)
    h = fb.hopf_s3_map(p)
    assert fb.hopf_s3_map(fb.rotate_fiber(p, Fraction(3, 5), Fraction(4, 5))) == h


@given(sphere_points(4))
def test_fiber_curve_random_points(p):
    assert fb.fiber_curve_check(p, 16)


def test_chart_examples():
    assert fb.chart_map(E0) == (0,) * 6
    assert fb.chart_map([Fraction(3, 5), Fraction(4, 5)] + [0] * 6) == (0,) * 6
    with pytest.raises(fb.ChartDomainError):
        fb.chart_map(SpherePoint.basis(8, 2))
    jac = fb.chart_jacobian(E0)
    assert jac.rank == 6
    assert linalg.same_span(jac.kernel, [[1] + [0] * 7, [0, 1] + [0] * 6])
    assert fb.chart_gram_determinant(E0) == 1


def test_chart_jacobian_against_sympy():
    s = X[0] ** 2 + X[1] ** 2
    comps = []
    for k in (1, 2, 3):
        a, b = X[2 * k], X[2 * k + 1]
        comps += [(X[0] * a + X[1] * b) / s, (X[0] * b - X[1] * a) / s]
    jac = sympy.Matrix(comps).jacobian(X)
    cleared = fb.chart_jacobian_cleared()
    for i, j in itertools.product(range(6), range(8)):
        entry = sum(c * sympy.Mul(*[x**e for x, e in zip(X, ex)]) for ex, c in cleared[i, j].terms().items())
        assert sympy.simplify(jac[i, j] * s**2 - entry) == 0


def test_chart_determinant_identity():
    assert fb.chart_determinant_identity()


@given(sphere_points(8))
def test_chart_properties(p):
    if not (p[0] or p[1]):
        return
    jac = fb.chart_jacobian(p)
    assert jac.rank == 6 and fb.chart_kernel_is_normal_and_rotation(p)
    assert fb.chart_gram_determinant(p) * (p[0] ** 2 + p[1] ** 2) ** 8 == 1


def test_quat_hopf_examples():
    assert fb.quat_hopf_map(E0) == (1, 0, 0, 0, 0)
    assert fb.quat_hopf_map(SpherePoint.basis(8, 7)) == (-1, 0, 0, 0, 0)
    assert fb.quat_hopf_jacobian(E0).restricted_rank == 4


def test_quat_hopf_matches_quaternion_formula():
    # (|z|^2 - |w|^2, 2 z conj(w)) with z, w the quaternions in the two halves
    q = sympy.algebras.quaternion.Quaternion
    z, w = q(*X[:4]), q(*X[4:])
    zw = z * q(w.a, -w.b, -w.c, -w.d)
    comps = [sum(x**2 for x in X[:4]) - sum(x**2 for x in X[4:])] + [2 * c for c in (zw.a, zw.b, zw.c, zw.d)]
    ours = [sum(c * sympy.Mul(*[x**e for x, e in zip(X, ex)]) for ex, c in p.terms().items()) for p in fb.quat_hopf().polys()]
    for a, b in zip(ours, comps):
        assert sympy.expand(a - b) == 0


def test_vertical_fields_in_kernel_on_r8():
    assert all(fb.vertical_polynomial_identities().values())


def test_coefficient_identities():
    assert all(fb.coefficient_identities_check().values())
    assert all(fb.gram_claim_identities().values())


def test_coefficients_at_examples():
    c = fb.hopf_coefficients(E0)
    assert c.coordinates() == (1, 0, 0, 0, 0)
    assert all(v == 0 for row in c.amk for v in row)
    w = fb.hopf_coefficients(S1_WITNESS)
    assert w.a00 == 0 and w.a11 == 1


@given(sphere_points(8))
def test_quat_hopf_properties(p):
    assert sum(c * c for c in fb.quat_hopf_map(p)) == 1
    jac = fb.quat_hopf_jacobian(p)
    assert jac.vertical_ok and jac.restricted_rank == 4
    assert linalg.matvec(jac.matrix, p.coords) == [2 * c for c in fb.quat_hopf_map(p)]
    c = fb.hopf_coefficients(p)
    assert sum(v * v for v in c.coordinates()) == 1
    for m in range(4):
        assert c.a00**2 + sum(v * v for v in c.amk[m]) == 1


def test_regions():
    assert fb.region(S1_WITNESS) is fb.RegionTag.S1
    assert fb.region(E0) is fb.RegionTag.S2
    assert fb.region(SpherePoint.basis(8, 6)) is fb.RegionTag.S2
    assert fb.region([Fraction(3, 5), 0, 0, 0, Fraction(4, 5), 0, 0, 0]) is fb.RegionTag.GENERIC


def test_transversality_examples():
    assert fb.transversality_check(fb.collection(1), E0)
    assert not fb.transversality_check(fb.collection_zero(0), E0)
    assert not fb.transversality_check(fb.collection(1), S1_WITNESS)


def test_ehresmann_select_examples():
    sel = fb.ehresmann_select(E0)
    assert sel.tag is fb.RegionTag.S2 and sel.label == "H1"
    sel = fb.ehresmann_select(S1_WITNESS)
    assert sel.tag is fb.RegionTag.S1 and sel.label.startswith("H0")
    assert fb.selection_flag(sel, S1_WITNESS) == [4, 7]


def test_clause_ii_every_j_counterexample():
    # outside S1 and S2, yet H0 with Y07 is not transverse because a44 vanishes
    p = SpherePoint([Fraction(3, 5), 0, 0, 0, Fraction(4, 5), 0, 0, 0])
    assert fb.hopf_coefficients(p).a44 == 0
    assert [fb.transversality_check(fb.collection_zero(j), p) for j in range(4)] == [False, False, False, True]


@given(sphere_points(8))
def test_transversality_criterion(p):
    # H_m is transverse exactly when a00 != 0; H0 + Y_j7 when a00^2 != 1 and the matching a_mm != 0
    c = fb.hopf_coefficients(p)
    for m in range(1, 5):
        assert fb.transversality_check(fb.collection(m), p) == (c.a00 != 0)
    diag = {0: c.a44, 1: c.a33, 2: c.a22, 3: c.a11}
    for j in range(4):
        assert fb.transversality_check(fb.collection_zero(j), p) == (c.a00**2 != 1 and diag[j] != 0)


@given(sphere_points(8))
def test_selection_is_always_transverse(p):
    sel = fb.ehresmann_select(p)
    vectors = [eval_field(g, p) for g in sel.generators] + [eval_field(v, p) for v in fb.vertical_fields()]
    assert linalg.rank(vectors) == 7


def test_quadratic_map_rejects_non_quadratic():
    from hopfcheck.polyengine import MultiPoly

    with pytest.raises(ValueError):
        fb.QuadraticMap.from_polys([MultiPoly.var(0, 2)])


@given(st.lists(st.floats(-1, 1), min_size=8, max_size=8))
def test_finite_difference_jacobian(x):
    q = fb.quat_hopf()
    exact, approx = q.float_jacobian(x), fb.finite_difference_jacobian(q, x)
    assert max(abs(a - b) for r, s in zip(exact, approx) for a, b in zip(r, s)) < 1e-6
