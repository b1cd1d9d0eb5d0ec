from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hopfcheck import vectorfields as vf
from hopfcheck.algebra import AlgebraElement
from hopfcheck.vectorfields import (
    Distribution,
    LinearVectorField,
    SpherePoint,
    bracket,
    eval_field,
    invariant_frame,
    s3_field,
    v_field,
    yfield,
)

from conftest import sphere_points

E0_8 = SpherePoint.basis(8, 0)


def sympy_bracket(f: LinearVectorField, g: LinearVectorField) -> list:
    """[F,G] = F(G) - G(F) computed on coordinate functions by sympy."""
    ys = sympy.symbols(f"y0:{f.dim}")
    fa = [sum(int(a) * y for a, y in zip(row, ys)) for row in f.matrix]
    ga = [sum(int(a) * y for a, y in zip(row, ys)) for row in g.matrix]
    out = []
    for k in range(f.dim):
        val = sum(fa[i] * sympy.diff(ga[k], ys[i]) - ga[i] * sympy.diff(fa[k], ys[i]) for i in range(f.dim))
        out.append([sympy.expand(val).coeff(y) for y in ys])
    return out


def test_point_must_be_unit():
    with pytest.raises(ValueError):
        SpherePoint([1, 1, 0, 0])
    assert SpherePoint([Fraction(3, 5), Fraction(4, 5), 0, 0]).as_strings()[0] == "3/5"


def test_right_translation_examples():
    assert vf.right_translation_matrix(AlgebraElement.basis(4, 0)) == [[int(i == j) for j in range(4)] for i in range(4)]
    assert vf.right_translation_matrix(AlgebraElement.basis(8, 0)) == [[int(i == j) for j in range(8)] for i in range(8)]
    assert vf.right_translation_matrix(AlgebraElement([0, 1, 0, 0]))[0] == [0, 1, 0, 0]
    with pytest.raises(ValueError):
        vf.right_translation_matrix(AlgebraElement([1, 0]))


def test_frame_evaluations():
    assert eval_field(s3_field("V"), [1, 0, 0, 0]) == (0, 1, 0, 0)
    assert eval_field(s3_field("X"), [1, 0, 0, 0]) == (0, 0, 1, 0)
    p = [Fraction(3, 5), Fraction(4, 5), 0, 0]
    assert eval_field(s3_field("N"), p) == tuple(p)
    assert eval_field(invariant_frame(8)[1], E0_8) == (0, 1, 0, 0, 0, 0, 0, 0)
    assert eval_field(yfield(4, 5), E0_8) == (0, -1, 0, 0, 0, 0, 0, 0)


def test_dimension_mismatch():
    with pytest.raises(vf.DimensionMismatchError):
        eval_field(s3_field("V"), E0_8)
    with pytest.raises(vf.DimensionMismatchError):
        bracket(s3_field("V"), invariant_frame(8)[1])


def test_bracket_matches_sympy_derivation():
    for f, g in itertools.combinations(invariant_frame(4)[1:], 2):
        assert [list(r) for r in bracket(f, g).matrix] == sympy_bracket(f, g)
    frame = invariant_frame(8)
    for f, g in [(frame[1], frame[2]), (frame[4], frame[5]), (v_field("v41"), v_field("v51"))]:
        assert [list(r) for r in bracket(f, g).matrix] == sympy_bracket(f, g)


def test_s3_bracket_relations():
    x, y, v = s3_field("X"), s3_field("Y"), s3_field("V")
    assert bracket(v, y) == x * 2
    assert bracket(x, v) == y * 2
    # derivation convention gives the opposite sign for this one
    assert bracket(x, y) == v * -2
    assert bracket(x, x).is_zero()


def test_commutator_table_matches_printed_fields():
    table = vf.commutator_table(invariant_frame(8))
    assert len(table) == 21
    for (i, j), f in table.items():
        assert f == vf.printed_commutator(i, j), (i, j)


def test_printed_y45():
    assert vf.printed_commutator(4, 5) == LinearVectorField.parse("y1 -y0 -y3 y2 y5 -y4 -y7 y6")


def test_commutator_halving_detects_odd_entries():
    frame = list(invariant_frame(8))
    frame[3] = frame[3] + LinearVectorField([[int(i == 0 and j == 1) for j in range(8)] for i in range(8)])
    with pytest.raises(vf.TranscriptionError):
        vf.commutator_table(frame)


def test_no_commutator_is_a_frame_field():
    frame = invariant_frame(8)
    for i, j in itertools.combinations(range(1, 8), 2):
        for k in range(1, 8):
            assert yfield(i, j) not in (frame[k], -frame[k])


def test_frames_are_skew():
    for f in list(invariant_frame(4)[1:]) + list(invariant_frame(8)[1:]):
        assert f.is_skew()


def test_s7_frame_is_not_the_columns_of_r():
    # the frame fields are orthonormal in their own right, not the columns of R_*
    r = vf.right_translation_polymatrix(8)
    cols = [tuple(r[i, k] for i in range(8)) for k in range(8)]
    frame = invariant_frame(8)
    assert frame[0].components() == cols[0]
    assert any(frame[k].components() != cols[k] for k in range(1, 8))


def test_v_field_decomposition():
    y = invariant_frame(8)
    assert v_field("v41") + v_field("v42") == y[4]
    assert v_field("v51") + v_field("v52") == y[5]
    assert v_field("v51") + v_field("v52_printed") != y[5]


def test_v_bracket_identities():
    y1 = invariant_frame(8)[1]
    s = bracket(v_field("v41"), v_field("v51")) + bracket(v_field("v42"), v_field("v52"))
    d = bracket(v_field("v41"), v_field("v51")) - bracket(v_field("v42"), v_field("v52"))
    assert d == y1 * -2
    assert s not in (y1 * -2, y1 * 2)


def test_complex_rotation_field():
    assert vf.complex_rotation_field(4) == s3_field("V")
    assert vf.complex_rotation_field(8) == invariant_frame(8)[1]


def test_contact_forms():
    one = Fraction(1)
    p = SpherePoint([Fraction(1, 3), Fraction(2, 3), Fraction(2, 3), 0])
    w = vf.CONTACT_FORMS["omega"]
    assert vf.one_form_eval(w, s3_field("X"), p) == 0
    assert vf.one_form_eval(w, s3_field("Y"), p) == 0
    assert vf.one_form_eval(w, s3_field("V"), p) == one
    t = vf.CONTACT_FORMS["theta"]
    assert (vf.one_form_eval(t, s3_field("Y"), p), vf.one_form_eval(t, s3_field("V"), p), vf.one_form_eval(t, s3_field("X"), p)) == (0, 0, 1)


def test_flag_examples():
    e0 = SpherePoint.basis(4, 0)
    assert vf.flag_dimensions(Distribution([s3_field("X"), s3_field("Y")]), e0, 2) == [2, 3]
    assert vf.flag_dimensions(Distribution(invariant_frame(8)[2:]), E0_8, 2) == [6, 7]
    h1 = Distribution([yfield(3, k) for k in (4, 5, 6, 7)])
    assert vf.flag_dimensions(h1, E0_8, 2) == [4, 7]


def test_bracket_generating_controls():
    pts = [SpherePoint.basis(4, i) for i in range(4)]
    assert vf.is_bracket_generating(Distribution([s3_field("X"), s3_field("Y")]), pts, 2) == (True, 2)
    assert vf.is_bracket_generating(Distribution([s3_field("Y"), s3_field("V")]), pts, 2) == (True, 2)
    assert vf.is_bracket_generating(Distribution([s3_field("X")]), pts, 2) == (False, None)


def test_non_tangent_bracket_is_reported():
    with pytest.raises(vf.TangencyError):
        vf.is_bracket_generating(Distribution([s3_field("N"), s3_field("X")]), [SpherePoint.basis(4, 0)], 2)


def test_item2_relations():
    for j in range(4):
        assert bracket(yfield(j, 4), yfield(j, 5)) == yfield(4, 5) * 2
        assert bracket(yfield(j, 4), yfield(j, 6)) == yfield(4, 6) * 2
        assert bracket(yfield(j, 5), yfield(j, 6)) == yfield(5, 6) * 2
    assert bracket(yfield(4, 7), yfield(5, 7)) == yfield(4, 5) * 2


@given(sphere_points(8))
def test_frame_orthonormal_and_tangent(p):
    vecs = [eval_field(f, p) for f in invariant_frame(8)]
    for (i, u), (j, v) in itertools.product(enumerate(vecs), repeat=2):
        assert sum(a * b for a, b in zip(u, v)) == (i == j)
    for i, j in itertools.combinations(range(1, 8), 2):
        assert vf.gram(yfield(i, j), vf.normal_field(8), p) == 0


@given(sphere_points(8), sphere_points(8), st.fractions(-3, 3, max_denominator=7), st.fractions(-3, 3, max_denominator=7))
def test_fields_are_linear(p, q, a, b):
    f = yfield(2, 6)
    combo = [a * x + b * y for x, y in zip(p, q)]
    assert eval_field(f, combo) == tuple(a * x + b * y for x, y in zip(eval_field(f, p), eval_field(f, q)))


@given(st.sampled_from(range(1, 8)), st.sampled_from(range(1, 8)), st.sampled_from(range(1, 8)))
def test_jacobi_and_antisymmetry(i, j, k):
    f, g, h = (invariant_frame(8)[n] for n in (i, j, k))
    assert bracket(f, g) == -bracket(g, f)
    assert (bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))).is_zero()
