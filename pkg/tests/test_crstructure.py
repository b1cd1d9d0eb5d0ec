from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from hopfcheck import crstructure as cr
from hopfcheck.vectorfields import SpherePoint, complex_rotation_field, invariant_frame, normal_field, s3_field

from conftest import sphere_points

E0 = SpherePoint.basis(4, 0)


def test_j_matrix_properties():
    for dim in (4, 8):
        j = cr.AlmostComplexStructure(dim)
        assert j.squares_to_minus_identity() and j.is_orthogonal()
        # J d/dx_k = d/dy_k in interleaved coordinates
        assert j.apply([1] + [0] * (dim - 1)) == [0, 1] + [0] * (dim - 2)


def test_holomorphic_tangent_at_e0():
    h = cr.holomorphic_tangent(E0)
    assert h == cr.Subspace(4, [[0, 0, 1, 0], [0, 0, 0, 1]])


def test_subspace_requires_independent_basis():
    with pytest.raises(ValueError):
        cr.Subspace(4, [[1, 0, 0, 0], [2, 0, 0, 0]])


def test_orthocomplement_example():
    assert cr.verify_orthocomplement(E0)


def test_j_structure_identities():
    results = cr.j_structure_check()
    assert results and all(results.values()), results


def test_cr_form_examples():
    p = SpherePoint([Fraction(1, 3), Fraction(2, 3), Fraction(2, 3), 0])
    assert cr.cr_form_eval(s3_field("X"), p) == (0, 0)
    assert cr.cr_form_eval(s3_field("V"), p) == (0, 1)
    assert cr.cr_form_eval(normal_field(4), p) == (1, 0)
    with pytest.raises(ValueError):
        cr.cr_form_eval(s3_field("X"), SpherePoint.basis(8, 0))


def _apply_to_coordinates(cf: cr.ComplexField):
    """F(x_j) for each real coordinate, as sympy expressions."""
    xs = sympy.symbols("x0:4", real=True)
    out = []
    for j in range(4):
        re = sum(int(2 * a) * x for a, x in zip(cf.re.matrix[j], xs)) / 2
        im = sum(int(2 * a) * x for a, x in zip(cf.im.matrix[j], xs)) / 2
        out.append(sympy.expand(re + sympy.I * im))
    return xs, out


def test_kernel_field_against_wirtinger_calculus():
    xs, values = _apply_to_coordinates(cr.kernel_field_s3())
    z, w = xs[0] + sympy.I * xs[1], xs[2] + sympy.I * xs[3]
    # d/dz x0 = 1/2, d/dz x1 = -i/2, and likewise for w
    expected = [sympy.conjugate(w) / 2, -sympy.I * sympy.conjugate(w) / 2, -sympy.conjugate(z) / 2, sympy.I * sympy.conjugate(z) / 2]
    for got, exp in zip(values, expected):
        assert sympy.expand(got - exp) == 0


def test_kernel_field_identities():
    assert all(cr.kernel_field_identities().values())


def test_kernel_fields_annihilated():
    re, im = cr.complex_form_on_field(cr.kernel_field_s3())
    assert re.is_zero() and im.is_zero()
    re, im = cr.complex_form_on_field(cr.antikernel_field_s3(), conjugate_form=True)
    assert re.is_zero() and im.is_zero()


@given(sphere_points(4))
def test_s3_cr_structure(p):
    h = cr.holomorphic_tangent(p)
    assert h.dim == 2 and cr.j_invariant(h)
    assert cr.verify_orthocomplement(p)
    assert cr.s3_horizontal_matches_cr(p)


@given(sphere_points(8))
def test_s7_cr_structure(p):
    h = cr.holomorphic_tangent(p)
    assert h.dim == 6 and cr.j_invariant(h)
    assert cr.tangent_space(p).contains(h.basis)
    assert cr.verify_orthocomplement(p)
    assert cr.rotation_plane_complement_invariant(p)
    for f in invariant_frame(8)[2:]:
        assert cr.cr_form_eval(f, p) == (0, 0)
    assert cr.cr_form_eval(complex_rotation_field(8), p) == (0, 1)
