"""Almost complex structures, holomorphic tangent spaces and the CR one-form on spheres.

Real coordinates are ordered (x0, x1, x2, ...) with z_k = x_{2k} + i x_{2k+1}.
Complex quantities are (real, imaginary) pairs of exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .polyengine import MultiPoly
from .vectorfields import (
    DimensionMismatchError,
    LinearVectorField,
    SpherePoint,
    complex_rotation_field,
    eval_field,
    invariant_frame,
    normal_field,
)


class CRConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class AlmostComplexStructure:
    """Standard J_n: d/dx_{2k} -> d/dx_{2k+1}, d/dx_{2k+1} -> -d/dx_{2k}."""

    dim: int

    def __post_init__(self) -> None:
        if self.dim % 2 or self.dim <= 0:
            raise ValueError("almost complex structures need an even positive dimension")

    @property
    def matrix(self) -> list[list[int]]:
        m = [[0] * self.dim for _ in range(self.dim)]
        for k in range(0, self.dim, 2):
            m[k + 1][k] = 1
            m[k][k + 1] = -1
        return m

    def apply(self, v: Sequence) -> list[Fraction]:
        return linalg.matvec(self.matrix, v)

    def apply_field(self, f: LinearVectorField) -> LinearVectorField:
        return f.transformed(self.matrix)

    def squares_to_minus_identity(self) -> bool:
        m = self.matrix
        sq = linalg.matmul(m, m)
        return all(sq[i][j] == -int(i == j) for i in range(self.dim) for j in range(self.dim))

    def is_orthogonal(self) -> bool:
        m = self.matrix
        g = linalg.matmul(linalg.transpose(m), m)
        return all(g[i][j] == int(i == j) for i in range(self.dim) for j in range(self.dim))


@dataclass(frozen=True)
class Subspace:
    ambient: int
    basis: tuple[tuple[Fraction, ...], ...]

    def __init__(self, ambient: int, basis: Sequence[Sequence]):
        vecs = tuple(tuple(Fraction(v) for v in b) for b in basis)
        if any(len(v) != ambient for v in vecs):
            raise ValueError("basis vector of the wrong length")
        if linalg.rank(vecs) != len(vecs):
            raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", vecs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vectors: Sequence[Sequence]) -> bool:
        return linalg.contains(self.basis, vectors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and linalg.same_span(self.basis, other.basis)

    def __hash__(self) -> int:
        return hash((self.ambient, self.dim))


def _point(p) -> SpherePoint:
    return p if isinstance(p, SpherePoint) else SpherePoint(p)


def tangent_space(p) -> Subspace:
    p = _point(p)
    return Subspace(p.dim, linalg.nullspace([list(p.coords)]))


def holomorphic_tangent(p) -> Subspace:
    """H_p = T_p ∩ J(T_p), computed by exact intersection."""
    p = _point(p)
    if p.dim not in (4, 8):
        raise ValueError("holomorphic tangent spaces are computed for S^3 and S^7")
    j = AlmostComplexStructure(p.dim)
    tangent = tangent_space(p).basis
    j_tangent = [j.apply(v) for v in tangent]
    return Subspace(p.dim, linalg.intersect(tangent, j_tangent))


def orthocomplement_of_rotation(p) -> Subspace:
    """{u in T_p : <u, V_{n+1}(p)> = 0}."""
    p = _point(p)
    v = eval_field(complex_rotation_field(p.dim), p)
    return Subspace(p.dim, linalg.nullspace([list(p.coords), list(v)]))


def verify_orthocomplement(p) -> bool:
    return holomorphic_tangent(p) == orthocomplement_of_rotation(p)


def s3_horizontal_matches_cr(p) -> bool:
    """On S^3, H_p equals span{X(p), Y(p)}."""
    p = _point(p)
    _, _, x, y = invariant_frame(4)
    return holomorphic_tangent(p) == Subspace(4, [eval_field(x, p), eval_field(y, p)])


def j_invariant(space: Subspace) -> bool:
    j = AlmostComplexStructure(space.ambient)
    return space.contains([j.apply(v) for v in space.basis])


def rotation_plane_complement_invariant(p) -> bool:
    """The orthocomplement of span{V(p), N(p)} is carried into itself by J."""
    p = _point(p)
    v = eval_field(complex_rotation_field(p.dim), p)
    comp = Subspace(p.dim, linalg.nullspace([list(p.coords), list(v)]))
    plane = Subspace(p.dim, [list(p.coords), list(v)])
    return j_invariant(plane) and j_invariant(comp)


def j_structure_check() -> dict[str, bool]:
    """Matrix identities relating J to the invariant frames."""
    j2 = AlmostComplexStructure(4)
    n, v, x, y = invariant_frame(4)
    j4 = AlmostComplexStructure(8)
    n8, v4 = normal_field(8), complex_rotation_field(8)
    frame8 = invariant_frame(8)
    results = {
        "J2^2=-I": j2.squares_to_minus_identity(),
        "J2 orthogonal": j2.is_orthogonal(),
        "J2(X)=Y": j2.apply_field(x) == y,
        "J2(Y)=-X": j2.apply_field(y) == -x,
        "J2(V)=-N": j2.apply_field(v) == -n,
        "J2(N)=V": j2.apply_field(n) == v,
        "J4^2=-I": j4.squares_to_minus_identity(),
        "J4 orthogonal": j4.is_orthogonal(),
        "J4(V4)=-N": j4.apply_field(v4) == -n8,
        "J4(N)=V4": j4.apply_field(n8) == v4,
        "V4=Y1": v4 == frame8[1],
        "V2=V": complex_rotation_field(4) == v,
    }
    results["J2(J2(F))=-F"] = all(j2.apply_field(j2.apply_field(f)) == -f for f in (n, v, x, y))
    return results


# ---------------------------------------------------------------------------
# Complex one-form  omega = sum_k conj(z_k) dz_k  and complex vector fields


def cr_form_value(p, u) -> tuple[Fraction, Fraction]:
    """omega_p(u) computed directly from conj(z_k) * (u_{2k} + i u_{2k+1})."""
    x = list(_point(p).coords)
    re = im = Fraction(0)
    for k in range(0, len(x), 2):
        a, b = x[k], -x[k + 1]  # conj(z_k)
        c, d = u[k], u[k + 1]  # dz_k(u)
        re += a * c - b * d
        im += a * d + b * c
    return re, im


def cr_form_eval(f: LinearVectorField, p) -> tuple[Fraction, Fraction]:
    """omega(F(p)) returned as (<F(p), N(p)>, <F(p), V(p)>).

    Raises :class:`CRConsistencyError` if the direct complex evaluation disagrees.
    """
    p = _point(p)
    if f.dim != p.dim:
        raise DimensionMismatchError("field and point dimensions differ")
    u = eval_field(f, p)
    pair = (linalg.dot(u, p.coords), linalg.dot(u, eval_field(complex_rotation_field(p.dim), p)))
    if cr_form_value(p, u) != pair:
        raise CRConsistencyError("complex evaluation of omega disagrees with the inner products")
    return pair


@dataclass(frozen=True)
class ComplexLinear:
    """Complex-valued linear function of the real coordinates, as (real row, imaginary row)."""

    re: tuple[Fraction, ...]
    im: tuple[Fraction, ...]

    @classmethod
    def z(cls, k: int, dim: int, conjugate: bool = False) -> "ComplexLinear":
        re = [Fraction(0)] * dim
        im = [Fraction(0)] * dim
        re[2 * k] = Fraction(1)
        im[2 * k + 1] = Fraction(-1 if conjugate else 1)
        return cls(tuple(re), tuple(im))

    def __neg__(self) -> "ComplexLinear":
        return ComplexLinear(tuple(-a for a in self.re), tuple(-a for a in self.im))


@dataclass(frozen=True)
class ComplexField:
    """Complex vector field re + i*im with real linear parts."""

    re: LinearVectorField
    im: LinearVectorField


def wirtinger_field(
    dim: int,
    holomorphic: dict[int, ComplexLinear] | None = None,
    antiholomorphic: dict[int, ComplexLinear] | None = None,
) -> ComplexField:
    """sum_k c_k d/dz_k + d_k d/dconj(z_k) in real coordinates.

    Uses d/dz = (d/dx - i d/dy)/2 and d/dconj(z) = (d/dx + i d/dy)/2.
    """
    half = Fraction(1, 2)
    re = [[Fraction(0)] * dim for _ in range(dim)]
    im = [[Fraction(0)] * dim for _ in range(dim)]

    def add(row, vec, scale):
        for j, v in enumerate(vec):
            row[j] += scale * v

    for k, c in (holomorphic or {}).items():
        x, y = 2 * k, 2 * k + 1
        add(re[x], c.re, half)
        add(re[y], c.im, half)
        add(im[x], c.im, half)
        add(im[y], c.re, -half)
    for k, d in (antiholomorphic or {}).items():
        x, y = 2 * k, 2 * k + 1
        add(re[x], d.re, half)
        add(re[y], d.im, -half)
        add(im[x], d.im, half)
        add(im[y], d.re, half)
    return ComplexField(LinearVectorField(re), LinearVectorField(im))


def kernel_field_s3() -> ComplexField:
    """conj(w) d/dz - conj(z) d/dw on C^2, with z = z_0 and w = z_1."""
    return wirtinger_field(
        4, holomorphic={0: ComplexLinear.z(1, 4, conjugate=True), 1: -ComplexLinear.z(0, 4, conjugate=True)}
    )


def antikernel_field_s3() -> ComplexField:
    """-w d/dconj(z) + z d/dconj(w)."""
    return wirtinger_field(4, antiholomorphic={0: -ComplexLinear.z(1, 4), 1: ComplexLinear.z(0, 4)})


def kernel_field_identities() -> dict[str, bool]:
    _, _, x, y = invariant_frame(4)
    half = Fraction(1, 2)
    k = kernel_field_s3()
    a = antikernel_field_s3()
    return {
        "conj(w)dz-conj(z)dw=(-X+iY)/2": k.re == (-x) * half and k.im == y * half,
        "-w dconj(z)+z dconj(w)=(X+iY)/2": a.re == x * half and a.im == y * half,
    }


def cr_form_polys(f: LinearVectorField) -> tuple[MultiPoly, MultiPoly]:
    """Real and imaginary parts of omega(F) as polynomials in the base point."""
    n = f.dim
    xs = MultiPoly.variables(n)
    comps = f.components()
    re = im = MultiPoly(n)
    for k in range(0, n, 2):
        a, b = xs[k], -xs[k + 1]
        c, d = comps[k], comps[k + 1]
        re = re + a * c - b * d
        im = im + a * d + b * c
    return re, im


def complex_form_on_field(cf: ComplexField, conjugate_form: bool = False) -> tuple[MultiPoly, MultiPoly]:
    """omega (or its conjugate) applied C-linearly to a complex field."""
    re_r, re_i = cr_form_polys(cf.re)
    im_r, im_i = cr_form_polys(cf.im)
    if conjugate_form:
        re_i, im_i = -re_i, -im_i
    # (A + iB)(re) + i (A + iB)(im)
    return re_r - im_i, re_i + im_r
