"""Hopf-type maps with exact Jacobians.

* the complex Hopf map S^3 -> S^2,
* the affine chart of S^7 -> CP^3 on {z_0 != 0},
* the quaternionic Hopf map S^7 -> S^4 and its Ehresmann connections.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .polyengine import MultiPoly, PolyMatrix, norm_sq_poly, poly_det, poly_identity_check
from .vectorfields import (
    Distribution,
    LinearVectorField,
    SpherePoint,
    complex_rotation_field,
    eval_field,
    flag_dimensions,
    gram_poly,
    invariant_frame,
    normal_field,
    yfield,
)


class FibrationConsistencyError(RuntimeError):
    pass


class ChartDomainError(ValueError):
    """Point lies outside the chart {x0^2 + x1^2 != 0}."""


class TheoremViolation(RuntimeError):
    """No candidate connection is transverse to the vertical space at a point."""


def _point(p) -> SpherePoint:
    return p if isinstance(p, SpherePoint) else SpherePoint(p)


@dataclass(frozen=True)
class QuadraticMap:
    """Map whose component c is x^T Q_c x for symmetric rational Q_c."""

    in_dim: int
    components: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @property
    def out_dim(self) -> int:
        return len(self.components)

    @classmethod
    def from_polys(cls, polys: Sequence[MultiPoly]) -> "QuadraticMap":
        n = polys[0].nvars
        comps = []
        for poly in polys:
            q = [[Fraction(0)] * n for _ in range(n)]
            for exps, c in poly.terms().items():
                idx = [i for i, e in enumerate(exps) for _ in range(e)]
                if len(idx) != 2:
                    raise ValueError("component is not a quadratic form")
                i, j = idx
                if i == j:
                    q[i][i] += c
                else:
                    q[i][j] += Fraction(c, 2)
                    q[j][i] += Fraction(c, 2)
            comps.append(tuple(tuple(r) for r in q))
        return cls(n, tuple(comps))

    def __call__(self, x: Sequence) -> tuple[Fraction, ...]:
        x = [Fraction(v) for v in x]
        return tuple(linalg.dot(x, linalg.matvec(q, x)) for q in self.components)

    def jacobian(self, x: Sequence) -> list[list[Fraction]]:
        x = [Fraction(v) for v in x]
        return [[2 * v for v in linalg.matvec(q, x)] for q in self.components]

    def polys(self) -> list[MultiPoly]:
        xs = MultiPoly.variables(self.in_dim)
        out = []
        for q in self.components:
            total = MultiPoly(self.in_dim)
            for i in range(self.in_dim):
                for j in range(self.in_dim):
                    if q[i][j]:
                        total = total + xs[i] * xs[j] * q[i][j]
            out.append(total)
        return out

    def jacobian_poly(self) -> PolyMatrix:
        """Rows 2 x^T Q_c as linear polynomials."""
        return PolyMatrix([[MultiPoly.linear([2 * v for v in row]) for row in zip(*q)] for q in self.components])

    def float_value(self, x: Sequence[float]) -> list[float]:
        return [
            sum(float(q[i][j]) * x[i] * x[j] for i in range(self.in_dim) for j in range(self.in_dim))
            for q in self.components
        ]

    def float_jacobian(self, x: Sequence[float]) -> list[list[float]]:
        return [
            [2 * sum(float(q[i][j]) * x[j] for j in range(self.in_dim)) for i in range(self.in_dim)]
            for q in self.components
        ]


def _grid(text: str, nvars: int) -> PolyMatrix:
    """Matrix of signed single coordinates such as ``-x3``."""
    xs = MultiPoly.variables(nvars)
    rows = []
    for line in text.strip().splitlines():
        row = []
        for tok in line.split():
            sign = -1 if tok.startswith("-") else 1
            row.append(xs[int(tok.lstrip("+-")[1:])] * sign)
        rows.append(row)
    return PolyMatrix(rows)


def finite_difference_jacobian(qmap: QuadraticMap, x: Sequence[float], step: float = 1e-6) -> list[list[float]]:
    cols = []
    for j in range(qmap.in_dim):
        hi = list(x)
        lo = list(x)
        hi[j] += step
        lo[j] -= step
        fh, fl = qmap.float_value(hi), qmap.float_value(lo)
        cols.append([(a - b) / (2 * step) for a, b in zip(fh, fl)])
    return [list(r) for r in zip(*cols)]


# ---------------------------------------------------------------------------
# S^3 -> S^2


@lru_cache(maxsize=None)
def hopf_s3() -> QuadraticMap:
    x0, x1, x2, x3 = MultiPoly.variables(4)
    # (|z|^2 - |w|^2, 2 Re(z conj w), 2 Im(z conj w)) with z = x0 + i x1, w = x2 + i x3
    return QuadraticMap.from_polys(
        [x0 * x0 + x1 * x1 - x2 * x2 - x3 * x3, 2 * (x0 * x2 + x1 * x3), 2 * (x1 * x2 - x0 * x3)]
    )


# Jacobian of the S^3 Hopf map as tabulated, without its overall factor 2.
HOPF_S3_JACOBIAN_UNSCALED = """
 x0 x1 -x2 -x3
 x2 x3  x0  x1
-x3 x2  x1 -x0
"""


def hopf_s3_printed_jacobian() -> PolyMatrix:
    return _grid(HOPF_S3_JACOBIAN_UNSCALED, 4)


def hopf_s3_map(p) -> tuple[Fraction, ...]:
    return hopf_s3()(_point(p).coords)


def hopf_s3_jacobian(p) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """Jacobian at p and a basis of its kernel (always one-dimensional on S^3)."""
    p = _point(p)
    jac = hopf_s3().jacobian(p.coords)
    if linalg.rank(jac) != 3:
        raise FibrationConsistencyError(f"Hopf Jacobian is rank deficient at {p.as_strings()}")
    return jac, linalg.nullspace(jac, 4)


def s3_kernel_is_rotation(p) -> bool:
    _, kernel = hopf_s3_jacobian(p)
    return linalg.same_span(kernel, [eval_field(invariant_frame(4)[1], p)])


def minor_sum_identity(scale: int = 1) -> tuple[MultiPoly, MultiPoly]:
    """(sum_i det(D_i)^2, |x|^6) for the Jacobian scaled by ``scale``.

    D_i deletes column i. With ``scale=1`` both sides agree identically.
    """
    jac = hopf_s3_printed_jacobian()
    total = MultiPoly(4)
    for drop in range(4):
        keep = [c for c in range(4) if c != drop]
        minor = PolyMatrix([[jac[i, c] * scale for c in keep] for i in range(3)])
        d = poly_det(minor)
        total = total + d * d
    return total, norm_sq_poly(4) ** 3


def rotate_fiber(p, cos_t: Fraction, sin_t: Fraction) -> tuple[Fraction, ...]:
    """Multiply every complex coordinate by cos_t + i sin_t."""
    x = list(_point(p).coords)
    out = []
    for k in range(0, len(x), 2):
        a, b = x[k], x[k + 1]
        out += [cos_t * a - sin_t * b, sin_t * a + cos_t * b]
    return tuple(out)


def fiber_curve_deviations(p, samples: int, step: float = 1e-6) -> tuple[float, float]:
    """Max |h(gamma(t)) - h(p)| and max |gamma'(t) - 2 pi V(gamma(t))| over t = k/samples.

    The velocity is a centred finite difference; gamma(t) = exp(2 pi i t) (z0, w0).
    """
    if samples < 4:
        raise ValueError("need at least four samples")
    coords = [float(c) for c in _point(p).coords]
    z0, w0 = complex(coords[0], coords[1]), complex(coords[2], coords[3])
    h = hopf_s3()
    base = h.float_value(coords)

    def gamma(t: float) -> list[float]:
        r = cmath.exp(2j * math.pi * t)
        z, w = r * z0, r * w0
        return [z.real, z.imag, w.real, w.imag]

    fiber_dev = vel_dev = 0.0
    for k in range(samples + 1):
        t = k / samples
        g = gamma(t)
        fiber_dev = max(fiber_dev, max(abs(a - b) for a, b in zip(h.float_value(g), base)))
        hi, lo = gamma(t + step), gamma(t - step)
        velocity = [(a - b) / (2 * step) for a, b in zip(hi, lo)]
        v = [-g[1], g[0], -g[3], g[2]]
        vel_dev = max(vel_dev, math.sqrt(sum((a - 2 * math.pi * b) ** 2 for a, b in zip(velocity, v))))
    periodic = max(abs(a - b) for a, b in zip(gamma(1.0), coords))
    fiber_dev = max(fiber_dev, periodic)
    return fiber_dev, vel_dev


def fiber_curve_check(p, samples: int, fiber_tol: float = 1e-12, velocity_tol: float = 1e-9) -> bool:
    fiber_dev, vel_dev = fiber_curve_deviations(p, samples)
    return fiber_dev <= fiber_tol and vel_dev <= velocity_tol


# ---------------------------------------------------------------------------
# S^7 -> CP^3, chart z_0 != 0


@dataclass(frozen=True)
class RationalMap:
    in_dim: int
    components: tuple[tuple[MultiPoly, MultiPoly], ...]

    @property
    def out_dim(self) -> int:
        return len(self.components)


def chart_denominator() -> MultiPoly:
    x = MultiPoly.variables(8)
    return x[0] * x[0] + x[1] * x[1]


@lru_cache(maxsize=None)
def chart() -> RationalMap:
    """z_k / z_0 for k = 1, 2, 3 in real coordinates."""
    x = MultiPoly.variables(8)
    s = chart_denominator()
    comps = []
    for k in (1, 2, 3):
        a, b = x[2 * k], x[2 * k + 1]
        comps.append((x[0] * a + x[1] * b, s))
        comps.append((x[0] * b - x[1] * a, s))
    return RationalMap(8, tuple(comps))


def chart_jacobian_cleared() -> PolyMatrix:
    """(x0^2 + x1^2)^2 times the chart Jacobian, by the quotient rule."""
    rows = []
    for num, den in chart().components:
        rows.append([num.diff(j) * den - num * den.diff(j) for j in range(8)])
    return PolyMatrix(rows)


def chart_printed_jacobian_cleared() -> PolyMatrix:
    """Tabulated chart Jacobian with every entry multiplied by (x0^2 + x1^2)^2."""
    x = MultiPoly.variables(8)
    x0, x1 = x[0], x[1]
    s = chart_denominator()
    d = x1 * x1 - x0 * x0
    zero = MultiPoly(8)
    rows = []
    for k in (1, 2, 3):
        a, b = x[2 * k], x[2 * k + 1]
        first = [d * a - 2 * x0 * x1 * b, -d * b - 2 * x0 * x1 * a]
        second = [d * b + 2 * x0 * x1 * a, d * a - 2 * x0 * x1 * b]
        tail1 = [zero] * 6
        tail2 = [zero] * 6
        tail1[2 * k - 2], tail1[2 * k - 1] = x0 * s, x1 * s
        tail2[2 * k - 2], tail2[2 * k - 1] = -x1 * s, x0 * s
        rows.append(first + tail1)
        rows.append(second + tail2)
    return PolyMatrix(rows)


def _on_chart(p) -> tuple[SpherePoint, Fraction]:
    p = _point(p)
    if p.dim != 8:
        raise ValueError("chart is defined on S^7")
    s = p[0] ** 2 + p[1] ** 2
    if not s:
        raise ChartDomainError(f"point {p.as_strings()} lies outside the chart")
    return p, s


def chart_map(p) -> tuple[Fraction, ...]:
    p, s = _on_chart(p)
    return tuple(num.eval(p.coords) / s for num, _ in chart().components)


@dataclass(frozen=True)
class ChartJacobian:
    matrix: list[list[Fraction]]
    rank: int
    kernel: list[list[Fraction]]


def chart_jacobian(p) -> ChartJacobian:
    p, s = _on_chart(p)
    cleared = chart_jacobian_cleared().eval(p.coords)
    jac = [[Fraction(v) / s**2 for v in row] for row in cleared]
    return ChartJacobian(jac, linalg.rank(jac), linalg.nullspace(jac, 8))


def chart_kernel_is_normal_and_rotation(p) -> bool:
    jac = chart_jacobian(p)
    expected = [eval_field(normal_field(8), p), eval_field(complex_rotation_field(8), p)]
    return linalg.same_span(jac.kernel, expected)


def chart_gram_determinant(p) -> Fraction:
    """det(J J^T) at p."""
    jac = chart_jacobian(p).matrix
    g = linalg.matmul(jac, linalg.transpose(jac))
    return _fraction_det(g)


def _fraction_det(m: list[list[Fraction]]) -> Fraction:
    m = [list(map(Fraction, r)) for r in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def chart_determinant_identity() -> bool:
    """det(K K^T) == (x0^2 + x1^2)^16 on S^7, K the cleared Jacobian."""
    k = chart_jacobian_cleared()
    det = poly_det(k @ k.transpose())
    return poly_identity_check(det, chart_denominator() ** 16, mod_sphere=True)


# ---------------------------------------------------------------------------
# S^7 -> S^4


@lru_cache(maxsize=None)
def quat_hopf() -> QuadraticMap:
    return QuadraticMap.from_polys([COEFFICIENT_POLYS[name] for name in ("a00", "a11", "a22", "a33", "a44")])


# dh as tabulated, without its overall factor 2.
QUAT_HOPF_JACOBIAN_UNSCALED = """
 x0  x1  x2  x3 -x4 -x5 -x6 -x7
 x4  x5  x6  x7  x0  x1  x2  x3
-x5  x4 -x7  x6  x1 -x0  x3 -x2
-x6  x7  x4 -x5  x2 -x3 -x0  x1
-x7 -x6  x5  x4  x3  x2 -x1 -x0
"""


def quat_hopf_printed_jacobian() -> PolyMatrix:
    return _grid(QUAT_HOPF_JACOBIAN_UNSCALED, 8)


def quat_hopf_map(p) -> tuple[Fraction, ...]:
    return quat_hopf()(_point(p).coords)


VERTICAL = ((4, 5), (4, 6), (5, 6))


def vertical_fields() -> tuple[LinearVectorField, ...]:
    return tuple(yfield(i, j) for i, j in VERTICAL)


@dataclass(frozen=True)
class QuatJacobian:
    matrix: list[list[Fraction]]
    vertical_ok: bool
    restricted_rank: int


def quat_hopf_jacobian(p) -> QuatJacobian:
    p = _point(p)
    jac = quat_hopf().jacobian(p.coords)
    vertical_ok = all(not any(linalg.matvec(jac, eval_field(v, p))) for v in vertical_fields())
    tangent = linalg.nullspace([list(p.coords)], 8)
    restricted = [linalg.matvec(jac, t) for t in tangent]
    return QuatJacobian(jac, vertical_ok, linalg.rank(restricted))


def vertical_polynomial_identities() -> dict[str, bool]:
    """Whether dh * Y_ij vanishes identically on R^8 (not just on the sphere)."""
    dh = quat_hopf().jacobian_poly()
    out = {}
    for (i, j), f in zip(VERTICAL, vertical_fields()):
        out[f"Y{i}{j}"] = all(c.is_zero() for c in dh.apply(f.components()))
    return out


# The S^4 coordinates and the remaining cosines, as tabulated.
_COEFFICIENT_TERMS = {
    "a11": "+0.4 +1.5 +2.6 +3.7",
    "a22": "-0.5 +1.4 -2.7 +3.6",
    "a33": "-0.6 +1.7 +2.4 -3.5",
    "a44": "-0.7 -1.6 +2.5 +3.4",
    "a12": "-0.5 +1.4 +2.7 -3.6",
    "a13": "-0.6 -1.7 +2.4 +3.5",
    "a14": "+0.7 -1.6 +2.5 -3.4",
    "a21": "+0.4 +1.5 -2.6 -3.7",
    "a24": "-0.7 +1.6 +2.5 -3.4",
    "a23": "-0.6 -1.7 -2.4 -3.5",
    "a34": "-0.7 -1.6 -2.5 -3.4",
    "a31": "-0.4 +1.5 -2.6 +3.7",
    "a32": "-0.5 -1.4 +2.7 +3.6",
    "a43": "+0.6 -1.7 +2.4 -3.5",
    "a42": "-0.5 -1.4 -2.7 -3.6",
    "a41": "+0.4 -1.5 -2.6 +3.7",
}


def _bilinear(spec: str) -> MultiPoly:
    """2 * sum of signed products y_i y_j from tokens like ``-0.5``."""
    y = MultiPoly.variables(8)
    total = MultiPoly(8)
    for tok in spec.split():
        sign = -1 if tok[0] == "-" else 1
        i, j = map(int, tok[1:].split("."))
        total = total + y[i] * y[j] * (2 * sign)
    return total


def _build_coefficients() -> dict[str, MultiPoly]:
    y = MultiPoly.variables(8)
    # the squared last coordinate is x_7^2 (the source prints it as x^7)
    polys = {"a00": sum((v * v for v in y[:4]), MultiPoly(8)) - sum((v * v for v in y[4:]), MultiPoly(8))}
    polys.update({name: _bilinear(spec) for name, spec in _COEFFICIENT_TERMS.items()})
    return polys


COEFFICIENT_POLYS: dict[str, MultiPoly] = _build_coefficients()


@dataclass(frozen=True)
class HopfCoefficients:
    a00: Fraction
    a11: Fraction
    a22: Fraction
    a33: Fraction
    a44: Fraction
    amk: tuple[tuple[Fraction, ...], ...]  # amk[m-1][k-1], diagonal taken from the S^4 coordinates

    def coordinates(self) -> tuple[Fraction, ...]:
        return (self.a00, self.a11, self.a22, self.a33, self.a44)


@dataclass(frozen=True)
class GramClaim:
    """<left, right> == sign * coefficient."""

    left: tuple[int, int]
    right: tuple[int, int]
    sign: int
    coefficient: str


GRAM_CLAIMS: tuple[GramClaim, ...] = (
    GramClaim((4, 5), (6, 7), 1, "a00"),
    GramClaim((4, 6), (5, 7), -1, "a00"),
    GramClaim((5, 6), (4, 7), 1, "a00"),
    GramClaim((4, 5), (3, 6), 1, "a11"),
    GramClaim((4, 6), (3, 5), -1, "a11"),
    GramClaim((5, 6), (3, 4), 1, "a11"),
    GramClaim((4, 5), (3, 7), 1, "a12"),
    GramClaim((4, 6), (3, 7), 1, "a13"),
    GramClaim((5, 6), (3, 7), 1, "a14"),
    GramClaim((4, 5), (2, 6), -1, "a22"),
    GramClaim((4, 6), (2, 5), 1, "a22"),
    GramClaim((5, 6), (2, 4), -1, "a22"),
    GramClaim((4, 5), (2, 7), 1, "a21"),
    GramClaim((4, 6), (2, 7), 1, "a24"),
    GramClaim((5, 6), (2, 7), 1, "a23"),
    GramClaim((4, 5), (1, 6), 1, "a33"),
    GramClaim((4, 6), (1, 5), -1, "a33"),
    GramClaim((5, 6), (1, 4), 1, "a33"),
    GramClaim((4, 5), (1, 7), 1, "a34"),
    GramClaim((4, 6), (1, 7), 1, "a31"),
    GramClaim((5, 6), (1, 7), 1, "a32"),
    GramClaim((4, 5), (0, 6), 1, "a44"),
    GramClaim((4, 6), (0, 5), -1, "a44"),
    GramClaim((5, 6), (0, 4), 1, "a44"),
    GramClaim((4, 5), (0, 7), 1, "a43"),
    GramClaim((4, 6), (0, 7), 1, "a42"),
    GramClaim((5, 6), (0, 7), 1, "a41"),
)


def hopf_coefficients(p) -> HopfCoefficients:
    """Evaluate all a_mk at p and cross-check each against its frame inner product."""
    p = _point(p)
    vals = {name: poly.eval(p.coords) for name, poly in COEFFICIENT_POLYS.items()}
    for claim in GRAM_CLAIMS:
        g = linalg.dot(eval_field(yfield(*claim.left), p), eval_field(yfield(*claim.right), p))
        if g != claim.sign * vals[claim.coefficient]:
            raise FibrationConsistencyError(
                f"<Y{claim.left}, Y{claim.right}> disagrees with {claim.coefficient} at {p.as_strings()}"
            )
    amk = tuple(
        tuple(Fraction(vals[f"a{m}{k}"]) for k in range(1, 5)) for m in range(1, 5)
    )
    return HopfCoefficients(*(Fraction(vals[f"a{m}{m}"]) for m in range(5)), amk=amk)


def coefficient_identities_check() -> dict[str, bool]:
    """The five sum-of-squares identities, proved modulo the sphere relation."""
    a = COEFFICIENT_POLYS
    one = MultiPoly.const(1, 8)
    results = {
        "hopfcoord": poly_identity_check(sum((a[f"a{m}{m}"] ** 2 for m in range(5)), MultiPoly(8)), one, True)
    }
    for m in range(1, 5):
        total = a["a00"] ** 2 + sum((a[f"a{m}{k}"] ** 2 for k in range(1, 5)), MultiPoly(8))
        results[f"cos{m}"] = poly_identity_check(total, one, True)
    return results


def gram_claim_identities() -> dict[str, bool]:
    """Every tabulated inner product, as an identity of quadratic polynomials."""
    out = {}
    for c in GRAM_CLAIMS:
        lhs = gram_poly(yfield(*c.left), yfield(*c.right))
        out[f"<Y{c.left[0]}{c.left[1]},Y{c.right[0]}{c.right[1]}>={'-' if c.sign < 0 else ''}{c.coefficient}"] = (
            poly_identity_check(lhs, COEFFICIENT_POLYS[c.coefficient] * c.sign)
        )
    return out


# ---------------------------------------------------------------------------
# Horizontal collections and the Ehresmann connection


class RegionTag(enum.Enum):
    GENERIC = "GENERIC"
    S1 = "S1"
    S2 = "S2"


def region(p) -> RegionTag:
    p = _point(p)
    lower = sum(c * c for c in p.coords[:4])
    upper = sum(c * c for c in p.coords[4:])
    if lower == upper == Fraction(1, 2):
        return RegionTag.S1
    if {lower, upper} == {0, 1}:
        return RegionTag.S2
    return RegionTag.GENERIC


COLLECTION_ROWS = {1: 3, 2: 2, 3: 1, 4: 0}


def collection(m: int) -> Distribution:
    """H_1 .. H_4: {Y_j4, Y_j5, Y_j6, Y_j7} with j = 3, 2, 1, 0."""
    j = COLLECTION_ROWS[m]
    return Distribution([yfield(j, k) for k in (4, 5, 6, 7)], f"H{m}")


def collection_zero(j: int) -> Distribution:
    """H_0 completed by W = Y_j7."""
    if j not in (0, 1, 2, 3):
        raise ValueError("W = Y_j7 needs j in 0..3")
    return Distribution([yfield(4, 7), yfield(5, 7), yfield(6, 7), yfield(j, 7)], f"H0+Y{j}7")


def transversality_check(d: Distribution, p) -> bool:
    """span(D)_p and the vertical space together span T_p S^7."""
    p = _point(p)
    if len(d.generators) != 4:
        raise ValueError("horizontal collections have four generators")
    vectors = d.at(p) + [eval_field(v, p) for v in vertical_fields()]
    for g, v in zip(d.generators + vertical_fields(), vectors):
        if linalg.dot(v, p.coords):
            raise FibrationConsistencyError(f"{g.label()} is not tangent at {p.as_strings()}")
    return linalg.rank(vectors) == 7


@dataclass(frozen=True)
class Selection:
    tag: RegionTag
    label: str
    generators: tuple[LinearVectorField, ...]


def ehresmann_select(p) -> Selection:
    """Deterministic choice of a transverse horizontal collection at p.

    Off S1 the first of H_1..H_4 that is transverse wins; on S1 the first
    H_0 + Y_j7, j = 0..3.
    """
    p = _point(p)
    tag = region(p)
    if tag is RegionTag.S1:
        candidates = [collection_zero(j) for j in range(4)]
    else:
        candidates = [collection(m) for m in range(1, 5)]
    for d in candidates:
        if transversality_check(d, p):
            return Selection(tag, d.label, d.generators)
    raise TheoremViolation(f"no transverse collection at {p.as_strings()} ({tag.value})")


def selection_flag(sel: Selection, p) -> list[int]:
    return flag_dimensions(Distribution(sel.generators, sel.label), p, 2)
