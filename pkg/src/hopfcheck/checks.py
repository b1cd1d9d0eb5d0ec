"""Registry of verification checks, grouped into suites.

Every check is a function of a :class:`Context` (the sampled points) that
returns a :class:`CheckResult`. Polynomial and matrix identities ignore the
samples and say so in their details.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

from . import algebra, crstructure, fibrations, linalg, vectorfields
from .algebra import AlgebraElement
from .polyengine import MultiPoly, norm_sq_poly, poly_identity_check
from .sampling import S1_WITNESS, basis_points, sample_sphere_points
from .vectorfields import (
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

SUITES = ("algebra", "s3", "s3-cr", "s3-hopf", "s7-frame", "s7-cr", "s7-quat")
IDENTITY = "identity, checked once"


@dataclass(frozen=True)
class CheckResult:
    status: str
    details: str
    counterexample: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.status not in ("pass", "fail", "skip"):
            raise ValueError(f"unknown status {self.status!r}")


@dataclass(frozen=True)
class Check:
    id: str
    suite: str
    paper_ref: str
    run: Callable[["Context"], CheckResult]


@dataclass
class Context:
    samples: int
    seed: int

    @cached_property
    def s3_points(self) -> list[SpherePoint]:
        return sample_sphere_points(4, self.samples, self.seed)

    @cached_property
    def s7_points(self) -> list[SpherePoint]:
        return sample_sphere_points(8, self.samples, self.seed)

    @cached_property
    def chart_points(self) -> list[SpherePoint]:
        return [p for p in self.s7_points if p[0] or p[1]]


REGISTRY: dict[str, Check] = {}


def check(check_id: str, suite: str, paper_ref: str):
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite}")

    def register(fn: Callable[[Context], CheckResult]) -> Callable[[Context], CheckResult]:
        if check_id in REGISTRY:
            raise ValueError(f"duplicate check id {check_id}")
        REGISTRY[check_id] = Check(check_id, suite, paper_ref, fn)
        return fn

    return register


def checks_for(suite: str) -> list[Check]:
    if suite == "all":
        return sorted(REGISTRY.values(), key=lambda c: c.id)
    if suite not in SUITES:
        raise KeyError(suite)
    return sorted((c for c in REGISTRY.values() if c.suite == suite), key=lambda c: c.id)


# ---------------------------------------------------------------------------
# result helpers


def _point_strings(p) -> tuple[str, ...]:
    return tuple(f"{Fraction(c).numerator}/{Fraction(c).denominator}" for c in p)


def _passfail(ok: bool, details: str, counterexample=None) -> CheckResult:
    return CheckResult("pass" if ok else "fail", details, None if ok or counterexample is None else _point_strings(counterexample))


def _identity(ok: bool, what: str) -> CheckResult:
    return _passfail(ok, f"{IDENTITY}: {what}" + ("" if ok else " does not hold"))


def _identities(results: dict[str, bool]) -> CheckResult:
    bad = [k for k, ok in results.items() if not ok]
    if bad:
        return CheckResult("fail", f"{IDENTITY}: failed {', '.join(bad)}")
    return CheckResult("pass", f"{IDENTITY}: {len(results)} identities hold")


def _sampled(points: Sequence, predicate: Callable, what: str) -> CheckResult:
    for p in points:
        if not predicate(p):
            return _passfail(False, f"{what} fails", p)
    return CheckResult("pass", f"{what} at {len(points)} sampled points")


def _field_identity(lhs: LinearVectorField, rhs: LinearVectorField, what: str) -> CheckResult:
    """Exact matrix equality; on failure the first basis point where the fields differ."""
    if lhs == rhs:
        return CheckResult("pass", f"{IDENTITY}: {what}")
    for e in basis_points(lhs.dim)[::2]:
        if eval_field(lhs, e) != eval_field(rhs, e):
            return _passfail(False, f"{IDENTITY}: {what} does not hold; left side is {_field_text(lhs)}", e)
    raise AssertionError("unequal linear fields agree on a basis")


def _field_text(f: LinearVectorField) -> str:
    return " ".join(str(c) for c in f.components()) if not f.is_zero() else "0"


# ---------------------------------------------------------------------------
# algebra

_PAIRS8 = list(itertools.product(range(8), repeat=2))


def _basis(dim: int, i: int) -> AlgebraElement:
    return AlgebraElement.basis(dim, i)


@check("algebra.table.identity-and-squares", "algebra", "multiplication table: e0 is the unit and e_i e_i = -e0")
def _table_shape(ctx: Context) -> CheckResult:
    for dim in (2, 4, 8):
        for i in range(dim):
            if algebra.basis_product(dim, 0, i) != (1, i) or algebra.basis_product(dim, i, 0) != (1, i):
                return CheckResult("fail", f"dim {dim}: e0 is not the unit for e{i}")
            if i and algebra.basis_product(dim, i, i) != (-1, 0):
                return CheckResult("fail", f"dim {dim}: e{i} e{i} != -e0")
    return CheckResult("pass", f"{IDENTITY}: dims 2, 4, 8")


@check("algebra.octonion.table", "algebra", "multiplication table for the basis of the octonions")
def _octonion_table(ctx: Context) -> CheckResult:
    bad = []
    for i, j in _PAIRS8:
        sign, k = algebra.OCTONION_TABLE.lookup(i, j)
        expected = tuple(sign if m == k else 0 for m in range(8))
        if tuple(algebra.mul(_basis(8, i), _basis(8, j))) != expected:
            bad.append(f"e{i}e{j}")
    return _identity(not bad, "64 basis products equal the transcribed table" + (f" (bad: {bad})" if bad else ""))


@check("algebra.octonion.closed-form", "algebra", "closed-form octonion product o1 o2")
def _octonion_formula(ctx: Context) -> CheckResult:
    bad = [
        f"e{i}e{j}"
        for i, j in _PAIRS8
        if tuple(algebra.mul(_basis(8, i), _basis(8, j))) != algebra.octonion_formula_product(_basis(8, i), _basis(8, j))
    ]
    if bad:
        return CheckResult("fail", f"{IDENTITY}: table product differs from the closed form at {', '.join(bad)}")
    # bilinearity makes the 64 basis pairs a proof; sampled pairs are a sanity check
    pts = ctx.s7_points
    for p, q in zip(pts, pts[1:]):
        if tuple(algebra.mul(AlgebraElement(p), AlgebraElement(q))) != algebra.octonion_formula_product(p, q):
            return _passfail(False, "table product differs from the closed form", p)
    return CheckResult("pass", f"{IDENTITY}: 64 basis pairs agree (plus {len(pts) - 1} sampled pairs)")


@check("algebra.quaternion.closed-form", "algebra", "quaternion product formula")
def _quaternion_formula(ctx: Context) -> CheckResult:
    for i, j in itertools.product(range(4), repeat=2):
        a, b = _basis(4, i), _basis(4, j)
        if tuple(algebra.mul(a, b)) != algebra.quaternion_formula_product(a, b):
            return CheckResult("fail", f"{IDENTITY}: e{i}e{j} differs from the quaternion formula")
    return CheckResult("pass", f"{IDENTITY}: 16 basis pairs agree")


@check("algebra.norm.multiplicative", "algebra", "norm of a product of unit elements")
def _norm_mult(ctx: Context) -> CheckResult:
    for pts in (ctx.s3_points, ctx.s7_points):
        for p, q in zip(pts, pts[1:]):
            a = AlgebraElement([2 * c for c in p])
            b = AlgebraElement([3 * c for c in q])
            if algebra.norm_sq(algebra.mul(a, b)) != algebra.norm_sq(a) * algebra.norm_sq(b):
                return _passfail(False, "norm of a product is not multiplicative", p)
    return CheckResult("pass", "|ab|^2 = |a|^2 |b|^2 for consecutive sampled pairs in dims 4 and 8")


@check("algebra.norm.conjugate-product", "algebra", "|q|^2 = q conj(q)")
def _norm_conj(ctx: Context) -> CheckResult:
    for pts in (ctx.s3_points, ctx.s7_points):
        for p in pts:
            a = AlgebraElement(p)
            prod = algebra.mul(a, algebra.conjugate(a))
            if tuple(prod) != tuple([algebra.norm_sq(a)] + [0] * (a.dim - 1)):
                return _passfail(False, "a conj(a) is not |a|^2 e0", p)
    return CheckResult("pass", "a conj(a) = |a|^2 e0 at all sampled points in dims 4 and 8")


@check("algebra.quaternion.conjugate-antiautomorphism", "algebra", "quaternion conjugation q -> conj(q)")
def _conj_anti(ctx: Context) -> CheckResult:
    pts = ctx.s3_points
    for p, q in zip(pts, pts[1:]):
        a, b = AlgebraElement(p), AlgebraElement(q)
        if algebra.conjugate(algebra.mul(a, b)) != algebra.mul(algebra.conjugate(b), algebra.conjugate(a)):
            return _passfail(False, "conj(ab) != conj(b) conj(a)", p)
    return CheckResult("pass", f"conj(ab) = conj(b) conj(a) for {len(pts) - 1} sampled pairs")


@check("algebra.quaternion.associative", "algebra", "quaternions form an associative algebra")
def _quat_assoc(ctx: Context) -> CheckResult:
    for i, j, k in itertools.product(range(4), repeat=3):
        if not algebra.associator(_basis(4, i), _basis(4, j), _basis(4, k)).is_zero():
            return CheckResult("fail", f"{IDENTITY}: associator (e{i},e{j},e{k}) is nonzero")
    return CheckResult("pass", f"{IDENTITY}: all 64 basis associators vanish")


@check("algebra.octonion.nonassociative", "algebra", "multiplication of unit octonions is not associative")
def _oct_nonassoc(ctx: Context) -> CheckResult:
    a = algebra.associator(_basis(8, 1), _basis(8, 2), _basis(8, 4))
    return _identity(tuple(a) == tuple(2 if m == 7 else 0 for m in range(8)), "(e1 e2) e4 - e1 (e2 e4) = 2 e7")


# ---------------------------------------------------------------------------
# S^3 frame, brackets, contact forms


def _left_product_field(dim: int, k: int) -> list[list[Fraction]]:
    """Matrix of y -> e_k y."""
    cols = [tuple(algebra.mul(_basis(dim, k), _basis(dim, j))) for j in range(dim)]
    return [list(r) for r in zip(*cols)]


@check("s3.frame.left-products", "s3", "right invariant fields N, V, X, Y on S^3")
def _s3_frame(ctx: Context) -> CheckResult:
    frame = invariant_frame(4)
    bad = [f.name for k, f in enumerate(frame) if [list(r) for r in f.matrix] != _left_product_field(4, k)]
    return _identity(not bad, "N, V, X, Y are y -> 1y, iy, jy, ky" + (f" (bad: {bad})" if bad else ""))


@check("s3.right-translation.rows", "s3", "right translation matrix (R_y)_*")
def _s3_rt(ctx: Context) -> CheckResult:
    for l in range(4):
        m = vectorfields.right_translation_matrix(_basis(4, l))
        expected = [list(algebra.mul(_basis(4, k), _basis(4, l))) for k in range(4)]
        if m != expected:
            return CheckResult("fail", f"{IDENTITY}: row k of (R_y)_* is not e_k y (y = e{l})")
    return CheckResult("pass", f"{IDENTITY}: row k of (R_y)_* is e_k y")


def _gram_identity(dim: int) -> bool:
    r = vectorfields.right_translation_polymatrix(dim)
    g = r.transpose() @ r
    n = norm_sq_poly(dim)
    return all(g[i, j] == (n if i == j else MultiPoly(dim)) for i in range(dim) for j in range(dim))


@check("s3.frame.gram-identity", "s3", "orthonormality of the right invariant frame on S^3")
def _s3_gram(ctx: Context) -> CheckResult:
    return _identity(_gram_identity(4), "R^T R = |y|^2 I over R^4")


def _frame_orthonormal(frame, points) -> CheckResult:
    def ok(p):
        vecs = [eval_field(f, p) for f in frame]
        return all(linalg.dot(u, v) == (i == j) for (i, u), (j, v) in itertools.product(enumerate(vecs), repeat=2))

    return _sampled(points, ok, "<F_i, F_j> = delta_ij")


@check("s3.frame.orthonormal", "s3", "orthonormality of the right invariant frame on S^3")
def _s3_orth(ctx: Context) -> CheckResult:
    return _frame_orthonormal(invariant_frame(4), ctx.s3_points)


@check("s3.frame.tangent", "s3", "V, X, Y are tangent to S^3")
def _s3_tangent(ctx: Context) -> CheckResult:
    bad = [f.name for f in invariant_frame(4)[1:] if not f.is_skew()]
    return _identity(not bad, "V, X, Y have skew matrices so <F(y), y> = 0")


@check("s3.bracket.XY=2V", "s3", "[X,Y]=2V")
def _xy(ctx: Context) -> CheckResult:
    return _field_identity(bracket(s3_field("X"), s3_field("Y")), s3_field("V") * 2, "[X,Y] = 2V")


@check("s3.bracket.VY=2X", "s3", "[V,Y]=2X")
def _vy(ctx: Context) -> CheckResult:
    return _field_identity(bracket(s3_field("V"), s3_field("Y")), s3_field("X") * 2, "[V,Y] = 2X")


@check("s3.bracket.XV=2Y", "s3", "[X,V]=2Y")
def _xv(ctx: Context) -> CheckResult:
    return _field_identity(bracket(s3_field("X"), s3_field("V")), s3_field("Y") * 2, "[X,V] = 2Y")


def _bracket_generating(names: str, points) -> CheckResult:
    d = Distribution([s3_field(n) for n in names], f"span{{{','.join(names)}}}")
    ok, step = vectorfields.is_bracket_generating(d, points, 2)
    if ok and step == 2:
        return CheckResult("pass", f"{d.label}: flag [2,3], step 2 at {len(points)} sampled points")
    bad = next(p for p in points if vectorfields.flag_dimensions(d, p, 2)[-1] < 3)
    return _passfail(False, f"{d.label} is not bracket generating in two steps", bad)


@check("s3.bracket-generating.XY", "s3", "span{X,Y} is bracket generating")
def _bg_xy(ctx: Context) -> CheckResult:
    return _bracket_generating("XY", ctx.s3_points)


@check("s3.bracket-generating.YV", "s3", "span{Y,V} is bracket generating")
def _bg_yv(ctx: Context) -> CheckResult:
    return _bracket_generating("YV", ctx.s3_points)


@check("s3.bracket-generating.XV", "s3", "span{X,V} is bracket generating")
def _bg_xv(ctx: Context) -> CheckResult:
    return _bracket_generating("XV", ctx.s3_points)


@check("s3.bracket-generating.X-alone", "s3", "negative control: a single field is not bracket generating")
def _bg_x(ctx: Context) -> CheckResult:
    ok, _ = vectorfields.is_bracket_generating(Distribution([s3_field("X")], "span{X}"), ctx.s3_points, 2)
    return _passfail(not ok, "span{X} does not reach T_pS^3 by depth 2" if not ok else "span{X} reported bracket generating")


_CONTACT = {"omega": ("V", "XY"), "theta": ("X", "YV"), "eta": ("Y", "XV")}


def _contact_check(name: str, ctx: Context) -> CheckResult:
    w = vectorfields.CONTACT_FORMS[name]
    reeb, kernel = _CONTACT[name]
    one = MultiPoly.const(1, 4)
    ok = all(vectorfields.one_form_poly(w, s3_field(k)).is_zero() for k in kernel)
    ok = ok and poly_identity_check(vectorfields.one_form_poly(w, s3_field(reeb)), one, mod_sphere=True)
    if not ok:
        return CheckResult("fail", f"{IDENTITY}: {name} does not annihilate span{{{','.join(kernel)}}} with {name}({reeb}) = 1")
    for p in ctx.s3_points:
        values = [vectorfields.one_form_eval(w, s3_field(k), p) for k in kernel + reeb]
        if values != [0, 0, 1]:
            return _passfail(False, f"{name} evaluates to {values} on {kernel + reeb}", p)
    return CheckResult(
        "pass",
        f"{IDENTITY}: {name} kills {kernel[0]}, {kernel[1]} on R^4 and {name}({reeb}) = |y|^2; exact at {len(ctx.s3_points)} points",
    )


@check("s3.contact.omega", "s3", "kernel of the contact one form omega")
def _omega(ctx: Context) -> CheckResult:
    return _contact_check("omega", ctx)


@check("s3.contact.theta", "s3", "contact one form theta")
def _theta(ctx: Context) -> CheckResult:
    return _contact_check("theta", ctx)


@check("s3.contact.eta", "s3", "contact one form eta")
def _eta(ctx: Context) -> CheckResult:
    return _contact_check("eta", ctx)


# ---------------------------------------------------------------------------
# CR structure on S^3 and S^7


@check("s3-cr.j.relations", "s3-cr", "J_2(X)=Y, J_2(Y)=-X, J_2(V)=-N")
def _j2(ctx: Context) -> CheckResult:
    return _identities({k: v for k, v in crstructure.j_structure_check().items() if k.startswith(("J2", "V2"))})


def _holomorphic(points, dim_expected: int) -> CheckResult:
    def ok(p):
        h = crstructure.holomorphic_tangent(p)
        return h.dim == dim_expected and crstructure.j_invariant(h) and crstructure.tangent_space(p).contains(h.basis)

    return _sampled(points, ok, f"H_p is J-invariant, inside T_p, of dimension {dim_expected}")


@check("s3-cr.holomorphic.dimension", "s3-cr", "H_pM = T_pM cap J(T_pM)")
def _hol3(ctx: Context) -> CheckResult:
    return _holomorphic(ctx.s3_points, 2)


@check("s3-cr.holomorphic.orthocomplement", "s3-cr", "H_p is the orthogonal complement of V in T_p")
def _orth3(ctx: Context) -> CheckResult:
    return _sampled(ctx.s3_points, crstructure.verify_orthocomplement, "H_p = V(p)^perp in T_p")


@check("s3-cr.horizontal-is-cr", "s3-cr", "span{X,Y} is the CR structure of S^3")
def _xy_cr(ctx: Context) -> CheckResult:
    return _sampled(ctx.s3_points, crstructure.s3_horizontal_matches_cr, "H_p = span{X(p), Y(p)}")


@check("s3-cr.kernel-fields", "s3-cr", "conj(w) d_z - conj(z) d_w = (-X+iY)/2")
def _kernel_fields(ctx: Context) -> CheckResult:
    return _identities(crstructure.kernel_field_identities())


def _cr_form(points, dim: int) -> CheckResult:
    if dim == 4:
        horizontal = [s3_field("X"), s3_field("Y")]
    else:
        horizontal = list(invariant_frame(8)[2:])
    rotation, normal = vectorfields.complex_rotation_field(dim), vectorfields.normal_field(dim)

    def ok(p):
        return (
            all(crstructure.cr_form_eval(f, p) == (0, 0) for f in horizontal)
            and crstructure.cr_form_eval(rotation, p) == (0, 1)
            and crstructure.cr_form_eval(normal, p) == (1, 0)
        )

    return _sampled(points, ok, "omega = (<F,N>, <F,V>) vanishes on horizontal fields, (0,1) on V, (1,0) on N")


@check("s3-cr.form.evaluation", "s3-cr", "omega(X) = <X,N> + i<X,V> = 0")
def _cr3(ctx: Context) -> CheckResult:
    return _cr_form(ctx.s3_points, 4)


@check("s7-cr.form.evaluation", "s7-cr", "omega(X) = <X,N> + i<X,V> = 0")
def _cr7(ctx: Context) -> CheckResult:
    return _cr_form(ctx.s7_points, 8)


@check("s7-cr.j.relations", "s7-cr", "J(V_{n+1}) = -N and V_4 = Y_1")
def _j4(ctx: Context) -> CheckResult:
    return _identities({k: v for k, v in crstructure.j_structure_check().items() if k.startswith(("J4", "V4"))})


@check("s7-cr.holomorphic.dimension", "s7-cr", "H_pM = T_pM cap J(T_pM)")
def _hol7(ctx: Context) -> CheckResult:
    return _holomorphic(ctx.s7_points, 6)


@check("s7-cr.holomorphic.orthocomplement", "s7-cr", "H_pS^{2n+1} is the orthogonal complement of V_{n+1}(p)")
def _orth7(ctx: Context) -> CheckResult:
    return _sampled(ctx.s7_points, crstructure.verify_orthocomplement, "H_p = V_4(p)^perp in T_p")


@check("s7-cr.invariant-complement", "s7-cr", "orthogonal maps keep the complement of an invariant subspace invariant")
def _alglin(ctx: Context) -> CheckResult:
    return _sampled(
        ctx.s7_points, crstructure.rotation_plane_complement_invariant, "span{p, V_4(p)} and its complement are J-invariant"
    )


# ---------------------------------------------------------------------------
# rank-6 distribution on S^7


@check("s7-cr.rank6.flag", "s7-cr", "span{Y_2,...,Y_7} is bracket generating of rank 6 and step 2")
def _rank6(ctx: Context) -> CheckResult:
    d = Distribution(invariant_frame(8)[2:], "span{Y2..Y7}")
    ok, step = vectorfields.is_bracket_generating(d, ctx.s7_points, 2)
    if not (ok and step == 2):
        return CheckResult("fail", "span{Y2..Y7} does not have step 2")
    return _sampled(ctx.s7_points, lambda p: vectorfields.flag_dimensions(d, p, 2) == [6, 7], "flag [6,7]")


@check("s7-cr.rank6.decomposition", "s7-cr", "v41+v42=Y4 and v51+v52=Y5")
def _vdecomp(ctx: Context) -> CheckResult:
    y = invariant_frame(8)
    ok4 = v_field("v41") + v_field("v42") == y[4]
    ok5 = v_field("v51") + v_field("v52") == y[5]
    printed = v_field("v51") + v_field("v52_printed") == y[5]
    return _identity(
        ok4 and ok5,
        "v41 + v42 = Y4 and v51 + v52 = Y5 with v52 ending in y2 d7"
        + ("" if printed else "; the tabulated v52 (ending in y0 d7) breaks the second sum"),
    )


@check("s7-cr.rank6.orthogonality", "s7-cr", "<v_{41}(y),Y_0(y)> = 0")
def _vorth(ctx: Context) -> CheckResult:
    fields = [v_field(n) for n in ("v41", "v42", "v51", "v52")]
    ys = invariant_frame(8)[:2]
    ok = all(vectorfields.gram_poly(f, g).is_zero() for f in fields for g in ys)
    if not ok:
        return CheckResult("fail", f"{IDENTITY}: a v-field is not orthogonal to Y0 or Y1")
    return _sampled(
        ctx.s7_points,
        lambda p: all(vectorfields.gram(f, g, p) == 0 for f in fields for g in ys),
        f"{IDENTITY}: v-fields orthogonal to Y0, Y1 on R^8; confirmed",
    )


@check("s7-cr.rank6.bracket-sum", "s7-cr", "[v41,v51]+[v42,v52]=-2Y1")
def _vsum(ctx: Context) -> CheckResult:
    lhs = bracket(v_field("v41"), v_field("v51")) + bracket(v_field("v42"), v_field("v52"))
    return _field_identity(lhs, invariant_frame(8)[1] * -2, "[v41,v51] + [v42,v52] = -2 Y1")


@check("s7-cr.rank6.bracket-difference", "s7-cr", "[v41,v51]+[v42,v52]=-2Y1 (sign-corrected form)")
def _vdiff(ctx: Context) -> CheckResult:
    lhs = bracket(v_field("v41"), v_field("v51")) - bracket(v_field("v42"), v_field("v52"))
    return _field_identity(lhs, invariant_frame(8)[1] * -2, "[v41,v51] - [v42,v52] = -2 Y1")


# ---------------------------------------------------------------------------
# chart of S^7 -> CP^3


@check("s7-cr.chart.printed-jacobian", "s7-cr", "Jacobian d(phi_0 o h) of the chart")
def _chart_printed(ctx: Context) -> CheckResult:
    return _identity(
        fibrations.chart_jacobian_cleared() == fibrations.chart_printed_jacobian_cleared(),
        "quotient-rule Jacobian equals the tabulated one (both times (x0^2+x1^2)^2)",
    )


@check("s7-cr.chart.rank-kernel", "s7-cr", "ker d(phi_0 o H) = span{N_{n+1}, V_{n+1}}, rank 6")
def _chart_kernel(ctx: Context) -> CheckResult:
    pts = ctx.chart_points

    def ok(p):
        return fibrations.chart_jacobian(p).rank == 6 and fibrations.chart_kernel_is_normal_and_rotation(p)

    res = _sampled(pts, ok, "rank 6 and kernel span{N, V_4}")
    skipped = len(ctx.s7_points) - len(pts)
    return CheckResult(res.status, f"{res.details} ({skipped} off-chart points skipped)", res.counterexample)


@check("s7-cr.chart.determinant", "s7-cr", "det(d(phi_0 o H) d(phi_0 o H)^t) = (x_0^2+x_1^2)^{-8}")
def _chart_det(ctx: Context) -> CheckResult:
    if not fibrations.chart_determinant_identity():
        return CheckResult("fail", f"{IDENTITY}: det(K K^T) != (x0^2+x1^2)^16 modulo the sphere")

    def ok(p):
        return fibrations.chart_gram_determinant(p) * (p[0] ** 2 + p[1] ** 2) ** 8 == 1

    res = _sampled(ctx.chart_points, ok, "det(J J^T) (x0^2+x1^2)^8 = 1")
    return CheckResult(
        res.status,
        f"{IDENTITY}: det(K K^T) = (x0^2+x1^2)^16 on S^7 for the cleared Jacobian K; {res.details}",
        res.counterexample,
    )


@check("s7-cr.chart.domain", "s7-cr", "chart U_0 = {z_0 != 0}")
def _chart_domain(ctx: Context) -> CheckResult:
    try:
        fibrations.chart_map(SpherePoint.basis(8, 2))
    except fibrations.ChartDomainError:
        return CheckResult("pass", "points with x0 = x1 = 0 are rejected")
    return CheckResult("fail", "chart accepted a point with x0 = x1 = 0")


# ---------------------------------------------------------------------------
# S^3 -> S^2


@check("s3-hopf.map.on-sphere", "s3-hopf", "h(z,w) = (|z|^2-|w|^2, 2 z conj(w))")
def _h3_sphere(ctx: Context) -> CheckResult:
    polys = fibrations.hopf_s3().polys()
    ok = poly_identity_check(sum((c * c for c in polys), MultiPoly(4)), norm_sq_poly(4) ** 2)
    if not ok:
        return CheckResult("fail", f"{IDENTITY}: |h(x)|^2 != |x|^4")
    res = _sampled(ctx.s3_points, lambda p: sum(c * c for c in fibrations.hopf_s3_map(p)) == 1, "|h(p)| = 1")
    return CheckResult(res.status, f"{IDENTITY}: |h(x)|^2 = |x|^4; {res.details}", res.counterexample)


_ROTATIONS = ((Fraction(3, 5), Fraction(4, 5)), (Fraction(5, 13), Fraction(12, 13)), (Fraction(-8, 17), Fraction(15, 17)))


@check("s3-hopf.map.circle-invariance", "s3-hopf", "fibers of the Hopf map are great circles")
def _h3_equiv(ctx: Context) -> CheckResult:
    def ok(p):
        h = fibrations.hopf_s3_map(p)
        return all(fibrations.hopf_s3_map(fibrations.rotate_fiber(p, c, s)) == h for c, s in _ROTATIONS)

    return _sampled(ctx.s3_points, ok, "h(e^{it} p) = h(p) for three rational rotations")


@check("s3-hopf.jacobian.printed", "s3-hopf", "Jacobian [d_{gamma_p(t)} h]")
def _h3_printed(ctx: Context) -> CheckResult:
    printed = fibrations.hopf_s3_printed_jacobian().map(lambda e: e * 2)
    return _identity(printed == fibrations.hopf_s3().jacobian_poly(), "dh equals 2 times the tabulated matrix")


@check("s3-hopf.jacobian.kernel", "s3-hopf", "ker d_{gamma_p(t)} h = span{gamma_p'(t)}, gamma' = 2 pi V")
def _h3_kernel(ctx: Context) -> CheckResult:
    return _sampled(ctx.s3_points, fibrations.s3_kernel_is_rotation, "rank 3 with kernel span{V(p)}")


@check("s3-hopf.minor-identity", "s3-hopf", "det(D_1)^2+det(D_2)^2+det(D_3)^2+det(D_4)^2")
def _h3_minor(ctx: Context) -> CheckResult:
    lhs, rhs = fibrations.minor_sum_identity()
    scaled, _ = fibrations.minor_sum_identity(scale=2)
    return _identity(
        lhs == rhs and scaled == rhs * 64,
        "sum det(D_i)^2 = |x|^6 for the matrix without its factor 2 (with it the sum is 64 |x|^6)",
    )


@check("s3-hopf.fiber-curve", "s3-hopf", "gamma_p(t) = e^{2 pi i t}(z_0, w_0)")
def _h3_fiber(ctx: Context) -> CheckResult:
    worst = (0.0, 0.0)
    for p in ctx.s3_points:
        dev = fibrations.fiber_curve_deviations(p, 16)
        worst = (max(worst[0], dev[0]), max(worst[1], dev[1]))
        if not fibrations.fiber_curve_check(p, 16):
            return _passfail(False, f"float check: fiber drift {dev[0]:.2e}, velocity error {dev[1]:.2e}", p)
    return CheckResult(
        "pass",
        f"float check, 16 steps: max fiber drift {worst[0]:.1e} <= 1e-12, max |gamma' - 2 pi V| {worst[1]:.1e} <= 1e-9",
    )


@check("s3-hopf.jacobian.finite-difference", "s3-hopf", "Jacobians of the quadratic Hopf maps")
def _fd(ctx: Context) -> CheckResult:
    worst = 0.0
    for qmap, pts in ((fibrations.hopf_s3(), ctx.s3_points), (fibrations.quat_hopf(), ctx.s7_points)):
        for p in pts[:10]:
            x = [float(c) for c in p]
            exact, approx = qmap.float_jacobian(x), fibrations.finite_difference_jacobian(qmap, x)
            err = max(abs(a - b) for r, s in zip(exact, approx) for a, b in zip(r, s))
            worst = max(worst, err)
            if err > 1e-6:
                return _passfail(False, f"float check: finite differences off by {err:.2e}", p)
    return CheckResult("pass", f"float check: analytic vs centred differences within {worst:.1e} at 10 points per map")


@check("s3-hopf.ehresmann", "s3-hopf", "span{X,Y} is an Ehresmann connection for the Hopf map")
def _h3_ehresmann(ctx: Context) -> CheckResult:
    fields = [s3_field(n) for n in "XYV"]
    return _sampled(ctx.s3_points, lambda p: linalg.rank([eval_field(f, p) for f in fields]) == 3, "span{X,Y} + span{V} = T_pS^3")


# ---------------------------------------------------------------------------
# S^7 frame and commutators


@check("s7-frame.right-translation.derivative", "s7-frame", "matrix R_* of right translation")
def _rt8(ctx: Context) -> CheckResult:
    for l in range(8):
        m = vectorfields.right_translation_matrix(_basis(8, l))
        expected = [[algebra.mul(_basis(8, j), _basis(8, l))[i] for j in range(8)] for i in range(8)]
        if m != expected:
            return CheckResult("fail", f"{IDENTITY}: R_* is not d(x y)/dx (y = e{l})")
    return CheckResult("pass", f"{IDENTITY}: R_* = d(x y)/dx")


@check("s7-frame.gram-identity", "s7-frame", "<Y_i(y),Y_j(y)>_y = delta_ij")
def _gram8(ctx: Context) -> CheckResult:
    r_ok = _gram_identity(8)
    frame = invariant_frame(8)
    n = norm_sq_poly(8)
    f_ok = all(
        vectorfields.gram_poly(f, g) == (n if i == j else MultiPoly(8))
        for (i, f), (j, g) in itertools.combinations_with_replacement(enumerate(frame), 2)
    )
    return _identity(r_ok and f_ok, "R_*^T R_* = |y|^2 I and <Y_i, Y_j> = delta_ij |y|^2 over R^8")


@check("s7-frame.orthonormal", "s7-frame", "<Y_i(y),Y_j(y)>_y = delta_ij")
def _orth8(ctx: Context) -> CheckResult:
    return _frame_orthonormal(invariant_frame(8), ctx.s7_points)


@check("s7-frame.tangent", "s7-frame", "Y_1..Y_7 are tangent to S^7")
def _tangent8(ctx: Context) -> CheckResult:
    frame = invariant_frame(8)
    fields = list(frame[1:]) + [yfield(i, j) for i, j in itertools.combinations(range(1, 8), 2)]
    bad = [f.label() for f in fields if not f.is_skew()]
    return _identity(not bad, "Y_1..Y_7 and all Y_ij have skew matrices")


@check("s7-frame.commutators.table", "s7-frame", "Y_ij(y) = 1/2 [Y_i(y), Y_j(y)]")
def _commutators(ctx: Context) -> CheckResult:
    bad = [
        f"Y{i}{j}"
        for (i, j) in vectorfields.PRINTED_COMMUTATORS
        if yfield(i, j).matrix != vectorfields.printed_commutator(i, j).matrix
    ]
    return _identity(not bad, "all 21 computed Y_ij equal the tabulated fields" + (f" (bad: {bad})" if bad else ""))


@check("s7-frame.commutators.not-frame", "s7-frame", "no commutator [Y_i,Y_j] coincides with a Y_k")
def _not_frame(ctx: Context) -> CheckResult:
    frame = invariant_frame(8)
    hits = [
        f"Y{i}{j}=+-Y{k}"
        for i, j in itertools.combinations(range(1, 8), 2)
        for k in range(1, 8)
        if yfield(i, j).matrix in (frame[k].matrix, (-frame[k]).matrix)
    ]
    return _identity(not hits, "no Y_ij equals +-Y_k")


@check("s7-frame.bracket.lie-axioms", "s7-frame", "Lie bracket of right invariant fields")
def _lie(ctx: Context) -> CheckResult:
    frame = invariant_frame(8)[1:]
    for f, g in itertools.combinations(frame, 2):
        if bracket(f, g) != -bracket(g, f):
            return CheckResult("fail", f"{IDENTITY}: [{f.name},{g.name}] is not antisymmetric")
    for f, g, h in itertools.combinations(frame, 3):
        total = bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))
        if not total.is_zero():
            return CheckResult("fail", f"{IDENTITY}: Jacobi fails for {f.name}, {g.name}, {h.name}")
    return CheckResult("pass", f"{IDENTITY}: antisymmetry on 21 pairs, Jacobi on 35 triples")


# ---------------------------------------------------------------------------
# quaternionic Hopf map S^7 -> S^4


@check("quat.map.on-sphere", "s7-quat", "quaternionic Hopf map h(x_0,...,x_7)")
def _q_sphere(ctx: Context) -> CheckResult:
    polys = fibrations.quat_hopf().polys()
    ok = poly_identity_check(sum((c * c for c in polys), MultiPoly(8)), norm_sq_poly(8) ** 2)
    if not ok:
        return CheckResult("fail", f"{IDENTITY}: |h(x)|^2 != |x|^4")
    res = _sampled(ctx.s7_points, lambda p: sum(c * c for c in fibrations.quat_hopf_map(p)) == 1, "|h(p)| = 1")
    return CheckResult(res.status, f"{IDENTITY}: |h(x)|^2 = |x|^4 (last square read as x7^2); {res.details}", res.counterexample)


@check("quat.jacobian.printed", "s7-quat", "matrix dh")
def _q_printed(ctx: Context) -> CheckResult:
    printed = fibrations.quat_hopf_printed_jacobian().map(lambda e: e * 2)
    return _identity(printed == fibrations.quat_hopf().jacobian_poly(), "dh equals 2 times the tabulated matrix")


def _vertical(name: str) -> CheckResult:
    ok = fibrations.vertical_polynomial_identities()[name]
    return _identity(ok, f"dh {name} = 0 on all of R^8, hence on S^7")


@check("quat.vertical.Y45", "s7-quat", "[dh]Y_45 = 0")
def _v45(ctx: Context) -> CheckResult:
    return _vertical("Y45")


@check("quat.vertical.Y46", "s7-quat", "[dh]Y_46 = 0")
def _v46(ctx: Context) -> CheckResult:
    return _vertical("Y46")


@check("quat.vertical.Y56", "s7-quat", "[dh]Y_56 = 0")
def _v56(ctx: Context) -> CheckResult:
    return _vertical("Y56")


@check("quat.jacobian.rank", "s7-quat", "dh restricted to T_pS^7")
def _q_rank(ctx: Context) -> CheckResult:
    def ok(p):
        jac = fibrations.quat_hopf_jacobian(p)
        euler = linalg.matvec(jac.matrix, p.coords) == [2 * c for c in fibrations.quat_hopf_map(p)]
        return jac.vertical_ok and jac.restricted_rank == 4 and euler

    return _sampled(ctx.s7_points, ok, "dh kills V, has rank 4 on T_p, and dh p = 2 h(p)")


@check("quat.coefficients.sum-of-squares", "s7-quat", "a_00^2+a_11^2+a_22^2+a_33^2+a_44^2=1 and the four cosine sums")
def _q_sums(ctx: Context) -> CheckResult:
    return _identities(fibrations.coefficient_identities_check())


@check("quat.coefficients.inner-products", "s7-quat", "inner products <Y_45,Y_67> = a_00 through <Y_56,Y_07> = a_41")
def _q_claims(ctx: Context) -> CheckResult:
    res = _identities(fibrations.gram_claim_identities())
    if res.status == "fail":
        return res
    for p in ctx.s7_points:
        try:
            fibrations.hopf_coefficients(p)
        except fibrations.FibrationConsistencyError as exc:
            return _passfail(False, str(exc), p)
    return CheckResult("pass", f"{res.details}; coefficients cross-checked at {len(ctx.s7_points)} points")


def _collection_fields(m: int) -> list[tuple[int, int]]:
    if m == 0:
        return [(4, 7), (5, 7), (6, 7)]
    return [(fibrations.COLLECTION_ROWS[m], k) for k in (4, 5, 6, 7)]


@check("quat.coefficients.other-pairs-vanish", "s7-quat", "all other vector fields from H_m cup V are orthogonal")
def _q_others(ctx: Context) -> CheckResult:
    claimed = {frozenset((c.left, c.right)) for c in fibrations.GRAM_CLAIMS}
    count = 0
    for m in range(5):
        for a, b in itertools.combinations(_collection_fields(m) + list(fibrations.VERTICAL), 2):
            if frozenset((a, b)) in claimed:
                continue
            count += 1
            if not vectorfields.gram_poly(yfield(*a), yfield(*b)).is_zero():
                return CheckResult("fail", f"{IDENTITY}: <Y{a[0]}{a[1]}, Y{b[0]}{b[1]}> is not identically 0")
    return CheckResult("pass", f"{IDENTITY}: {count} remaining pairs in H_m cup V (m = 0..4) are orthogonal")


@check("quat.bracket.horizontal-generates-vertical", "s7-quat", "1/2[Y_j4,Y_j5]=Y_45")
def _q_item2(ctx: Context) -> CheckResult:
    bad = []
    for j in range(4):
        for (a, b), target in zip(((4, 5), (4, 6), (5, 6)), fibrations.VERTICAL):
            if bracket(yfield(j, a), yfield(j, b)) != yfield(*target) * 2:
                bad.append(f"[Y{j}{a},Y{j}{b}]")
    for (a, b), target in zip(((4, 5), (4, 6), (5, 6)), fibrations.VERTICAL):
        if bracket(yfield(a, 7), yfield(b, 7)) != yfield(*target) * 2:
            bad.append(f"[Y{a}7,Y{b}7]")
    return _identity(not bad, "15 relations 1/2[Y_ja, Y_jb] = Y_ab" + (f" (bad: {bad})" if bad else ""))


@check("quat.region.classification", "s7-quat", "sets S_1 and S_2")
def _q_regions(ctx: Context) -> CheckResult:
    ok = fibrations.region(S1_WITNESS) is fibrations.RegionTag.S1
    ok = ok and all(fibrations.region(p) is fibrations.RegionTag.S2 for p in basis_points(8))
    counts = {t: 0 for t in fibrations.RegionTag}
    for p in ctx.s7_points:
        counts[fibrations.region(p)] += 1
    summary = ", ".join(f"{t.value}={n}" for t, n in counts.items())
    return _passfail(ok, f"witness in S1, basis points in S2; sample regions {summary}")


def _transverse_ms(p) -> list[int]:
    return [m for m in range(1, 5) if fibrations.transversality_check(fibrations.collection(m), p)]


def _transverse_js(p) -> list[int]:
    return [j for j in range(4) if fibrations.transversality_check(fibrations.collection_zero(j), p)]


@check("quat.theorem.clause-i", "s7-quat", "if p not in S_1 then H_p = (H_m)_p for any m")
def _q_clause_i(ctx: Context) -> CheckResult:
    pts = [p for p in ctx.s7_points if fibrations.region(p) is not fibrations.RegionTag.S1]
    return _sampled(pts, lambda p: _transverse_ms(p) == [1, 2, 3, 4], "every H_m (m = 1..4) is transverse to V off S1")


@check("quat.theorem.clause-ii", "s7-quat", "if p not in S_2 then H_p = (H_0 cup Y_j7)_p")
def _q_clause_ii(ctx: Context) -> CheckResult:
    pts = [p for p in ctx.s7_points if fibrations.region(p) is not fibrations.RegionTag.S2]
    return _sampled(pts, lambda p: bool(_transverse_js(p)), "some H_0 cup Y_j7 is transverse to V off S2")


# A point outside S1 and S2 where H_0 cup Y_07 is not transverse (a_44 = 0).
CLAUSE_II_PROBE = (Fraction(3, 5), 0, 0, 0, Fraction(4, 5), 0, 0, 0)


@check("quat.theorem.all-j-all-p", "s7-quat", "span{H_0,Y_j7}_p + span{V}_p = T_pS^7, j=0,1,2,3, for all p")
def _q_closing(ctx: Context) -> CheckResult:
    for p in [SpherePoint(CLAUSE_II_PROBE)] + list(ctx.s7_points):
        js = _transverse_js(p)
        if js != [0, 1, 2, 3]:
            return _passfail(
                False,
                f"only j in {js} give a transverse H_0 cup Y_j7 ({fibrations.region(p).value} point);"
                " transversality needs a_00^2 != 1 and a_mm != 0 for the matching m",
                p,
            )
    return CheckResult("pass", "every H_0 cup Y_j7 is transverse at every probed point")


@check("quat.theorem.s1-witness", "s7-quat", "case a_00^2 = 0")
def _q_s1(ctx: Context) -> CheckResult:
    p = SpherePoint(S1_WITNESS)
    ms, js = _transverse_ms(p), _transverse_js(p)
    return _passfail(len(ms) < 4 and bool(js), f"at the S1 witness H_m transverse for m in {ms}, H_0 cup Y_j7 for j in {js}", p)


@check("quat.theorem.s2-basis", "s7-quat", "case a_00^2 = 1")
def _q_s2(ctx: Context) -> CheckResult:
    def ok(p):
        return not _transverse_js(p) and fibrations.transversality_check(fibrations.collection(1), p)

    return _sampled(basis_points(8), ok, "H_0 cup Y_j7 fails for every j while H_1 is transverse")


@check("quat.ehresmann.select", "s7-quat", "the Hopf map produces an Ehresmann connection H_p")
def _q_select(ctx: Context) -> CheckResult:
    chosen: dict[str, int] = {}
    for p in ctx.s7_points:
        try:
            sel = fibrations.ehresmann_select(p)
        except fibrations.TheoremViolation as exc:
            return _passfail(False, str(exc), p)
        if fibrations.selection_flag(sel, p) != [4, 7]:
            return _passfail(False, f"{sel.label} does not have flag [4,7]", p)
        chosen[sel.label] = chosen.get(sel.label, 0) + 1
    summary = ", ".join(f"{k}={v}" for k, v in sorted(chosen.items()))
    return CheckResult("pass", f"transverse choice with flag [4,7] at every sampled point ({summary})")
