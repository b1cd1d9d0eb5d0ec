"""Linear vector fields on R^4 and R^8: invariant frames, brackets, one-forms and flags.

A linear field is stored as its coefficient matrix ``A``: the value at ``y``
is ``A @ y`` and the component along d/dy_i is row ``i`` of ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from . import linalg
from .algebra import AlgebraElement, as_scalar
from .polyengine import MultiPoly, PolyMatrix

Matrix = tuple[tuple[Fraction, ...], ...]


class DimensionMismatchError(ValueError):
    pass


class TangencyError(RuntimeError):
    """An evaluated bracket left the tangent space of the sphere."""


class TranscriptionError(ValueError):
    pass


def _freeze(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(as_scalar(v) for v in r) for r in rows)


@dataclass(frozen=True)
class SpherePoint:
    """Point with coordinates summing in square to exactly one."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        values = tuple(as_scalar(c) for c in coords)
        if sum(c * c for c in values) != 1:
            raise ValueError(f"point is not on the unit sphere: {[str(c) for c in values]}")
        object.__setattr__(self, "coords", values)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def as_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coords]

    @classmethod
    def basis(cls, dim: int, i: int, sign: int = 1) -> "SpherePoint":
        return cls(sign if k == i else 0 for k in range(dim))


def _coords(p) -> tuple[Fraction, ...]:
    if isinstance(p, SpherePoint):
        return p.coords
    return tuple(as_scalar(c) for c in p)


@dataclass(frozen=True)
class LinearVectorField:
    matrix: Matrix
    name: str = field(default="", compare=False)

    def __init__(self, matrix: Iterable[Iterable], name: str = ""):
        m = _freeze(matrix)
        if not m or any(len(r) != len(m) for r in m):
            raise ValueError("field matrix must be square")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "name", name)
        integral = all(a.denominator == 1 for r in m for a in r)
        object.__setattr__(self, "_int_rows", tuple(tuple(a.numerator for a in r) for r in m) if integral else None)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @classmethod
    def parse(cls, spec: str, name: str = "") -> "LinearVectorField":
        """Build from the coefficient of each d/dy_i in order, e.g. ``"-y1 y0 -y3 y2"``.

        Tokens are ``0``, ``[+-]y<k>`` or ``[+-]<int>y<k>``.
        """
        tokens = spec.split()
        n = len(tokens)
        rows = [[0] * n for _ in range(n)]
        for i, tok in enumerate(tokens):
            if tok == "0":
                continue
            head, _, idx = tok.partition("y")
            if head in ("", "+"):
                c = 1
            elif head == "-":
                c = -1
            else:
                c = int(head)
            rows[i][int(idx)] = c
        return cls(rows, name)

    @classmethod
    def zero(cls, dim: int, name: str = "0") -> "LinearVectorField":
        return cls([[0] * dim for _ in range(dim)], name)

    def __call__(self, p) -> tuple[Fraction, ...]:
        return eval_field(self, p)

    def _binary(self, other: "LinearVectorField", op) -> Matrix:
        if other.dim != self.dim:
            raise DimensionMismatchError(f"fields of dimension {self.dim} and {other.dim}")
        return tuple(
            tuple(op(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(self.matrix, other.matrix)
        )

    def __add__(self, other: "LinearVectorField") -> "LinearVectorField":
        return LinearVectorField(self._binary(other, lambda a, b: a + b))

    def __sub__(self, other: "LinearVectorField") -> "LinearVectorField":
        return LinearVectorField(self._binary(other, lambda a, b: a - b))

    def __neg__(self) -> "LinearVectorField":
        return LinearVectorField([[-a for a in r] for r in self.matrix], f"-{self.name}")

    def __mul__(self, c) -> "LinearVectorField":
        c = as_scalar(c)
        return LinearVectorField([[c * a for a in r] for r in self.matrix])

    __rmul__ = __mul__

    def is_skew(self) -> bool:
        n = self.dim
        return all(self.matrix[i][j] == -self.matrix[j][i] for i in range(n) for j in range(n))

    def is_zero(self) -> bool:
        return not any(a for r in self.matrix for a in r)

    def transformed(self, linear_map: Sequence[Sequence]) -> "LinearVectorField":
        """The field y -> L(F(y)) for a constant linear map L."""
        return LinearVectorField(linalg.matmul(linear_map, self.matrix))

    def components(self) -> tuple[MultiPoly, ...]:
        """Component polynomials in the ambient coordinates."""
        return tuple(MultiPoly.linear(r) for r in self.matrix)

    def label(self) -> str:
        return self.name or "<field>"


def eval_field(f: LinearVectorField, p) -> tuple[Fraction, ...]:
    y = _coords(p)
    if len(y) != f.dim:
        raise DimensionMismatchError(f"field of dimension {f.dim} evaluated at a {len(y)}-point")
    if f._int_rows is None:
        return tuple(sum((a * b for a, b in zip(r, y)), Fraction(0)) for r in f.matrix)
    # integer matrix: work on numerators over a common denominator
    den = lcm(*(c.denominator for c in y))
    nums = [c.numerator * (den // c.denominator) for c in y]
    return tuple(Fraction(sum(a * b for a, b in zip(r, nums)), den) for r in f._int_rows)


def bracket(f: LinearVectorField, g: LinearVectorField) -> LinearVectorField:
    """Lie bracket of derivations, [F, G]h = F(G h) - G(F h).

    For F(y) = A y and G(y) = B y this is the linear field with matrix BA - AB.
    """
    if f.dim != g.dim:
        raise DimensionMismatchError(f"fields of dimension {f.dim} and {g.dim}")
    a, b = f._int_rows or f.matrix, g._int_rows or g.matrix
    ba = linalg.matmul(b, a)
    ab = linalg.matmul(a, b)
    name = f"[{f.label()},{g.label()}]"
    return LinearVectorField([[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ba, ab)], name)


@dataclass(frozen=True)
class OneForm:
    """Bilinear one-form: value on tangent vector ``u`` at ``y`` is ``y^T M u``."""

    matrix: Matrix
    name: str = field(default="", compare=False)

    def __init__(self, matrix: Iterable[Iterable], name: str = ""):
        object.__setattr__(self, "matrix", _freeze(matrix))
        object.__setattr__(self, "name", name)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @classmethod
    def parse(cls, spec: str, name: str = "") -> "OneForm":
        """From the coefficient of each dy_j, e.g. ``"-y1 y0 -y3 y2"`` for -y1 dy0 + y0 dy1 - ..."""
        coeff_field = LinearVectorField.parse(spec)
        return cls(linalg.transpose(coeff_field.matrix), name)

    def __call__(self, p, u) -> Fraction:
        y, v = _coords(p), _coords(u)
        if len(y) != self.dim or len(v) != self.dim:
            raise DimensionMismatchError("one-form evaluated on vectors of the wrong dimension")
        return linalg.dot(y, linalg.matvec(self.matrix, v))


def one_form_eval(w: OneForm, f: LinearVectorField, p) -> Fraction:
    if w.dim != f.dim:
        raise DimensionMismatchError(f"one-form of dimension {w.dim} on field of dimension {f.dim}")
    return w(p, eval_field(f, p))


def one_form_poly(w: OneForm, f: LinearVectorField) -> MultiPoly:
    """w(F) as a polynomial in the base point."""
    ys = MultiPoly.variables(w.dim)
    fy = f.components()
    total = MultiPoly(w.dim)
    for i in range(w.dim):
        for j in range(w.dim):
            c = w.matrix[i][j]
            if c:
                total = total + ys[i] * fy[j] * c
    return total


def gram(f: LinearVectorField, g: LinearVectorField, p) -> Fraction:
    if f.dim != g.dim:
        raise DimensionMismatchError(f"fields of dimension {f.dim} and {g.dim}")
    return linalg.dot(eval_field(f, p), eval_field(g, p))


def gram_poly(f: LinearVectorField, g: LinearVectorField) -> MultiPoly:
    """<F(y), G(y)> as a quadratic polynomial in y."""
    if f.dim != g.dim:
        raise DimensionMismatchError(f"fields of dimension {f.dim} and {g.dim}")
    total = MultiPoly(f.dim)
    for a, b in zip(f.components(), g.components()):
        total = total + a * b
    return total


@dataclass(frozen=True)
class Distribution:
    generators: tuple[LinearVectorField, ...]
    label: str = ""

    def __init__(self, generators: Iterable[LinearVectorField], label: str = ""):
        gens = tuple(generators)
        if not gens:
            raise ValueError("a distribution needs at least one generator")
        if len({g.dim for g in gens}) != 1:
            raise DimensionMismatchError("generators of mixed dimension")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "label", label)

    @property
    def dim(self) -> int:
        return self.generators[0].dim

    def at(self, p) -> list[tuple[Fraction, ...]]:
        return [eval_field(g, p) for g in self.generators]


def flag_generators(d: Distribution, max_depth: int) -> list[list[LinearVectorField]]:
    """Generating fields of H^1 .. H^max_depth, with H^{r+1} = [H^r, H] + H^r."""
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    return [list(level) for level in _flag_levels(tuple(d.generators), max_depth)]


@lru_cache(maxsize=256)
def _flag_levels(generators: tuple[LinearVectorField, ...], max_depth: int) -> tuple[tuple[LinearVectorField, ...], ...]:
    levels = [list(generators)]
    seen = {g.matrix for g in generators}
    for _ in range(max_depth - 1):
        current = list(levels[-1])
        for g in levels[-1]:
            for h in generators:
                b = bracket(g, h)
                # a negated field spans the same line, keep only one of them
                if not b.is_zero() and b.matrix not in seen and (-b).matrix not in seen:
                    seen.add(b.matrix)
                    current.append(b)
        levels.append(current)
    return tuple(tuple(level) for level in levels)


def _flag_dims_from_levels(levels, p, check_tangent: bool) -> list[int]:
    y = _coords(p)
    dims = []
    for gens in levels:
        vectors = [eval_field(g, y) for g in gens]
        if check_tangent:
            for g, v in zip(gens, vectors):
                if linalg.dot(v, y):
                    raise TangencyError(f"{g.label()} is not tangent to the sphere at {[str(c) for c in y]}")
        dims.append(linalg.rank(vectors))
    return dims


def flag_dimensions(d: Distribution, p, max_depth: int) -> list[int]:
    """Pointwise dimensions [dim H^1_p, ..., dim H^max_depth_p]."""
    if len(_coords(p)) != d.dim:
        raise DimensionMismatchError("point and distribution dimensions differ")
    return _flag_dims_from_levels(flag_generators(d, max_depth), p, check_tangent=False)


def is_bracket_generating(
    d: Distribution, points: Sequence, max_depth: int
) -> tuple[bool, int | None]:
    """Whether the flag fills the tangent space of the sphere at every point.

    Returns ``(True, step)`` with the largest per-point step, or ``(False, None)``.
    Raises :class:`TangencyError` if any evaluated field leaves the tangent space.
    """
    if not points:
        raise ValueError("at least one point is required")
    levels = flag_generators(d, max_depth)
    target = d.dim - 1
    step = 0
    for p in points:
        dims = _flag_dims_from_levels(levels, p, check_tangent=True)
        if dims[-1] < target:
            return False, None
        step = max(step, dims.index(target) + 1)
    return True, step


# ---------------------------------------------------------------------------
# Concrete frames

# Right translation matrices, entries are signed coefficient indices of y.
_RT4 = """
 y0  y1  y2  y3
-y1  y0 -y3  y2
-y2  y3  y0 -y1
-y3 -y2  y1  y0
"""

_RT8 = """
y0 -y1 -y2 -y3 -y4 -y5 -y6 -y7
y1  y0  y3 -y2  y5 -y4 -y7  y6
y2 -y3  y0  y1  y6  y7 -y4 -y5
y3  y2 -y1  y0  y7 -y6  y5 -y4
y4 -y5 -y6 -y7  y0  y1  y2  y3
y5  y4 -y7  y6 -y1  y0 -y3  y2
y6  y7  y4 -y5 -y2  y3  y0 -y1
y7 -y6  y5  y4 -y3 -y2  y1  y0
"""


def _parse_symbol_grid(text: str) -> list[list[tuple[int, int]]]:
    grid = []
    for line in text.strip().splitlines():
        row = []
        for tok in line.split():
            row.append((-1 if tok.startswith("-") else 1, int(tok.lstrip("+-")[1:])))
        grid.append(row)
    return grid


_RT_GRIDS = {4: _parse_symbol_grid(_RT4), 8: _parse_symbol_grid(_RT8)}


def right_translation_matrix(y: AlgebraElement | Sequence) -> list[list[Fraction]]:
    coords = tuple(y.coeffs) if isinstance(y, AlgebraElement) else _coords(y)
    if len(coords) not in _RT_GRIDS:
        raise ValueError(f"right translation matrix is defined for dims 4 and 8, not {len(coords)}")
    return [[s * coords[k] for s, k in row] for row in _RT_GRIDS[len(coords)]]


def right_translation_polymatrix(dim: int) -> PolyMatrix:
    if dim not in _RT_GRIDS:
        raise ValueError(f"right translation matrix is defined for dims 4 and 8, not {dim}")
    ys = MultiPoly.variables(dim)
    return PolyMatrix([[ys[k] * s for s, k in row] for row in _RT_GRIDS[dim]])


_S3_FRAME = {
    "N": "y0 y1 y2 y3",
    "V": "-y1 y0 -y3 y2",
    "X": "-y2 y3 y0 -y1",
    "Y": "-y3 -y2 y1 y0",
}

_S7_FRAME = (
    "y0 y1 y2 y3 y4 y5 y6 y7",
    "-y1 y0 -y3 y2 -y5 y4 -y7 y6",
    "-y2 y3 y0 -y1 -y6 y7 y4 -y5",
    "-y3 -y2 y1 y0 y7 y6 -y5 -y4",
    "-y4 y5 y6 -y7 y0 -y1 -y2 y3",
    "-y5 -y4 -y7 -y6 y1 y0 y3 y2",
    "-y6 y7 -y4 y5 y2 -y3 y0 -y1",
    "-y7 -y6 y5 y4 -y3 -y2 y1 y0",
)

# Y_ij = 1/2 [Y_i, Y_j] as tabulated, one coefficient per d/dy_k.
PRINTED_COMMUTATORS: dict[tuple[int, int], str] = {
    (1, 2): "y3 y2 -y1 -y0 y7 y6 -y5 -y4",
    (1, 3): "-y2 y3 y0 -y1 y6 -y7 -y4 y5",
    (1, 4): "y5 y4 -y7 -y6 -y1 -y0 y3 y2",
    (1, 5): "-y4 y5 -y6 y7 y0 -y1 y2 -y3",
    (1, 6): "y7 y6 y5 y4 -y3 -y2 -y1 -y0",
    (1, 7): "-y6 y7 y4 -y5 -y2 y3 y0 -y1",
    (2, 3): "y1 -y0 y3 -y2 -y5 y4 -y7 y6",
    (2, 4): "y6 y7 y4 y5 -y2 -y3 -y0 -y1",
    (2, 5): "-y7 y6 y5 -y4 y3 -y2 -y1 y0",
    (2, 6): "-y4 -y5 y6 y7 y0 y1 -y2 -y3",
    (2, 7): "y5 -y4 y7 -y6 y1 -y0 y3 -y2",
    (3, 4): "-y7 y6 -y5 y4 -y3 y2 -y1 y0",
    (3, 5): "-y6 -y7 y4 y5 -y2 -y3 y0 y1",
    (3, 6): "y5 -y4 -y7 y6 y1 -y0 -y3 y2",
    (3, 7): "y4 y5 y6 y7 -y0 -y1 -y2 -y3",
    (4, 5): "y1 -y0 -y3 y2 y5 -y4 -y7 y6",
    (4, 6): "y2 y3 -y0 -y1 y6 y7 -y4 -y5",
    (4, 7): "-y3 y2 -y1 y0 y7 -y6 y5 -y4",
    (5, 6): "-y3 y2 -y1 y0 -y7 y6 -y5 y4",
    (5, 7): "-y2 -y3 y0 y1 y6 y7 -y4 -y5",
    (6, 7): "y1 -y0 -y3 y2 -y5 y4 y7 -y6",
}

# Fields used to certify the rank-6 distribution. The last coefficient of v52
# is y2 (the tabulated y0 would break v51 + v52 = Y5).
_V_FIELDS = {
    "v41": "-y4 y5 0 0 y0 -y1 0 0",
    "v42": "0 0 y6 -y7 0 0 -y2 y3",
    "v51": "-y5 -y4 0 0 y1 y0 0 0",
    "v52": "0 0 -y7 -y6 0 0 y3 y2",
}
V52_AS_PRINTED = "0 0 -y7 -y6 0 0 y3 y0"


@lru_cache(maxsize=None)
def invariant_frame(dim: int) -> tuple[LinearVectorField, ...]:
    """[N, V, X, Y] on R^4 or [Y0, ..., Y7] on R^8."""
    if dim == 4:
        return tuple(LinearVectorField.parse(s, n) for n, s in _S3_FRAME.items())
    if dim == 8:
        return tuple(LinearVectorField.parse(s, f"Y{k}") for k, s in enumerate(_S7_FRAME))
    raise ValueError(f"invariant frames exist here only for dims 4 and 8, not {dim}")


def s3_field(name: str) -> LinearVectorField:
    return invariant_frame(4)["NVXY".index(name)]


def v_field(name: str) -> LinearVectorField:
    if name == "v52_printed":
        return LinearVectorField.parse(V52_AS_PRINTED, name)
    return LinearVectorField.parse(_V_FIELDS[name], name)


def normal_field(dim: int) -> LinearVectorField:
    return LinearVectorField([[int(i == j) for j in range(dim)] for i in range(dim)], "N")


def complex_rotation_field(dim: int) -> LinearVectorField:
    """Multiplication by i in each complex coordinate: -y1 d0 + y0 d1 - y3 d2 + y2 d3 ..."""
    if dim % 2:
        raise ValueError("ambient dimension must be even")
    tokens = []
    for k in range(dim // 2):
        tokens += [f"-y{2 * k + 1}", f"y{2 * k}"]
    return LinearVectorField.parse(" ".join(tokens), f"V{dim // 2}")


def printed_commutator(i: int, j: int) -> LinearVectorField:
    return LinearVectorField.parse(PRINTED_COMMUTATORS[(i, j)], f"Y{i}{j}")


def commutator_table(frame: Sequence[LinearVectorField]) -> dict[tuple[int, int], LinearVectorField]:
    """Y_ij = 1/2 [Y_i, Y_j] for 1 <= i < j <= 7."""
    if len(frame) != 8 or frame[0].dim != 8:
        raise ValueError("commutator_table expects the eight-field frame on R^8")
    table = {}
    for i in range(1, 8):
        for j in range(i + 1, 8):
            b = bracket(frame[i], frame[j])
            if any(a.denominator != 1 or a.numerator % 2 for r in b.matrix for a in r):
                raise TranscriptionError(f"[Y{i},Y{j}] has odd coefficients")
            table[(i, j)] = LinearVectorField([[a / 2 for a in r] for r in b.matrix], f"Y{i}{j}")
    return table


@lru_cache(maxsize=None)
def _frame_commutators() -> dict[tuple[int, int], LinearVectorField]:
    return commutator_table(invariant_frame(8))


def yfield(i: int, j: int | None = None) -> LinearVectorField:
    """Y_i, or the commutator Y_ij with Y_0k = Y_k and Y_ji = -Y_ij."""
    frame = invariant_frame(8)
    if j is None:
        return frame[i]
    if i == j:
        raise ValueError("Y_ii is not defined")
    if i == 0:
        return LinearVectorField(frame[j].matrix, f"Y0{j}")
    if j == 0:
        return LinearVectorField((-frame[i]).matrix, f"Y{i}0")
    table = _frame_commutators()
    if i < j:
        return table[(i, j)]
    return LinearVectorField((-table[(j, i)]).matrix, f"Y{i}{j}")


# Contact forms on S^3, coefficient of each dy_j.
CONTACT_FORMS = {
    "omega": OneForm.parse("-y1 y0 -y3 y2", "omega"),
    "theta": OneForm.parse("-y2 y3 y0 -y1", "theta"),
    "eta": OneForm.parse("-y3 -y2 y1 y0", "eta"),
}
