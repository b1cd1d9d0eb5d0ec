"""Exact arithmetic in the real division algebras C, H and O.

All coefficients are :class:`fractions.Fraction` values (the exact scalar type
used across the package). Products are table driven; closed-form product
formulas for H and O are kept separately and used only for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Fraction
Number = Union[int, Fraction]

SUPPORTED_DIMS = (2, 4, 8)


class IncompatibleAlgebraError(ValueError):
    """Raised when elements of different algebras are combined."""


def as_scalar(value: Number | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point values are not exact scalars")
    return Fraction(value)


@dataclass(frozen=True)
class MultiplicationTable:
    """Signed basis products: ``entries[i][j] == (sign, k)`` means e_i e_j = sign * e_k."""

    dim: int
    entries: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self) -> None:
        if self.dim not in SUPPORTED_DIMS:
            raise ValueError(f"unsupported algebra dimension {self.dim}")
        if len(self.entries) != self.dim or any(len(r) != self.dim for r in self.entries):
            raise ValueError("table shape does not match dim")

    @classmethod
    def parse(cls, text: str) -> "MultiplicationTable":
        """Parse a whitespace grid of cells such as ``e3`` or ``-e0`` (row i, column j)."""
        rows = []
        for line in text.strip().splitlines():
            row = []
            for cell in line.split():
                sign = -1 if cell.startswith("-") else 1
                row.append((sign, int(cell.lstrip("+-")[1:])))
            rows.append(tuple(row))
        return cls(len(rows), tuple(rows))

    def lookup(self, i: int, j: int) -> tuple[int, int]:
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError(f"basis index out of range for dim {self.dim}: ({i}, {j})")
        return self.entries[i][j]

    def cell(self, i: int, j: int) -> str:
        sign, k = self.lookup(i, j)
        return f"{'-' if sign < 0 else ''}e{k}"

    def with_entry(self, i: int, j: int, sign: int, k: int) -> "MultiplicationTable":
        """Copy of the table with one cell replaced (used for mutation testing)."""
        rows = [list(r) for r in self.entries]
        rows[i][j] = (sign, k)
        return MultiplicationTable(self.dim, tuple(tuple(r) for r in rows))


COMPLEX_TABLE = MultiplicationTable.parse(
    """
    e0  e1
    e1 -e0
    """
)

QUATERNION_TABLE = MultiplicationTable.parse(
    """
    e0  e1  e2  e3
    e1 -e0  e3 -e2
    e2 -e3 -e0  e1
    e3  e2 -e1 -e0
    """
)

# Octonion basis products, row e_i times column e_j.
OCTONION_TABLE = MultiplicationTable.parse(
    """
    e0  e1  e2  e3  e4  e5  e6  e7
    e1 -e0  e3 -e2  e5 -e4 -e7  e6
    e2 -e3 -e0  e1  e6  e7 -e4 -e5
    e3  e2 -e1 -e0  e7 -e6  e5 -e4
    e4 -e5 -e6 -e7 -e0  e1  e2  e3
    e5  e4 -e7  e6 -e1 -e0 -e3  e2
    e6  e7  e4 -e5 -e2  e3 -e0 -e1
    e7 -e6  e5  e4 -e3 -e2  e1 -e0
    """
)

# Active tables, looked up at call time so tests can swap in a mutated table.
TABLES: dict[int, MultiplicationTable] = {
    2: COMPLEX_TABLE,
    4: QUATERNION_TABLE,
    8: OCTONION_TABLE,
}


@dataclass(frozen=True)
class AlgebraElement:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number | str]):
        values = tuple(as_scalar(c) for c in coeffs)
        if len(values) not in SUPPORTED_DIMS:
            raise ValueError(f"element length must be one of {SUPPORTED_DIMS}, got {len(values)}")
        object.__setattr__(self, "coeffs", values)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @classmethod
    def basis(cls, dim: int, i: int) -> "AlgebraElement":
        if not 0 <= i < dim:
            raise IndexError(f"basis index {i} out of range for dim {dim}")
        return cls(1 if k == i else 0 for k in range(dim))

    @classmethod
    def zero(cls, dim: int) -> "AlgebraElement":
        return cls([0] * dim)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_dims(self, other)
        return AlgebraElement(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_dims(self, other)
        return AlgebraElement(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return AlgebraElement(a * as_scalar(other) for a in self.coeffs)

    def __rmul__(self, other):
        return AlgebraElement(as_scalar(other) * a for a in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        return f"AlgebraElement({[str(c) for c in self.coeffs]})"


def _check_dims(*elements: AlgebraElement) -> int:
    dims = {e.dim for e in elements}
    if len(dims) != 1:
        raise IncompatibleAlgebraError(f"cannot combine elements of dimensions {sorted(dims)}")
    return dims.pop()


def basis_product(dim: int, i: int, j: int) -> tuple[int, int]:
    """Signed basis index of e_i e_j in the algebra of the given dimension."""
    if dim not in TABLES:
        raise ValueError(f"unsupported algebra dimension {dim}")
    return TABLES[dim].lookup(i, j)


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear product expanded over the active multiplication table."""
    dim = _check_dims(a, b)
    table = TABLES[dim]
    out = [Fraction(0)] * dim
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        row = table.entries[i]
        for j, y in enumerate(b.coeffs):
            if y:
                sign, k = row[j]
                out[k] += sign * x * y
    return AlgebraElement(out)


def conjugate(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement([a.coeffs[0], *(-c for c in a.coeffs[1:])])


def norm_sq(a: AlgebraElement) -> Fraction:
    return sum((c * c for c in a.coeffs), Fraction(0))


def associator(a: AlgebraElement, b: AlgebraElement, c: AlgebraElement) -> AlgebraElement:
    """(ab)c - a(bc); identically zero exactly when the triple associates."""
    _check_dims(a, b, c)
    return mul(mul(a, b), c) - mul(a, mul(b, c))


def quaternion_formula_product(x: Sequence[Number], y: Sequence[Number]) -> tuple[Fraction, ...]:
    """Closed-form quaternion product, independent of the table."""
    x0, x1, x2, x3 = map(as_scalar, x)
    y0, y1, y2, y3 = map(as_scalar, y)
    return (
        x0 * y0 - x1 * y1 - x2 * y2 - x3 * y3,
        x1 * y0 + x0 * y1 - x3 * y2 + x2 * y3,
        x2 * y0 + x3 * y1 + x0 * y2 - x1 * y3,
        x3 * y0 - x2 * y1 + x1 * y2 + x0 * y3,
    )


def octonion_formula_product(x: Sequence[Number], y: Sequence[Number]) -> tuple[Fraction, ...]:
    """Closed-form octonion product written out coefficient by coefficient.

    Deliberately not derived from :data:`OCTONION_TABLE`, so the two encodings
    can catch transcription errors in each other.
    """
    x0, x1, x2, x3, x4, x5, x6, x7 = map(as_scalar, x)
    y0, y1, y2, y3, y4, y5, y6, y7 = map(as_scalar, y)
    return (
        x0*y0 - x1*y1 - x2*y2 - x3*y3 - x4*y4 - x5*y5 - x6*y6 - x7*y7,
        x1*y0 + x0*y1 - x3*y2 + x2*y3 - x5*y4 + x4*y5 + x7*y6 - x6*y7,
        x2*y0 + x3*y1 + x0*y2 - x1*y3 - x6*y4 - x7*y5 + x4*y6 + x5*y7,
        x3*y0 - x2*y1 + x1*y2 + x0*y3 - x7*y4 + x6*y5 - x5*y6 + x4*y7,
        x4*y0 + x5*y1 + x6*y2 + x7*y3 + x0*y4 - x1*y5 - x2*y6 - x3*y7,
        x5*y0 - x4*y1 + x7*y2 - x6*y3 + x1*y4 + x0*y5 + x3*y6 - x2*y7,
        x6*y0 - x7*y1 - x4*y2 + x5*y3 + x2*y4 - x3*y5 + x0*y6 + x1*y7,
        x7*y0 + x6*y1 - x5*y2 - x4*y3 + x3*y4 + x2*y5 - x1*y6 + x0*y7,
    )  # fmt: skip
