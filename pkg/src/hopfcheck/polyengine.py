"""Sparse multivariate polynomials with exact rational coefficients.

Identities are decided by full expansion into canonical form, never by
sampling. Monomials are stored as packed integers (8 bits per exponent), so
multiplying monomials is a single integer addition.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Coeff = Union[int, Fraction]

MAX_VARS = 8
_BITS = 8
_MASK = (1 << _BITS) - 1
_MAX_DEGREE = _MASK


class PolyError(ValueError):
    pass


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _coerce(c) -> Coeff:
    if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
        raise TypeError(f"not an exact coefficient: {c!r}")
    return _norm(c)


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _MAX_DEGREE:
            raise PolyError(f"exponent {e} out of range")
        key |= e << (_BITS * i)
    return key


def _unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _MASK for i in range(nvars))


def _key_degree(key: int) -> int:
    total = 0
    while key:
        total += key & _MASK
        key >>= _BITS
    return total


class MultiPoly:
    """Polynomial in ``nvars`` indeterminates; zero coefficients are never stored."""

    __slots__ = ("nvars", "_terms", "_degree")

    def __init__(self, nvars: int, terms: Mapping[int, Coeff] | None = None, *, _trusted=False):
        if not 0 <= nvars <= MAX_VARS:
            raise PolyError(f"nvars must be in 0..{MAX_VARS}")
        self.nvars = nvars
        if terms is None:
            self._terms: dict[int, Coeff] = {}
        elif _trusted:
            self._terms = dict(terms)
        else:
            self._terms = {k: _coerce(c) for k, c in terms.items() if c}
        self._degree: int | None = None

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c: Coeff, nvars: int) -> "MultiPoly":
        c = _coerce(c)
        return cls(nvars, {0: c} if c else None, _trusted=True)

    @classmethod
    def var(cls, i: int, nvars: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise PolyError(f"variable index {i} out of range for {nvars} variables")
        return cls(nvars, {1 << (_BITS * i): 1}, _trusted=True)

    @classmethod
    def variables(cls, nvars: int) -> tuple["MultiPoly", ...]:
        return tuple(cls.var(i, nvars) for i in range(nvars))

    @classmethod
    def from_terms(cls, terms: Mapping[Sequence[int], Coeff], nvars: int) -> "MultiPoly":
        packed: dict[int, Coeff] = {}
        for exps, c in terms.items():
            if len(exps) != nvars:
                raise PolyError("exponent vector length does not match nvars")
            k = _pack(exps)
            packed[k] = packed.get(k, 0) + _coerce(c)
        return cls(nvars, {k: _norm(c) for k, c in packed.items() if c}, _trusted=True)

    @classmethod
    def linear(cls, coeffs: Sequence[Coeff]) -> "MultiPoly":
        """The linear form sum_i coeffs[i] * x_i."""
        n = len(coeffs)
        return cls(n, {1 << (_BITS * i): _coerce(c) for i, c in enumerate(coeffs) if c}, _trusted=True)

    # inspection ----------------------------------------------------------
    def terms(self) -> dict[tuple[int, ...], Coeff]:
        """Canonical ``{exponent vector: coefficient}`` view, sorted by exponent vector."""
        items = sorted((_unpack(k, self.nvars), c) for k, c in self._terms.items())
        return dict(items)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        if self._degree is None:
            self._degree = max((_key_degree(k) for k in self._terms), default=0)
        return self._degree

    def constant_term(self) -> Coeff:
        return self._terms.get(0, 0)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    # arithmetic ---------------------------------------------------------
    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise PolyError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        return MultiPoly.const(other, self.nvars)

    def __add__(self, other) -> "MultiPoly":
        other = self._lift(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return MultiPoly(self.nvars, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {k: -c for k, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._lift(other) - self

    def scale(self, c: Coeff) -> "MultiPoly":
        c = _coerce(c)
        if not c:
            return MultiPoly(self.nvars)
        return MultiPoly(self.nvars, {k: _norm(v * c) for k, v in self._terms.items()}, _trusted=True)

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        other = self._lift(other)
        if self.degree + other.degree > _MAX_DEGREE:
            raise PolyError("product degree exceeds the packed exponent range")
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, Coeff] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return MultiPoly(self.nvars, {k: _norm(c) for k, c in out.items() if c}, _trusted=True)

    def __rmul__(self, other) -> "MultiPoly":
        return self.scale(other)

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise PolyError("negative powers are not polynomials")
        result = MultiPoly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def diff(self, i: int) -> "MultiPoly":
        """Partial derivative with respect to variable ``i``."""
        shift = _BITS * i
        out: dict[int, Coeff] = {}
        for k, c in self._terms.items():
            e = (k >> shift) & _MASK
            if e:
                out[k - (1 << shift)] = _norm(c * e)
        return MultiPoly(self.nvars, out, _trusted=True)

    def eval(self, point: Sequence[Coeff]) -> Coeff:
        if len(point) != self.nvars:
            raise PolyError(f"point has {len(point)} coordinates, polynomial has {self.nvars} variables")
        point = [_coerce(p) for p in point]
        total: Coeff = 0
        for k, c in self._terms.items():
            term = c
            for i in range(self.nvars):
                e = (k >> (_BITS * i)) & _MASK
                if e:
                    term = term * point[i] ** e
            total += term
        return _norm(total) if isinstance(total, Fraction) else total

    def split_by_var(self, i: int) -> dict[int, "MultiPoly"]:
        """Coefficients of powers of variable ``i`` (each free of that variable)."""
        shift = _BITS * i
        parts: dict[int, dict[int, Coeff]] = {}
        for k, c in self._terms.items():
            e = (k >> shift) & _MASK
            parts.setdefault(e, {})[k - (e << shift)] = c
        return {e: MultiPoly(self.nvars, t, _trusted=True) for e, t in parts.items()}

    # comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms().items(), reverse=True):
            mono = "*".join(
                f"y{i}" if e == 1 else f"y{i}^{e}" for i, e in enumerate(exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_arith(op: str, *args):
    """Dispatcher over the basic ring operations.

    ``op`` is one of ``add``, ``sub``, ``mul`` (two polynomials), ``scale``
    (polynomial, scalar) or ``eval`` (polynomial, point).
    """
    if op == "add":
        return args[0] + args[1]
    if op == "sub":
        return args[0] - args[1]
    if op == "mul":
        a, b = args
        if not isinstance(b, MultiPoly):
            raise TypeError("mul expects two polynomials; use scale for scalars")
        return a * b
    if op == "scale":
        return args[0].scale(args[1])
    if op == "eval":
        return args[0].eval(args[1])
    raise ValueError(f"unknown polynomial operation {op!r}")


def sphere_relation(nvars: int) -> MultiPoly:
    """sum_i y_i^2 - 1."""
    ys = MultiPoly.variables(nvars)
    return sum((y * y for y in ys), MultiPoly(nvars)) - 1


def reduce_mod_sphere(p: MultiPoly) -> MultiPoly:
    """Remainder of ``p`` modulo ``sum y_i^2 - 1``, eliminating y0^2.

    The result has degree at most one in y0 and agrees with ``p`` on the unit
    sphere. Evaluated by Horner's rule in y0^2 so intermediate sizes stay
    bounded by the size of the remainder.
    """
    n = p.nvars
    if n == 0:
        return p
    y0 = MultiPoly.var(0, n)
    rest = MultiPoly.const(1, n) - sum(
        (MultiPoly.var(i, n) ** 2 for i in range(1, n)), MultiPoly(n)
    )
    parts = p.split_by_var(0)
    result = MultiPoly(n)
    for parity in (0, 1):
        powers = {e // 2: c for e, c in parts.items() if e % 2 == parity}
        if not powers:
            continue
        acc = MultiPoly(n)
        for k in range(max(powers), -1, -1):
            acc = acc * rest if not acc.is_zero() else acc
            if k in powers:
                acc = acc + powers[k]
        result = result + (acc * y0 if parity else acc)
    return result


def poly_identity_check(p: MultiPoly, q: MultiPoly, mod_sphere: bool = False) -> bool:
    """True iff p == q identically (or on the unit sphere when ``mod_sphere``)."""
    if p.nvars != q.nvars:
        raise PolyError(f"nvars mismatch: {p.nvars} vs {q.nvars}")
    diff = p - q
    if mod_sphere:
        diff = reduce_mod_sphere(diff)
    return diff.is_zero()


class PolyMatrix:
    """Dense matrix of :class:`MultiPoly` entries sharing one ``nvars``."""

    __slots__ = ("rows", "cols", "nvars", "entries")

    def __init__(self, entries: Sequence[Sequence[MultiPoly]]):
        rows = [tuple(r) for r in entries]
        if not rows or not rows[0]:
            raise PolyError("empty matrix")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise PolyError("ragged matrix")
        nvars = {e.nvars for r in rows for e in r}
        if len(nvars) != 1:
            raise PolyError("matrix entries must share nvars")
        self.rows, self.cols = len(rows), cols
        self.nvars = nvars.pop()
        self.entries = tuple(rows)

    @classmethod
    def from_constants(cls, grid: Sequence[Sequence[Coeff]], nvars: int) -> "PolyMatrix":
        return cls([[MultiPoly.const(c, nvars) for c in row] for row in grid])

    def __getitem__(self, ij: tuple[int, int]) -> MultiPoly:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[MultiPoly, ...]:
        return self.entries[i]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(list(zip(*self.entries)))

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(e) for e in r] for r in self.entries])

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._same_shape(other)
        return PolyMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._same_shape(other)
        return PolyMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def _same_shape(self, other: "PolyMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise PolyError("shape mismatch")

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise PolyError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = MultiPoly(self.nvars)
        out = []
        for r in self.entries:
            row = []
            for j in range(other.cols):
                acc = zero
                for k, a in enumerate(r):
                    b = other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def apply(self, vector: Sequence[MultiPoly]) -> tuple[MultiPoly, ...]:
        if len(vector) != self.cols:
            raise PolyError("vector length does not match column count")
        zero = MultiPoly(self.nvars)
        return tuple(sum((a * v for a, v in zip(r, vector)), zero) for r in self.entries)

    def eval(self, point: Sequence[Coeff]) -> list[list[Coeff]]:
        return [[e.eval(point) for e in r] for r in self.entries]

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.entries for e in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)


def poly_det(m: PolyMatrix) -> MultiPoly:
    """Determinant by Laplace expansion along rows, memoised on column subsets."""
    if m.rows != m.cols:
        raise PolyError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    memo: dict[int, MultiPoly] = {}
    zero = MultiPoly(m.nvars)
    one = MultiPoly.const(1, m.nvars)

    def minor(cols_mask: int) -> MultiPoly:
        # rows used so far equals number of removed columns
        if cols_mask in memo:
            return memo[cols_mask]
        remaining = [j for j in range(n) if cols_mask >> j & 1]
        if not remaining:
            return one
        row = n - len(remaining)
        acc = zero
        for pos, j in enumerate(remaining):
            a = m.entries[row][j]
            if a.is_zero():
                continue
            sub = minor(cols_mask & ~(1 << j))
            if sub.is_zero():
                continue
            term = a * sub
            acc = acc - term if pos % 2 else acc + term
        memo[cols_mask] = acc
        return acc

    return minor((1 << n) - 1)


def variables(nvars: int) -> tuple[MultiPoly, ...]:
    return MultiPoly.variables(nvars)


def norm_sq_poly(nvars: int) -> MultiPoly:
    return sum((y * y for y in MultiPoly.variables(nvars)), MultiPoly(nvars))


def matrix_from_linear(grid: Iterable[Iterable[Coeff]]) -> list[MultiPoly]:
    """Rows of a constant matrix turned into linear forms in its column variables."""
    return [MultiPoly.linear(list(r)) for r in grid]
