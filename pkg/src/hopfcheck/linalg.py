"""Exact rational linear algebra: rank, nullspace, span comparisons."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Vector = Sequence[Fraction]


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        den = lcm(*(Fraction(v).denominator for v in r)) if r else 1
        out.append([int(Fraction(v) * den) for v in r])
    return out


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    m = [r for r in _integer_rows(rows) if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            m[i] = [(p * m[i][j] - a * m[r][j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(v) for v in r] for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty system")
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def matvec(m: Sequence[Sequence], v: Vector) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*m)]


def contains(big: Sequence[Vector], small: Sequence[Vector]) -> bool:
    """span(small) is a subspace of span(big)."""
    return rank([*big, *small]) == rank(big)


def same_span(a: Sequence[Vector], b: Sequence[Vector]) -> bool:
    ra = rank(a)
    return ra == rank(b) == rank([*a, *b])


def intersect(a: Sequence[Vector], b: Sequence[Vector]) -> list[list[Fraction]]:
    """Basis of span(a) ∩ span(b); inputs must be linearly independent sets."""
    if not a or not b:
        return []
    # solve sum x_i a_i - sum y_j b_j = 0
    cols = [*a, *[[-v for v in w] for w in b]]
    system = transpose(cols)
    out = []
    for sol in nullspace(system, len(cols)):
        vec = [Fraction(0)] * len(a[0])
        for coeff, basis_vec in zip(sol[: len(a)], a):
            if coeff:
                vec = [s + coeff * t for s, t in zip(vec, basis_vec)]
        out.append(vec)
    return independent_subset(out)


def independent_subset(vectors: Sequence[Vector]) -> list[list[Fraction]]:
    chosen: list[list[Fraction]] = []
    for v in vectors:
        if rank([*chosen, v]) > len(chosen):
            chosen.append(list(v))
    return chosen
