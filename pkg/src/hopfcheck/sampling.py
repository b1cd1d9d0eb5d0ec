"""Seeded generation of exact rational points on S^3 and S^7."""

from __future__ import annotations

from fractions import Fraction

from .vectorfields import SpherePoint

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

S1_WITNESS = (Fraction(1, 2), Fraction(1, 2), 0, 0, Fraction(1, 2), Fraction(1, 2), 0, 0)


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood). Same sequence on every platform."""

    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self.state = seed

    def next(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def split(self) -> "SplitMix64":
        return SplitMix64(self.next())

    def small_rational(self) -> Fraction:
        """n/d with -100 <= n <= 100 and 1 <= d <= 100."""
        n = self.next() % 201 - 100
        d = self.next() % 100 + 1
        return Fraction(n, d)


def inverse_stereographic(u) -> SpherePoint:
    """(2u, |u|^2 - 1) / (1 + |u|^2), a point of the unit sphere one dimension up."""
    u = [Fraction(c) for c in u]
    r = sum(c * c for c in u)
    return SpherePoint([2 * c / (1 + r) for c in u] + [(r - 1) / (1 + r)])


def basis_points(dim: int) -> list[SpherePoint]:
    return [SpherePoint.basis(dim, i, s) for i in range(dim) for s in (1, -1)]


def sample_sphere_points(ambient_dim: int, count: int, seed: int = 0) -> list[SpherePoint]:
    """``count`` pseudo-random points, then every signed basis point, then (dim 8) the S1 witness."""
    if ambient_dim not in (4, 8):
        raise ValueError(f"sampling is defined for ambient dimensions 4 and 8, not {ambient_dim}")
    if count < 1:
        raise ValueError("count must be positive")
    # separate streams per dimension so S^3 and S^7 samples do not share prefixes
    rng = SplitMix64(seed).split() if ambient_dim == 4 else SplitMix64(seed).split().split()
    points = [inverse_stereographic([rng.small_rational() for _ in range(ambient_dim - 1)]) for _ in range(count)]
    points += basis_points(ambient_dim)
    if ambient_dim == 8:
        points.append(SpherePoint(S1_WITNESS))
    return points
