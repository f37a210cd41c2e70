"""
Flat tori in the tau plane.

The torus C / (Z + tau Z) gives the curve of slope (p, q) the length |p tau + q|.
Two slopes have equal length on

    A |tau|^2 + 2 B Re(tau) + C = 0,   A = p1^2 - p2^2, B = p1 q1 - p2 q2, C = q1^2 - q2^2,

a semicircle centred on the real axis (A != 0) or a vertical line (A = 0).
Since B^2 - AC = det(s1, s2)^2 the endpoints are always rational.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from src.curves.slopes import Slope, det
from src.errors import DomainError


@dataclass(frozen=True)
class TauPoint:
    re: float
    im: float

    def __post_init__(self):
        if not self.im > 0:
            raise DomainError(f"tau must lie in the upper half-plane, got Im = {self.im}")

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


@dataclass(frozen=True)
class BoundaryPoint:
    """A point of the real line or infinity (value None)."""

    value: Optional[Fraction]

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def minimal_polynomial(self) -> Tuple[int, ...]:
        """Integer coefficients, highest degree first; () for infinity."""
        if self.value is None:
            return ()
        return (self.value.denominator, -self.value.numerator)

    def __float__(self) -> float:
        return float("inf") if self.value is None else float(self.value)

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


@dataclass(frozen=True)
class PoincareGeodesic:
    first: Slope
    second: Slope
    kind: str
    coefficients: Tuple[int, int, int]
    endpoints: Tuple[BoundaryPoint, BoundaryPoint]
    center: Optional[Fraction] = None
    radius: Optional[Fraction] = None

    def contains(self, tau: TauPoint, rel_tol: float = 1e-12) -> bool:
        left = flat_length(tau, self.first)
        right = flat_length(tau, self.second)
        return abs(left - right) <= rel_tol * max(left, right, 1.0)

    def sample(self, n: int = 100) -> List[TauPoint]:
        """n points spread along the geodesic."""
        if self.kind == "circle":
            angles = np.linspace(0.0, np.pi, n + 2)[1:-1]
            c, r = float(self.center), float(self.radius)
            return [TauPoint(c + r * np.cos(phi), r * np.sin(phi)) for phi in angles]
        foot = float(self.endpoints[0])
        return [TauPoint(foot, h) for h in np.geomspace(1e-3, 1e3, n)]


def flat_length(tau: TauPoint, s: Slope) -> float:
    return abs(s.p * tau.value + s.q)


def equal_locus_flat(s1: Slope, s2: Slope) -> PoincareGeodesic:
    """
    The set of tau where s1 and s2 have equal flat length.

    Raises:
        DomainError: when s1 and s2 are the same curve
    """
    if s1 == s2:
        raise DomainError(f"Equal-length locus needs distinct slopes, got {s1} twice")
    (p1, q1), (p2, q2) = s1.vector, s2.vector
    a = p1 * p1 - p2 * p2
    b = p1 * q1 - p2 * q2
    c = q1 * q1 - q2 * q2

    if a == 0:
        foot = Fraction(-c, 2 * b)
        return PoincareGeodesic(
            first=s1,
            second=s2,
            kind="vertical",
            coefficients=(a, b, c),
            endpoints=(BoundaryPoint(foot), BoundaryPoint(None)),
        )

    center = Fraction(-b, a)
    radius = Fraction(abs(det(s1.vector, s2.vector)), abs(a))
    return PoincareGeodesic(
        first=s1,
        second=s2,
        kind="circle",
        coefficients=(a, b, c),
        endpoints=(BoundaryPoint(center - radius), BoundaryPoint(center + radius)),
        center=center,
        radius=radius,
    )


def endpoint_residual(geodesic: PoincareGeodesic, point: BoundaryPoint) -> Fraction:
    """Exact value of A u^2 + 2 B u + C at a finite endpoint (zero on the locus)."""
    if point.is_infinite:
        raise DomainError("Infinite endpoint has no residual")
    a, b, c = geodesic.coefficients
    u = point.value
    return a * u * u + 2 * b * u + c
