"""
Teichmüller space of one-holed tori in trace coordinates.

A marked torus is a triple (x, y, z) = (tr(1,0), tr(0,1), tr(1,1)) with all
traces above 2 and R = x^2 + y^2 + z^2 - xyz <= 0. The boundary geodesic has
trace |R - 2|, so fixing the boundary length eps fixes R = 2 - 2cosh(eps/2).
R = 0 is the cusped case (the Markoff cubic).
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.curves.slopes import Slope, det
from src.curves.traces import trace_of_slope
from src.errors import DomainError
from src.fricke.core import length_from_trace

LENGTH_VECTOR_SLOPES = (Slope(1, 0), Slope(0, 1), Slope(1, 1), Slope(1, -1))


@dataclass(frozen=True)
class FrickePoint:
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def relation(self) -> float:
        return self.x ** 2 + self.y ** 2 + self.z ** 2 - self.x * self.y * self.z

    @property
    def commutator(self) -> float:
        return self.relation - 2.0

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def __str__(self) -> str:
        return f"({self.x:.15g},{self.y:.15g},{self.z:.15g})"


def _relation_slack(point: FrickePoint, tol: float) -> float:
    return tol * max(1.0, abs(point.x * point.y * point.z))


def validate(point: FrickePoint, tol: float = 1e-10) -> Tuple[bool, str]:
    """
    Check that a trace triple is a marked one-holed torus.

    Args:
        point: Trace triple
        tol: Relative slack on R <= 0, scaled by max(1, |xyz|)

    Returns:
        Tuple of (is_valid, reason)
    """
    for name, value in zip("xyz", point.as_tuple()):
        if not np.isfinite(value):
            return False, f"{name}={value} is not finite"
        if not value > 2:
            return False, f"{name}={value:.15g} must exceed 2"

    r = point.relation
    slack = _relation_slack(point, tol)
    if r > slack:
        return False, f"relation R={r:.15g} is positive"
    if abs(r) <= slack:
        return True, "valid, cusped (R = 0)"
    return True, f"valid, boundary trace {2.0 - r:.15g}"


def boundary_length(point: FrickePoint, tol: float = 1e-10) -> float:
    """Length of the boundary geodesic; 0 for a cusp."""
    ok, reason = validate(point, tol)
    if not ok:
        raise DomainError(f"Invalid point {point}: {reason}")
    r = point.relation
    if r >= -_relation_slack(point, tol):
        return 0.0
    return length_from_trace(2.0 - r)


@dataclass(frozen=True)
class TeichSlice:
    """Tori with boundary length epsilon (epsilon = 0: cusped)."""

    epsilon: float = 0.0

    def __post_init__(self):
        if not self.epsilon >= 0:
            raise DomainError(f"Boundary length must be nonnegative, got {self.epsilon}")
        object.__setattr__(self, "epsilon", float(self.epsilon))

    @property
    def relation(self) -> float:
        return 2.0 - 2.0 * np.cosh(self.epsilon / 2.0)

    @classmethod
    def of_point(cls, point: FrickePoint) -> "TeichSlice":
        return cls(boundary_length(point))


def leaf_point(teich_slice: TeichSlice, x: float, theta: float) -> FrickePoint:
    """
    Point of the leaf tr(1,0) = x with leaf coordinate theta.

    With u = (y+z)/2 and w = (y-z)/2 the leaf is the hyperbola
    (x-2)u^2 - (x+2)w^2 = x^2 - R; theta is the hyperbolic angle on its u > 0 branch.
    """
    if not x > 2:
        raise DomainError(f"Leaf trace must exceed 2, got {x}")
    r = teich_slice.relation
    a = np.sqrt((x * x - r) / (x - 2.0))
    b = np.sqrt((x * x - r) / (x + 2.0))
    grow, decay = np.exp(theta), np.exp(-theta)
    y = 0.5 * ((a + b) * grow + (a - b) * decay)
    z = 0.5 * ((a - b) * grow + (a + b) * decay)
    return FrickePoint(x, y, z)


def leaf_minimum(teich_slice: TeichSlice, x: float) -> float:
    """Smallest value of y (or z) along the leaf tr(1,0) = x."""
    r = teich_slice.relation
    return 2.0 * np.sqrt((x * x - r) / (x * x - 4.0))


def change_basis(point: FrickePoint, gamma: Slope, gamma_prime: Slope) -> FrickePoint:
    """
    Re-mark a torus so that gamma, gamma_prime become (1,0), (0,1).

    Returns:
        The triple (tr gamma, tr gamma', tr(gamma + gamma'))
    """
    if abs(det(gamma.vector, gamma_prime.vector)) != 1:
        raise DomainError(f"Slopes {gamma} and {gamma_prime} do not form a basis")
    mediant = Slope(gamma.p + gamma_prime.p, gamma.q + gamma_prime.q)
    return FrickePoint(
        trace_of_slope(point, gamma),
        trace_of_slope(point, gamma_prime),
        trace_of_slope(point, mediant),
    )


def symmetric_family(t: float) -> FrickePoint:
    """The torus (t, t, t); t = 3 is the modular torus."""
    if not t >= 3:
        raise DomainError(f"Symmetric family needs t >= 3, got {t}")
    return FrickePoint(t, t, t)


def cusped_diagonal_point(m: float) -> FrickePoint:
    """
    Cusped torus (m + 2/m, m + 2/m, m^2 + 2) on the diagonal x = y.

    m = 2 gives (3,3,6), m = 1 the modular torus and m = 2 - sqrt(2) gives
    (4, 4, 8 - sqrt(32)).
    """
    if not m > 0:
        raise DomainError(f"Path parameter must be positive, got {m}")
    side = m + 2.0 / m
    return FrickePoint(side, side, m * m + 2.0)


def length_vector(point: FrickePoint) -> np.ndarray:
    """Lengths of (1,0), (0,1), (1,1), (1,-1)."""
    return np.array([length_from_trace(trace_of_slope(point, s)) for s in LENGTH_VECTOR_SLOPES])


def projective_gap(first: FrickePoint, second: FrickePoint) -> float:
    """Max-norm distance between the length vectors normalised to unit max norm."""
    u = length_vector(first)
    v = length_vector(second)
    return float(np.max(np.abs(u / np.max(u) - v / np.max(v))))
