"""
Trace equations of a four-holed sphere in half-traces (cosh(l/2)).

a, b, c, d belong to the boundary curves; x, y, z and their barred partners to
the interior curves cutting the sphere into pairs of pants. The four
combinations

    f1 = ad + bc = yz - (x + xbar)/2
    f2 = ac + bd = xy - (z + zbar)/2
    f3 = ab + cd = xz - (y + ybar)/2
    f4 = a^2 + b^2 + c^2 + d^2 + 4abcd = 1 - 4xyz + x xbar + y ybar + z zbar

are determined by interior lengths alone. Functions here are plain arithmetic,
so they accept floats as well as exact sympy numbers.
"""

from dataclasses import dataclass, fields
from typing import Dict, Tuple


@dataclass(frozen=True)
class Invariant4:
    f1: object
    f2: object
    f3: object
    f4: object

    def as_tuple(self) -> Tuple:
        return (self.f1, self.f2, self.f3, self.f4)

    def max_gap(self, other: "Invariant4") -> float:
        return max(abs(float(u) - float(v)) for u, v in zip(self.as_tuple(), other.as_tuple()))


@dataclass(frozen=True)
class FhsTraces:
    a: float
    b: float
    c: float
    d: float
    x: float
    xbar: float
    y: float
    ybar: float
    z: float
    zbar: float

    @property
    def boundary(self) -> Tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    @property
    def interior(self) -> Tuple[float, ...]:
        return (self.x, self.xbar, self.y, self.ybar, self.z, self.zbar)

    @property
    def non_geometric(self) -> Tuple[str, ...]:
        """Names of half-traces below 1, which no hyperbolic sphere realises."""
        return tuple(f.name for f in fields(self) if float(getattr(self, f.name)) < 1)


def boundary_invariants(a, b, c, d) -> Invariant4:
    return Invariant4(a * d + b * c, a * c + b * d, a * b + c * d, a * a + b * b + c * c + d * d + 4 * a * b * c * d)


def interior_invariants(x, xbar, y, ybar, z, zbar) -> Invariant4:
    return Invariant4(
        y * z - (x + xbar) / 2,
        x * y - (z + zbar) / 2,
        x * z - (y + ybar) / 2,
        1 - 4 * x * y * z + x * xbar + y * ybar + z * zbar,
    )


def bar_traces_from(a, b, c, d, x, y, z) -> Tuple:
    """(xbar, ybar, zbar) solving the first three trace equations."""
    f = boundary_invariants(a, b, c, d)
    xbar = 2 * (y * z - f.f1) - x
    zbar = 2 * (x * y - f.f2) - z
    ybar = 2 * (x * z - f.f3) - y
    return xbar, ybar, zbar


def surface_from(a, b, c, d, x, y, z) -> FhsTraces:
    """Complete half-trace data with bars from bar_traces_from."""
    xbar, ybar, zbar = bar_traces_from(a, b, c, d, x, y, z)
    return FhsTraces(a, b, c, d, x, xbar, y, ybar, z, zbar)


def check_basic_identity(traces: FhsTraces):
    """x + xbar + 2(ad + bc) - 2yz; zero on a consistent surface."""
    t = traces
    return t.x + t.xbar + 2 * (t.a * t.d + t.b * t.c) - 2 * t.y * t.z


def tracepoly_residual(a, b, c, d, x, y, z):
    """The cubic relation between x, y, z for fixed boundary; zero on a consistent surface."""
    return (
        a * a + b * b + c * c + d * d
        + x * x + y * y + z * z
        + 4 * a * b * c * d - 1 - 2 * x * y * z
        + 2 * x * (a * d + b * c)
        + 2 * y * (a * b + c * d)
        + 2 * z * (a * c + b * d)
    )


def check_consistency(traces: FhsTraces) -> Dict[str, float]:
    """Residuals of every trace equation; all near zero for a real surface."""
    t = traces
    left = boundary_invariants(*t.boundary)
    right = interior_invariants(*t.interior)
    report = {f"f{i}": float(u - v) for i, (u, v) in enumerate(zip(left.as_tuple(), right.as_tuple()), start=1)}
    report["basic_identity"] = float(check_basic_identity(t))
    report["tracepoly"] = float(tracepoly_residual(t.a, t.b, t.c, t.d, t.x, t.y, t.z))
    return report
