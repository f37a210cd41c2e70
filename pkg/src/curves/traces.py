"""
Traces of simple closed curves by Farey recursion.

For neighbouring classes v, w (|det| = 1) the trace relation

    tr(v + w) = tr(v) * tr(w) - tr(v - w)

determines every simple curve's trace from x = tr(1,0), y = tr(0,1) and
z = tr(1,1). The recursion walks the Stern-Brocot path to the slope carrying
the traces of the current pair and its mediant, so each node is computed once.
Slopes with p < 0 are handled on the reflected triple (x, y, xy - z).

The same walk over integer polynomials gives the trace polynomials of the
symmetric family (t, t, t).
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
import sympy

from src.curves.slopes import Slope, farey_descent

T = sympy.Symbol("t")


def _walk(x, y, z, p: int, q: int):
    if (p, q) == (1, 0):
        return x
    if p == 0:
        return y
    tu, tv, tm = x, y, z
    for move in farey_descent(p, q):
        if move == "L":
            tu, tv, tm = tu, tm, tu * tm - tv
        else:
            tu, tv, tm = tm, tv, tm * tv - tu
    return tm


def trace_from_seeds(x, y, z, s: Slope):
    """Trace of s given the seed traces; works over floats, ints or polynomials."""
    if s.p < 0:
        return _walk(x, y, x * y - z, -s.p, s.q)
    return _walk(x, y, z, s.p, s.q)


def trace_of_slope(point, s: Slope) -> float:
    """
    Trace of the geodesic in class s on a marked torus.

    Args:
        point: Any object with trace attributes x, y, z (a FrickePoint)
        s: Primitive slope

    Returns:
        The trace as a float
    """
    return float(trace_from_seeds(float(point.x), float(point.y), float(point.z), s))


@dataclass(frozen=True)
class TracePolynomial:
    """Integer polynomial in t, coefficients in ascending degree."""

    coefficients: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def as_poly(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coefficients)), T, domain="ZZ")

    def evaluate(self, t):
        """Value at t; floats and arrays go through numpy, exact numbers through sympy."""
        if isinstance(t, (float, np.floating, np.ndarray)):
            return np.polynomial.polynomial.polyval(t, [float(c) for c in self.coefficients])
        return self.as_poly().eval(t)

    def __sub__(self, other: "TracePolynomial") -> sympy.Poly:
        return self.as_poly() - other.as_poly()

    def __str__(self) -> str:
        return str(self.as_poly().as_expr())


def trace_polynomial(s: Slope) -> TracePolynomial:
    """Trace of s on the symmetric point (t, t, t) as an exact integer polynomial."""
    t = sympy.Poly(T, T, domain="ZZ")
    poly = trace_from_seeds(t, t, t, s)
    coefficients = tuple(int(c) for c in reversed(poly.all_coeffs()))
    return TracePolynomial(coefficients)
