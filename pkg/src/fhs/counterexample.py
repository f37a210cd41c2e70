"""
Two four-holed spheres with the same interior data but different boundaries.

Boundary (2, 2, 2, 3) and boundary (r, r, r, s) with r^2 = 7/2 - sqrt(6),
s^2 = 79/2 + 15 sqrt(6) share the invariants (10, 10, 10, 117). With
x = y = z = x* the cubic relation becomes 2x^3 - 3x^2 - 60x - 116 = 0, whose real
root is x* = (1 + cbrt(293 - 92 sqrt 2) + cbrt(293 + 92 sqrt 2)) / 2.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

import sympy

from src.fhs.traces import FhsTraces, Invariant4, boundary_invariants, check_consistency, interior_invariants, surface_from

SQRT2 = sympy.sqrt(2)
SQRT6 = sympy.sqrt(6)

X_STAR = (1 + sympy.cbrt(293 - 92 * SQRT2) + sympy.cbrt(293 + 92 * SQRT2)) / 2
R_SQUARED = sympy.Rational(7, 2) - SQRT6
S_SQUARED = sympy.Rational(79, 2) + 15 * SQRT6
RS = sympy.Rational(13, 2) + SQRT6

TARGET = Invariant4(10, 10, 10, 117)


@dataclass(frozen=True)
class CounterexampleReport:
    first: FhsTraces
    second: FhsTraces
    invariants: Tuple[Invariant4, Invariant4]
    invariant_gap: float
    boundary_gap: float
    residuals: Tuple[Dict[str, float], Dict[str, float]]


def x_star() -> float:
    return float(X_STAR.evalf(30))


def exact_invariants() -> Tuple[Invariant4, Invariant4]:
    """
    Invariants of both boundaries in exact arithmetic.

    For (r, r, r, s) only r^2, s^2 and rs enter; rs is the positive square root of r^2 s^2.
    """
    if sympy.expand(RS ** 2 - R_SQUARED * S_SQUARED) != 0:
        raise ArithmeticError("rs is not the square root of r^2 s^2")
    first = boundary_invariants(*(sympy.Integer(v) for v in (2, 2, 2, 3)))
    f123 = sympy.expand(RS + R_SQUARED)
    f4 = sympy.expand(3 * R_SQUARED + S_SQUARED + 4 * R_SQUARED * RS)
    return first, Invariant4(f123, f123, f123, f4)


def counterexample_pair() -> Tuple[FhsTraces, FhsTraces]:
    x = x_star()
    r = float(sympy.sqrt(R_SQUARED).evalf(30))
    s = float(sympy.sqrt(S_SQUARED).evalf(30))
    return surface_from(2.0, 2.0, 2.0, 3.0, x, x, x), surface_from(r, r, r, s, x, x, x)


def counterexample_report() -> CounterexampleReport:
    first, second = counterexample_pair()
    invariants = (interior_invariants(*first.interior), interior_invariants(*second.interior))
    invariant_gap = max(inv.max_gap(TARGET) for inv in invariants)
    boundary_gap = max(abs(u - v) for u, v in zip(sorted(first.boundary), sorted(second.boundary)))
    return CounterexampleReport(
        first=first,
        second=second,
        invariants=invariants,
        invariant_gap=invariant_gap,
        boundary_gap=boundary_gap,
        residuals=(check_consistency(first), check_consistency(second)),
    )
