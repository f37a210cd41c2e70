"""
Recovering boundary half-traces (a, b, c, d) from the invariants f1..f4.

Symmetric families reduce to one-variable polynomials. For general data, the
first two equations are linear in (a, b) once (c, d) are fixed, leaving the
two polynomials P, Q in (c, d) from the remaining equations.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy
from scipy import optimize

from src.errors import DomainError
from src.fhs.traces import Invariant4, boundary_invariants

CASES = ("all-equal", "three-equal", "two-pairs")

C, D = sympy.symbols("c d")

Boundary = Tuple[float, float, float, float]


@dataclass(frozen=True)
class BoundarySolutions:
    case: str
    solutions: Tuple[Boundary, ...]
    residual: float
    consistent: bool
    best_effort: bool = False


def _floats(f: Invariant4) -> Tuple[float, float, float, float]:
    return tuple(float(v) for v in f.as_tuple())


def _verified(candidates, f: Invariant4, tol: float) -> Tuple[Boundary, ...]:
    target = _floats(f)
    scale = max(1.0, max(abs(v) for v in target))
    kept = []
    for candidate in candidates:
        got = boundary_invariants(*candidate).as_tuple()
        if max(abs(u - v) for u, v in zip(got, target)) <= tol * scale:
            kept.append(tuple(float(v) for v in candidate))
    return tuple(sorted(set(kept)))


def _positive_real_roots(coefficients: Sequence[float]) -> List[float]:
    roots = np.roots(coefficients)
    real = roots[np.abs(roots.imag) <= 1e-9 * np.maximum(1.0, np.abs(roots))].real
    return sorted(float(r) for r in real if r > 0)


def solve_boundary_symmetric(f: Invariant4, case: str, tol: float = 1e-9) -> BoundarySolutions:
    """
    All real boundaries of a symmetric shape with invariants f.

    Cases:
        all-equal:   (a, a, a, a), a = sqrt(f1/2); needs f1 = f2 = f3
        three-equal: (a, a, a, d), s = a^2 a positive root of
                     -4s^3 + (4 + 4 f1) s^2 - (2 f1 + f4) s + f1^2, d = (f1 - s)/a; needs f1 = f2 = f3
        two-pairs:   (a, c, c, a) with a + c = sqrt(f1 + f2), ac = f2/2; needs f2 = f3

    Inconsistent invariants give no solutions and a nonzero residual.
    """
    if case not in CASES:
        raise DomainError(f"Unknown symmetric case {case!r}, expected one of {CASES}")
    f1, f2, f3, f4 = _floats(f)

    if case == "all-equal":
        a = np.sqrt(f1 / 2.0) if f1 > 0 else None
        gaps = [abs(f1 - f2), abs(f1 - f3)]
        if a is not None:
            gaps.append(abs(4 * a ** 2 + 4 * a ** 4 - f4))
        candidates = [] if a is None else [(a, a, a, a)]

    elif case == "three-equal":
        gaps = [abs(f1 - f2), abs(f1 - f3)]
        candidates = []
        for s in _positive_real_roots([-4.0, 4.0 + 4.0 * f1, -(2.0 * f1 + f4), f1 * f1]):
            a = np.sqrt(s)
            candidates.append((a, a, a, (f1 - s) / a))

    else:
        gaps = [abs(f2 - f3)]
        # a and c are the roots of u^2 - sqrt(f1 + f2) u + f2/2
        total = f1 + f2
        disc = total - 2.0 * f2
        candidates = []
        if total >= 0 and disc >= -tol * max(1.0, total):
            root_sum, spread = np.sqrt(total), np.sqrt(max(disc, 0.0))
            for a in {(root_sum + spread) / 2.0, (root_sum - spread) / 2.0}:
                c = root_sum - a
                candidates.append((a, c, c, a))
        gaps.append(abs(2 * f1 + f2 * f2 - f4))

    residual = max(gaps)
    consistent = residual <= tol * max(1.0, f1, f2, f3, f4)
    solutions = _verified(candidates, f, tol) if consistent else ()
    return BoundarySolutions(case, solutions, float(residual), consistent)


def exact_rational(value) -> sympy.Rational:
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.Rational(value)


def boundary_polynomials(f: Invariant4) -> Tuple[sympy.Poly, sympy.Poly]:
    """
    P, Q in Q[c, d] whose common roots with c != +-d give the boundaries.

    After clearing (c^2 - d^2): P from f3 = ab + cd and Q from f4.
    """
    f1, f2, f3, f4 = (exact_rational(v) for v in f.as_tuple())
    u = f2 * C - f1 * D
    v = f1 * C - f2 * D
    w = C ** 2 - D ** 2
    p = (C * D - f3) * w ** 2 + u * v
    q = u ** 2 + v ** 2 + (C ** 2 + D ** 2) * w ** 2 + 4 * C * D * u * v - f4 * w ** 2
    return sympy.Poly(p, C, D, domain="QQ"), sympy.Poly(q, C, D, domain="QQ")


def recover_ab(f: Invariant4, c, d) -> Tuple:
    """(a, b) from ad + bc = f1 and ac + bd = f2."""
    f1, f2 = f.f1, f.f2
    w = c * c - d * d
    if w == 0:
        raise DomainError("Linear relations for (a, b) are singular when c = +-d")
    return (f2 * c - f1 * d) / w, (f1 * c - f2 * d) / w


def solve_boundary_general(
    f: Invariant4,
    seeds: Optional[Sequence[Tuple[float, float]]] = None,
    tol: float = 1e-9,
) -> BoundarySolutions:
    """
    Boundaries with c != +-d by a seeded hybrid Newton search on (P, Q).

    The search is best-effort: only solutions reached from a seed are found.
    Every returned boundary reproduces f to relative tol.
    """
    p, q = boundary_polynomials(f)
    system = sympy.lambdify((C, D), [p.as_expr(), q.as_expr()], "numpy")
    jacobian = sympy.lambdify(
        (C, D),
        [[p.diff(C).as_expr(), p.diff(D).as_expr()], [q.diff(C).as_expr(), q.diff(D).as_expr()]],
        "numpy",
    )
    if seeds is None:
        grid = np.linspace(1.0, max(2.0, np.sqrt(abs(float(f.f4)))), 8)
        seeds = list(product(grid, grid))

    numeric = Invariant4(*_floats(f))
    candidates = []
    for seed in seeds:
        result = optimize.root(
            lambda v: np.array(system(*v), dtype=float),
            np.asarray(seed, dtype=float),
            jac=lambda v: np.array(jacobian(*v), dtype=float),
            method="hybr",
        )
        if not result.success:
            continue
        c, d = (float(v) for v in result.x)
        if abs(c * c - d * d) <= 1e-6 * max(1.0, c * c):
            continue
        a, b = recover_ab(numeric, c, d)
        candidates.append(tuple(round(v, 12) for v in (a, b, c, d)))

    solutions = _verified(candidates, f, tol)
    return BoundarySolutions("general", solutions, 0.0, True, best_effort=True)
