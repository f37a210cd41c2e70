"""
Searches for changes in the order of lengths.

- order reversals: two curves whose length order differs between two tori
- equal-trace parameters: t where two non-equivalent curves have equal trace on
  the symmetric torus (t, t, t), so that torus fails the Markoff isometry property
- equal-length points on a path of tori, by the intermediate value theorem
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, List, Optional, Tuple

import numpy as np
import sympy
from scipy import optimize

from src.curves.slopes import Slope, isometry_orbit, orbit_representative, slopes_by_complexity
from src.curves.traces import trace_of_slope, trace_polynomial
from src.errors import DomainError
from src.fricke.core import length_from_trace
from src.parallel import parallel_map
from src.spectrum.enumeration import enumerate_simple
from src.teich.space import FrickePoint

ISOLATION_EPS = sympy.Rational(1, 10 ** 30)


@dataclass(frozen=True)
class OrderReversal:
    alpha: Slope
    beta: Slope
    margin: float
    first_lengths: Tuple[float, float]
    second_lengths: Tuple[float, float]


@dataclass(frozen=True)
class EqualTraceCrossing:
    first: Slope
    second: Slope
    t: float
    t_exact: sympy.Rational
    residual: float
    equal_slopes: Tuple[Slope, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.equal_slopes)


@dataclass(frozen=True)
class PathCrossing:
    parameter: float
    point: FrickePoint
    residual: float


def _reverses(m1: FrickePoint, m2: FrickePoint, alpha: Slope, beta: Slope) -> bool:
    return (
        trace_of_slope(m1, alpha) < trace_of_slope(m1, beta)
        and trace_of_slope(m2, alpha) > trace_of_slope(m2, beta)
    )


def find_order_reversal(m1: FrickePoint, m2: FrickePoint, max_length: float) -> Optional[OrderReversal]:
    """
    Pair (alpha, beta) with l1(alpha) < l1(beta) but l2(alpha) > l2(beta).

    Candidates are the curves of length <= max_length on either torus. Among
    reversed pairs the one with the largest margin min(l1(beta) - l1(alpha),
    l2(alpha) - l2(beta)) is returned after re-checking it by direct evaluation.
    """
    candidates = sorted(
        {e.slope for e in enumerate_simple(m1, max_length)} | {e.slope for e in enumerate_simple(m2, max_length)}
    )
    if len(candidates) < 2:
        return None

    first = np.array([length_from_trace(trace_of_slope(m1, s)) for s in candidates])
    second = np.array([length_from_trace(trace_of_slope(m2, s)) for s in candidates])

    # margin[i, j] > 0 iff candidate i is shorter on m1 and longer on m2 than j
    margin = np.minimum(first[None, :] - first[:, None], second[:, None] - second[None, :])
    i, j = np.unravel_index(np.argmax(margin), margin.shape)
    if margin[i, j] <= 0:
        return None

    alpha, beta = candidates[i], candidates[j]
    if not _reverses(m1, m2, alpha, beta):
        return None
    return OrderReversal(
        alpha=alpha,
        beta=beta,
        margin=float(margin[i, j]),
        first_lengths=(float(first[i]), float(first[j])),
        second_lengths=(float(second[i]), float(second[j])),
    )


def equal_trace_crossings(
    s1: Slope,
    s2: Slope,
    t_range: Tuple[float, float] = (3.0, 10.0),
) -> List[EqualTraceCrossing]:
    """
    All t in t_range where P_s1(t) - P_s2(t) changes sign.

    Roots are isolated exactly over the integers and refined to width 1e-30;
    even-multiplicity roots (touching without crossing) are skipped.
    """
    if s2 in isometry_orbit(s1):
        raise DomainError(f"Slopes {s1} and {s2} lie in the same isometry orbit; their trace polynomials agree")
    difference = trace_polynomial(s1) - trace_polynomial(s2)
    if difference.is_zero:
        raise DomainError(f"Slopes {s1} and {s2} have identical trace polynomials")

    lo, hi = (sympy.Rational(v) for v in t_range)
    equal = tuple(sorted(isometry_orbit(s1) | isometry_orbit(s2)))

    crossings = []
    for (left, right), multiplicity in difference.intervals(eps=ISOLATION_EPS, inf=lo, sup=hi):
        if multiplicity % 2 == 0:
            continue
        t_exact = (left + right) / 2
        if not lo < t_exact < hi:
            continue
        residual = abs(difference.eval(t_exact))
        crossings.append(EqualTraceCrossing(s1, s2, float(t_exact), t_exact, float(residual), equal))
    return crossings


def find_equal_trace_parameter(
    s1: Slope,
    s2: Slope,
    t_range: Tuple[float, float] = (3.0, 10.0),
) -> Optional[EqualTraceCrossing]:
    """Smallest parameter in t_range where s1 and s2 have equal trace on (t, t, t), if any."""
    crossings = equal_trace_crossings(s1, s2, t_range)
    return min(crossings, key=lambda c: c.t_exact) if crossings else None


def _pair_crossings(task: Tuple[Slope, Slope, Tuple[float, float]]) -> List[EqualTraceCrossing]:
    s1, s2, t_range = task
    return equal_trace_crossings(s1, s2, t_range)


def scan_equal_trace_crossings(
    t_range: Tuple[float, float] = (3.0, 10.0),
    max_complexity: int = 12,
    jobs: int = 1,
) -> List[EqualTraceCrossing]:
    """Equal-trace parameters over all pairs of orbits with a member of |p|+|q| <= max_complexity."""
    representatives = sorted({orbit_representative(s) for s in slopes_by_complexity(max_complexity)})
    tasks = [(s1, s2, t_range) for s1, s2 in combinations(representatives, 2)]
    found = [c for batch in parallel_map(_pair_crossings, tasks, jobs) for c in batch]
    return sorted(found, key=lambda c: (c.t_exact, c.first, c.second))


def equal_length_on_path(
    path: Callable[[float], FrickePoint],
    alpha: Slope,
    beta: Slope,
    lo: float = 0.0,
    hi: float = 1.0,
    xtol: float = 1e-14,
) -> PathCrossing:
    """
    Parameter on a path of tori where alpha and beta have equal length.

    The trace difference must change sign between the endpoints.
    """

    def gap(s: float) -> float:
        point = path(s)
        return trace_of_slope(point, alpha) - trace_of_slope(point, beta)

    if gap(lo) * gap(hi) > 0:
        raise DomainError(f"No sign change of l({alpha}) - l({beta}) between {lo} and {hi}")
    parameter = optimize.bisect(gap, lo, hi, xtol=xtol)
    return PathCrossing(parameter=float(parameter), point=path(parameter), residual=abs(gap(parameter)))
