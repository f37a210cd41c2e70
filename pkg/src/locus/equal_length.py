"""
Equal-length loci E(alpha, beta) inside a slice of fixed boundary length.

The classes [alpha] - [beta] and [alpha] + [beta] (made primitive) are the two
companions gamma, gamma'. Both meet alpha and beta equally often, so on each
leaf tr(gamma) = x the difference l(alpha) - l(beta) is strictly monotone in the
leaf coordinate theta and vanishes exactly once. Tracing that root across a grid
of leaves gives a polyline approximating the locus.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from src.curves.slopes import Slope, complement, det, intersection_number
from src.curves.traces import trace_of_slope
from src.errors import DomainError, SearchFailure
from src.fricke.core import length_from_trace
from src.parallel import parallel_map
from src.teich.space import FrickePoint, TeichSlice, leaf_point

DEFAULT_THETA_CAP = 32.0
DEFAULT_GRID = tuple(np.geomspace(2.05, 50.0, 20))


@dataclass(frozen=True)
class LocusPoint:
    x_of_gamma: float
    theta: float
    point: FrickePoint
    residual: float
    companion_ratio: float


@dataclass(frozen=True)
class LocusPolyline:
    teich_slice: TeichSlice
    alpha: Slope
    beta: Slope
    gamma: Slope
    gamma_prime: Slope
    points: Tuple[LocusPoint, ...]

    @property
    def ratios(self) -> np.ndarray:
        return np.array([p.companion_ratio for p in self.points])

    @property
    def ratio_shrinks_toward_boundary(self) -> bool:
        """True when l(gamma)/l(gamma') decreases as tr(gamma) moves toward 2."""
        order = np.argsort([p.x_of_gamma for p in self.points])
        return bool(np.all(np.diff(self.ratios[order]) >= 0))


@dataclass(frozen=True)
class LengthCoincidence:
    slope: Slope
    index: int
    x_left: float
    x_right: float


def _lex_positive(v: Tuple[int, int]) -> Tuple[int, int]:
    return v if v[0] > 0 or (v[0] == 0 and v[1] > 0) else (-v[0], -v[1])


def companion_curves(alpha: Slope, beta: Slope) -> Tuple[Slope, Slope]:
    """
    The companions of (alpha, beta): primitive parts of [alpha] - [beta] and [alpha] + [beta].

    Both classes are oriented lexicographically positive and gamma is the
    smaller of the two.
    """
    if alpha == beta:
        raise DomainError(f"Companions need distinct curves, got {alpha} twice")
    a, b = alpha.vector, beta.vector
    diff = Slope.reduced(a[0] - b[0], a[1] - b[1])
    total = Slope.reduced(a[0] + b[0], a[1] + b[1])
    first, second = sorted([diff, total], key=lambda s: _lex_positive(s.vector))

    for companion in (first, second):
        if intersection_number(alpha, companion) != intersection_number(beta, companion):
            raise AssertionError(f"Companion {companion} meets {alpha} and {beta} unequally")
    return first, second


def _in_basis(v: Tuple[int, int], e1: Tuple[int, int], e2: Tuple[int, int]) -> Slope:
    d = det(e1, e2)
    return Slope(det(v, e2) // d, det(e1, v) // d)


class _LeafFrame:
    """Trace evaluation on the leaf tr(gamma) = x, marked by the basis (gamma, complement)."""

    def __init__(self, teich_slice: TeichSlice, alpha: Slope, beta: Slope, x_of_gamma: float):
        if not x_of_gamma > 2:
            raise DomainError(f"Leaf trace must exceed 2, got {x_of_gamma}")
        self.teich_slice = teich_slice
        self.x = float(x_of_gamma)
        self.gamma, self.gamma_prime = companion_curves(alpha, beta)
        e1, e2 = self.gamma.vector, complement(self.gamma).vector
        self._basis = (e1, e2)
        self.alpha = _in_basis(alpha.vector, e1, e2)
        self.beta = _in_basis(beta.vector, e1, e2)
        self.gamma_prime_local = _in_basis(self.gamma_prime.vector, e1, e2)
        self._standard = tuple(_in_basis(v, e1, e2) for v in ((1, 0), (0, 1), (1, 1)))

    def local_point(self, theta: float) -> FrickePoint:
        return leaf_point(self.teich_slice, self.x, theta)

    def gap(self, theta: float) -> float:
        local = self.local_point(theta)
        return trace_of_slope(local, self.alpha) - trace_of_slope(local, self.beta)

    def standard_point(self, theta: float) -> FrickePoint:
        local = self.local_point(theta)
        return FrickePoint(*(trace_of_slope(local, s) for s in self._standard))

    def solve(self, tol: float, theta_cap: float) -> LocusPoint:
        lo, hi = -1.0, 1.0
        while self.gap(lo) * self.gap(hi) > 0:
            lo, hi = 2.0 * lo, 2.0 * hi
            if hi > theta_cap:
                raise SearchFailure(f"No sign change of l(alpha) - l(beta) for |theta| <= {theta_cap} on leaf x={self.x}")

        theta = float(optimize.bisect(self.gap, lo, hi, xtol=1e-15))
        local = self.local_point(theta)
        len_alpha = length_from_trace(trace_of_slope(local, self.alpha))
        len_beta = length_from_trace(trace_of_slope(local, self.beta))
        residual = abs(len_alpha - len_beta)
        if residual >= tol:
            raise SearchFailure(f"Leaf x={self.x}: residual {residual:.3g} exceeds tolerance {tol:.3g}")

        ratio = length_from_trace(self.x) / length_from_trace(trace_of_slope(local, self.gamma_prime_local))
        return LocusPoint(self.x, theta, self.standard_point(theta), residual, ratio)


def locus_leaf_solution(
    teich_slice: TeichSlice,
    alpha: Slope,
    beta: Slope,
    x_of_gamma: float,
    tol: float = 1e-9,
    theta_cap: float = DEFAULT_THETA_CAP,
) -> LocusPoint:
    return _LeafFrame(teich_slice, alpha, beta, x_of_gamma).solve(tol, theta_cap)


def locus_point_on_leaf(
    teich_slice: TeichSlice,
    alpha: Slope,
    beta: Slope,
    x_of_gamma: float,
    tol: float = 1e-9,
    theta_cap: float = DEFAULT_THETA_CAP,
) -> FrickePoint:
    """
    The torus on the leaf tr(gamma) = x_of_gamma where alpha and beta have equal length.

    The theta bracket starts at [-1, 1] and doubles until the length difference
    changes sign, then bisection pins the root. The point is returned in the
    standard marking.

    Raises:
        SearchFailure: no bracket within theta_cap, or residual >= tol
    """
    return locus_leaf_solution(teich_slice, alpha, beta, x_of_gamma, tol, theta_cap).point


def leaf_sign_changes(
    teich_slice: TeichSlice,
    alpha: Slope,
    beta: Slope,
    x_of_gamma: float,
    theta_grid: Optional[Sequence[float]] = None,
) -> int:
    """Number of sign changes of l(alpha) - l(beta) over a theta grid on one leaf."""
    frame = _LeafFrame(teich_slice, alpha, beta, x_of_gamma)
    grid = np.linspace(-8.0, 8.0, 200) if theta_grid is None else np.asarray(theta_grid, dtype=float)
    signs = np.sign([frame.gap(theta) for theta in grid])
    signs = signs[signs != 0]
    return int(np.count_nonzero(np.diff(signs)))


def _solve_leaf(task) -> LocusPoint:
    teich_slice, alpha, beta, x, tol, theta_cap = task
    try:
        return locus_leaf_solution(teich_slice, alpha, beta, x, tol, theta_cap)
    except SearchFailure as exc:
        raise SearchFailure(f"Locus failed at grid value {x}: {exc}") from exc


def trace_locus(
    teich_slice: TeichSlice,
    alpha: Slope,
    beta: Slope,
    x_grid: Optional[Sequence[float]] = None,
    tol: float = 1e-9,
    theta_cap: float = DEFAULT_THETA_CAP,
    jobs: int = 1,
) -> LocusPolyline:
    """
    One locus point per leaf of x_grid, in grid order.

    Args:
        teich_slice: Boundary-length slice
        alpha, beta: Distinct slopes
        x_grid: Strictly monotone traces of gamma, all > 2 (default: geometric grid 2.05..50)
        tol: Bound on |l(alpha) - l(beta)| at every point
        theta_cap: Largest |theta| tried when bracketing
        jobs: Worker processes, one leaf per task
    """
    grid = np.asarray(DEFAULT_GRID if x_grid is None else x_grid, dtype=float)
    if grid.size == 0:
        raise DomainError("Locus grid is empty")
    if not np.all(grid > 2):
        raise DomainError(f"Grid values must exceed 2, got min {grid.min()}")
    steps = np.diff(grid)
    if not (np.all(steps > 0) or np.all(steps < 0)):
        raise DomainError("Grid must be strictly monotone")

    gamma, gamma_prime = companion_curves(alpha, beta)
    tasks = [(teich_slice, alpha, beta, float(x), tol, theta_cap) for x in grid]
    points = parallel_map(_solve_leaf, tasks, jobs)
    return LocusPolyline(teich_slice, alpha, beta, gamma, gamma_prime, tuple(points))


def find_length_coincidences(
    polyline: LocusPolyline,
    candidates: Sequence[Slope],
) -> List[LengthCoincidence]:
    """
    Places along the polyline where a third curve's length crosses l(alpha).

    Each hit is a segment between consecutive locus points on which three
    curves have (approximately) equal length somewhere; nothing more is claimed.
    """
    hits = []
    for s in candidates:
        if s in (polyline.alpha, polyline.beta):
            continue
        gaps = np.array(
            [trace_of_slope(p.point, s) - trace_of_slope(p.point, polyline.alpha) for p in polyline.points]
        )
        for i in np.flatnonzero(np.sign(gaps[:-1]) * np.sign(gaps[1:]) < 0):
            left, right = polyline.points[i], polyline.points[i + 1]
            hits.append(LengthCoincidence(s, int(i), left.x_of_gamma, right.x_of_gamma))
    return hits
