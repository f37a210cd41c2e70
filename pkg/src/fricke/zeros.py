"""
Positive-zero counting for exponential sums.

Two families share one scanner:

    cosh:  f(t) = cosh(a1 t) + cosh(a2 t) - sum_k cosh(b_k t)
    power: g(t) = a1**t + a2**t - sum_k b_k**t

With a1 > max(b_k) each has at most one strictly positive zero. The scanner
samples a uniform grid on (0, t_max], counts sign changes and refines each with
bisection. Values are scaled by the dominant exponential before sampling, which
leaves signs untouched and avoids overflow for large t.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from scipy import optimize

from src.errors import DomainError

FAMILIES = ("cosh", "power")


@dataclass(frozen=True)
class CoshSumSpec:
    """Rates (cosh family) or bases (power family) of an exponential sum."""

    a: Tuple[float, float]
    b: Tuple[float, ...] = ()

    def __post_init__(self):
        a = tuple(float(v) for v in self.a)
        b = tuple(float(v) for v in self.b)
        if len(a) != 2:
            raise DomainError(f"Expected exactly two positive terms, got {len(a)}")
        if any(not v > 0 for v in a + b):
            raise DomainError(f"All entries must be positive: a={a}, b={b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def dominates(self) -> bool:
        """True when a1 exceeds every b_k, the one-zero hypothesis."""
        return not self.b or self.a[0] > max(self.b)


@dataclass(frozen=True)
class ZeroScan:
    count: int
    roots: Tuple[float, ...]
    plateau: bool


def _scaled_values(spec: CoshSumSpec, family: str, t: np.ndarray) -> np.ndarray:
    t = np.atleast_1d(np.asarray(t, dtype=float))
    a = np.asarray(spec.a)
    b = np.asarray(spec.b)

    if family == "cosh":
        top = max(spec.a + spec.b)
        plus = 0.5 * (np.exp(np.outer(t, a - top)) + np.exp(np.outer(t, -a - top))).sum(axis=1)
        if b.size == 0:
            return plus
        minus = 0.5 * (np.exp(np.outer(t, b - top)) + np.exp(np.outer(t, -b - top))).sum(axis=1)
        return plus - minus

    log_top = np.log(max(spec.a + spec.b))
    plus = np.exp(np.outer(t, np.log(a) - log_top)).sum(axis=1)
    if b.size == 0:
        return plus
    minus = np.exp(np.outer(t, np.log(b) - log_top)).sum(axis=1)
    return plus - minus


def exponential_sum(spec: CoshSumSpec, t, family: str = "cosh") -> np.ndarray:
    """Unscaled f(t) (cosh family) or g(t) (power family)."""
    if family not in FAMILIES:
        raise DomainError(f"Unknown family: {family}. Available: {list(FAMILIES)}")
    t = np.atleast_1d(np.asarray(t, dtype=float))
    a = np.asarray(spec.a)
    b = np.asarray(spec.b)
    if family == "cosh":
        return np.cosh(np.outer(t, a)).sum(axis=1) - np.cosh(np.outer(t, b)).sum(axis=1)
    return np.power.outer(a, t).sum(axis=0) - np.power.outer(b, t).sum(axis=0)


def count_positive_zeros(
    spec: CoshSumSpec,
    t_max: float,
    tol: float = 1e-12,
    grid_points: int = 10_000,
    family: str = "cosh",
    plateau_tol: float = 1e-13,
) -> ZeroScan:
    """
    Count sign changes of an exponential sum on (0, t_max].

    Args:
        spec: Rates or bases of the sum
        t_max: Right end of the scanned interval
        tol: Bisection tolerance for each root
        grid_points: Number of uniform samples
        family: "cosh" or "power"
        plateau_tol: |f| below this on two consecutive samples marks a plateau

    Returns:
        ZeroScan with the count, the refined roots and the plateau flag.
        Sign changes across a plateau are not counted.
    """
    if not t_max > 0:
        raise DomainError(f"t_max must be positive, got {t_max}")
    if family not in FAMILIES:
        raise DomainError(f"Unknown family: {family}. Available: {list(FAMILIES)}")
    if grid_points < 2:
        raise DomainError(f"grid_points must be at least 2, got {grid_points}")

    grid = np.linspace(0.0, t_max, grid_points + 1)[1:]
    values = _scaled_values(spec, family, grid)
    near_zero = np.abs(values) < plateau_tol
    plateau = bool(np.any(near_zero[1:] & near_zero[:-1]))

    def scaled(s: float) -> float:
        return float(_scaled_values(spec, family, s)[0])

    roots = []
    prev_t, prev_sign, skipped = None, 0, 0
    for t, value, small in zip(grid, values, near_zero):
        if small:
            skipped += 1
            continue
        sign = 1 if value > 0 else -1
        if prev_sign and sign != prev_sign and skipped < 2:
            roots.append(optimize.bisect(scaled, prev_t, t, xtol=tol))
        prev_t, prev_sign, skipped = t, sign, 0

    return ZeroScan(count=len(roots), roots=tuple(float(r) for r in roots), plateau=plateau)


def log_sum_gap(values: Sequence[float]) -> float:
    """
    F(x) = (S-1) log(S-1) - sum x_k log x_k with S = sum x_k.

    Nonnegative whenever there are at least two entries and all are >= 1;
    this inequality is what forces the one-zero law.
    """
    x = np.asarray(values, dtype=float)
    if x.size < 2:
        raise DomainError(f"Need at least two entries, got {x.size}")
    if np.any(x < 1):
        raise DomainError(f"All entries must be >= 1, got min {x.min()}")
    s = x.sum() - 1.0
    return float(s * np.log(s) - np.sum(x * np.log(x)))
