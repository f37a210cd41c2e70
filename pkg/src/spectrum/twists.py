"""
Length growth under Dehn twists and the twist-counting ratio estimator.

Twisting a curve a0 about a curve a that it meets n times adds n copies of a per
twist, so the k-th image has length k*n*l(a) up to an error of at most l(a0).
Counting the twists of one curve that are shorter than the i-th twist of
another recovers the ratio of the two lengths.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import List

import numpy as np

from src.curves.slopes import Slope, dehn_twist, intersection_number
from src.curves.traces import trace_of_slope
from src.errors import DomainError
from src.fricke.core import length_from_trace
from src.teich.space import FrickePoint


@dataclass(frozen=True)
class RatioStep:
    i: int
    count: int
    estimate: Fraction
    target: float
    bound: float

    @property
    def error(self) -> float:
        return abs(float(self.estimate) - self.target)


def slope_length(point: FrickePoint, s: Slope) -> float:
    return length_from_trace(trace_of_slope(point, s))


def twist_sequence(point: FrickePoint, alpha: Slope, alpha0: Slope, k_max: int) -> List[float]:
    """
    Lengths of the twists of alpha0 about alpha for k = 0..k_max.

    Raises:
        DomainError: when alpha and alpha0 are disjoint or k_max < 0
    """
    if intersection_number(alpha, alpha0) == 0:
        raise DomainError(f"Curves {alpha} and {alpha0} are disjoint; twisting does nothing")
    if k_max < 0:
        raise DomainError(f"k_max must be nonnegative, got {k_max}")
    return [slope_length(point, dehn_twist(alpha0, alpha, k)) for k in range(k_max + 1)]


def twist_bound_gap(point: FrickePoint, alpha: Slope, alpha0: Slope, k: int) -> float:
    """|l(alpha_k) - k*int*l(alpha)| - l(alpha0); nonpositive when the twist bound holds."""
    n = intersection_number(alpha, alpha0)
    twisted = slope_length(point, dehn_twist(alpha0, alpha, k))
    return abs(twisted - k * n * slope_length(point, alpha)) - slope_length(point, alpha0)


def ratio_estimates(
    point: FrickePoint,
    alpha: Slope,
    beta: Slope,
    alpha0: Slope,
    beta0: Slope,
    i_max: int,
) -> List[RatioStep]:
    """
    Counting quotients #B_i / i for i = 1..i_max.

    B_i is the set of twists beta_k (k >= 1) of beta0 about beta with
    l(beta_k) <= l(alpha_i). The quotient tends to the ratio of
    int(alpha, alpha0)*l(alpha) to int(beta, beta0)*l(beta); each step carries
    the sandwich bound ((l(alpha0) + l(beta0)) / (int(beta, beta0) l(beta)) + 1) / i.
    """
    if i_max <= 0:
        raise DomainError(f"Iteration count must be positive, got {i_max}")
    n_alpha = intersection_number(alpha, alpha0)
    n_beta = intersection_number(beta, beta0)
    if n_alpha == 0 or n_beta == 0:
        raise DomainError("Companion curves must intersect the curves they are twisted about")

    alpha_lengths = np.array(twist_sequence(point, alpha, alpha0, i_max))
    len_alpha = slope_length(point, alpha)
    len_beta = slope_length(point, beta)
    len_alpha0 = alpha_lengths[0]
    len_beta0 = slope_length(point, beta0)

    # past this k every twist of beta0 is longer than alpha_{i_max}
    k_stop = ceil((alpha_lengths.max() + len_beta0) / (n_beta * len_beta)) + 1
    beta_lengths = np.array(twist_sequence(point, beta, beta0, k_stop)[1:])

    target = (n_alpha * len_alpha) / (n_beta * len_beta)
    slack = (len_alpha0 + len_beta0) / (n_beta * len_beta) + 1.0

    steps = []
    for i in range(1, i_max + 1):
        count = int(np.count_nonzero(beta_lengths <= alpha_lengths[i]))
        steps.append(RatioStep(i, count, Fraction(count, i), target, slack / i))
    return steps


def ratio_estimate(
    point: FrickePoint,
    alpha: Slope,
    beta: Slope,
    alpha0: Slope,
    beta0: Slope,
    i: int,
) -> Fraction:
    """The counting quotient #B_i / i."""
    return ratio_estimates(point, alpha, beta, alpha0, beta0, i)[-1].estimate
