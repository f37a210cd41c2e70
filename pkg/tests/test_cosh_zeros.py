import pytest
import numpy as np
from src.errors import DomainError
from src.fricke.zeros import (
    CoshSumSpec,
    count_positive_zeros,
    exponential_sum,
    log_sum_gap,
)


def test_no_subtracted_terms_has_no_zero():
    """With an empty subtrahend f >= 2 everywhere."""
    scan = count_positive_zeros(CoshSumSpec((2.0, 1.0)), t_max=20.0)
    assert scan.count == 0
    assert scan.roots == ()


def test_single_crossing():
    """f(0) = -1 and f grows without bound, so exactly one positive zero."""
    spec = CoshSumSpec((3.0, 1.0), (2.9, 2.9, 2.9))
    scan = count_positive_zeros(spec, t_max=30.0)

    assert scan.count == 1
    assert not scan.plateau
    root = scan.roots[0]
    assert abs(exponential_sum(spec, root)[0]) < 1e-6 * np.cosh(3.0 * root)


def test_positive_start_no_zero():
    """f(0) = 1 and f increasing: no zero."""
    scan = count_positive_zeros(CoshSumSpec((2.0, 1.0), (1.5,)), t_max=20.0)
    assert scan.count == 0


def test_power_family():
    """3^t + 1 - 2*2^t vanishes at t = 0 and t = 1; only the positive zero counts."""
    spec = CoshSumSpec((3.0, 1.0), (2.0, 2.0))
    scan = count_positive_zeros(spec, t_max=10.0, family="power")

    assert scan.count == 1
    assert scan.roots[0] == pytest.approx(1.0, abs=1e-9)


def test_large_t_does_not_overflow():
    """Scaling keeps the scan finite where cosh itself overflows."""
    spec = CoshSumSpec((5.0, 1.0), (4.0,))
    scan = count_positive_zeros(spec, t_max=500.0, grid_points=2000)
    assert scan.count == 0


def test_one_zero_law_random():
    """Random sums with a1 above every b_k never have two positive zeros."""
    np.random.seed(42)

    for _ in range(1000):
        a1 = np.random.uniform(0.5, 4.0)
        a2 = np.random.uniform(0.05, 4.0)
        k = np.random.randint(1, 5)
        b = tuple(np.random.uniform(0.05, a1 * 0.999, size=k))
        spec = CoshSumSpec((a1, a2), b)

        assert spec.dominates
        scan = count_positive_zeros(spec, t_max=40.0, grid_points=2000)
        assert scan.count <= 1, f"{spec} has {scan.count} zeros"


def test_invalid_specs():
    """Non-positive entries and wrong shapes are rejected."""
    with pytest.raises(DomainError, match="positive"):
        CoshSumSpec((1.0, 0.0))
    with pytest.raises(DomainError, match="exactly two"):
        CoshSumSpec((1.0, 2.0, 3.0))
    with pytest.raises(DomainError, match="t_max"):
        count_positive_zeros(CoshSumSpec((1.0, 1.0)), t_max=0.0)
    with pytest.raises(DomainError, match="Unknown family"):
        count_positive_zeros(CoshSumSpec((1.0, 1.0)), t_max=1.0, family="sinh")


def test_dominates_flag():
    """The one-zero hypothesis a1 > max(b)."""
    assert CoshSumSpec((3.0, 1.0), (2.0,)).dominates
    assert not CoshSumSpec((2.0, 1.0), (2.5,)).dominates


def test_log_sum_gap_nonnegative():
    """F vanishes at (1, 1) and is positive elsewhere on [1, inf)^n."""
    assert log_sum_gap([1.0, 1.0]) == pytest.approx(0.0, abs=1e-15)

    np.random.seed(42)
    for _ in range(200):
        values = np.random.uniform(1.0, 50.0, size=np.random.randint(2, 6))
        assert log_sum_gap(values) >= -1e-12

    with pytest.raises(DomainError):
        log_sum_gap([0.5, 2.0])
    with pytest.raises(DomainError):
        log_sum_gap([3.0])
