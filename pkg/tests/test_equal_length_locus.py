import pytest
import numpy as np
from src.curves.slopes import Slope, intersection_number, slopes_by_complexity
from src.curves.traces import trace_of_slope
from src.errors import DomainError
from src.fricke.core import length_from_trace
from src.locus.equal_length import (
    companion_curves,
    find_length_coincidences,
    leaf_sign_changes,
    locus_leaf_solution,
    locus_point_on_leaf,
    trace_locus,
)
from src.teich.space import TeichSlice, boundary_length, validate

CUSPED = TeichSlice(0.0)
A, B = Slope(1, 0), Slope(0, 1)


def test_companions_of_basis_pair():
    """(1,0), (0,1) -> gamma = (1,-1), gamma' = (1,1)."""
    gamma, gamma_prime = companion_curves(A, B)

    assert gamma == Slope(1, -1)
    assert gamma_prime == Slope(1, 1)
    assert intersection_number(A, gamma) == intersection_number(B, gamma) == 1


def test_companions_reduce_to_primitive():
    """Differences and sums with a common factor are reduced."""
    assert set(companion_curves(Slope(1, 1), Slope(1, -1))) == {Slope(0, 1), Slope(1, 0)}
    assert set(companion_curves(Slope(1, 2), Slope(1, 0))) == {Slope(0, 1), Slope(1, 1)}


def test_companions_meet_both_curves_equally():
    """Each companion has the same intersection with alpha and beta."""
    slopes = slopes_by_complexity(6)
    for alpha in slopes[:12]:
        for beta in slopes:
            if alpha == beta:
                continue
            for companion in companion_curves(alpha, beta):
                assert intersection_number(alpha, companion) == intersection_number(beta, companion)

    with pytest.raises(DomainError, match="distinct"):
        companion_curves(A, A)


def test_locus_point_on_leaf_three():
    """On tr(1,-1) = 3 the locus point is (3,3,6)."""
    point = locus_point_on_leaf(CUSPED, A, B, 3.0)

    assert point.as_tuple() == pytest.approx((3.0, 3.0, 6.0), abs=1e-9)
    assert trace_of_slope(point, Slope(1, -1)) == pytest.approx(3.0, abs=1e-9)
    len_a = length_from_trace(trace_of_slope(point, A))
    len_b = length_from_trace(trace_of_slope(point, B))
    assert abs(len_a - len_b) < 1e-9


def test_locus_point_on_leaf_four():
    """On tr(1,-1) = 4 the locus point is (2 sqrt 2, 2 sqrt 2, 4)."""
    point = locus_point_on_leaf(CUSPED, A, B, 4.0)
    root8 = 2 * np.sqrt(2.0)
    assert point.as_tuple() == pytest.approx((root8, root8, 4.0), abs=1e-9)


def test_locus_point_symmetric_in_alpha_beta():
    """Swapping alpha and beta gives the same torus."""
    teich_slice = TeichSlice(0.9)
    alpha, beta = Slope(1, 2), Slope(2, -1)
    first = locus_point_on_leaf(teich_slice, alpha, beta, 3.7)
    second = locus_point_on_leaf(teich_slice, beta, alpha, 3.7)
    assert first.as_tuple() == pytest.approx(second.as_tuple(), rel=1e-9)


def test_locus_solution_residual_and_ratio():
    """The leaf solution reports its residual and the companion ratio."""
    solution = locus_leaf_solution(CUSPED, Slope(1, 2), Slope(1, 3), 5.0)
    assert solution.residual < 1e-9
    assert solution.companion_ratio > 0
    assert solution.x_of_gamma == 5.0


def test_single_root_per_leaf():
    """l(alpha) - l(beta) is monotone along a leaf, so it changes sign at most once."""
    for x in (2.1, 3.0, 7.5, 30.0):
        assert leaf_sign_changes(CUSPED, A, B, x) == 1
        assert leaf_sign_changes(TeichSlice(1.5), Slope(1, 1), Slope(2, -1), x) <= 1


def test_trace_locus_grid():
    """Over 20 leaves every point has x = y and equal lengths."""
    polyline = trace_locus(CUSPED, A, B)

    assert len(polyline.points) == 20
    assert polyline.gamma == Slope(1, -1)
    assert polyline.gamma_prime == Slope(1, 1)
    for p in polyline.points:
        assert abs(p.point.x - p.point.y) < 1e-9
        assert p.residual < 1e-9
    assert polyline.ratio_shrinks_toward_boundary


def test_trace_locus_single_leaf():
    """A one-leaf grid gives the leaf's point."""
    polyline = trace_locus(CUSPED, A, B, [3.0])
    assert len(polyline.points) == 1
    assert polyline.points[0].point == locus_point_on_leaf(CUSPED, A, B, 3.0)


def test_trace_locus_parallel_matches_serial():
    grid = [2.5, 3.0, 4.0, 6.0]
    serial = trace_locus(TeichSlice(0.4), Slope(1, 2), Slope(1, 0), grid)
    parallel = trace_locus(TeichSlice(0.4), Slope(1, 2), Slope(1, 0), grid, jobs=2)
    assert serial.points == parallel.points


def test_trace_locus_grid_errors():
    """Empty, non-monotone and sub-2 grids are rejected."""
    with pytest.raises(DomainError, match="empty"):
        trace_locus(CUSPED, A, B, [])
    with pytest.raises(DomainError, match="monotone"):
        trace_locus(CUSPED, A, B, [3.0, 5.0, 4.0])
    with pytest.raises(DomainError, match="exceed 2"):
        trace_locus(CUSPED, A, B, [2.0, 3.0])


def test_length_coincidences_are_sign_changes():
    """Reported segments bracket a crossing of the third curve with alpha."""
    polyline = trace_locus(CUSPED, A, B, np.geomspace(2.05, 50.0, 40))
    hits = find_length_coincidences(polyline, slopes_by_complexity(4))

    for hit in hits:
        assert hit.slope not in (A, B)
        left = polyline.points[hit.index].point
        right = polyline.points[hit.index + 1].point
        before = trace_of_slope(left, hit.slope) - trace_of_slope(left, A)
        after = trace_of_slope(right, hit.slope) - trace_of_slope(right, A)
        assert before * after < 0


def test_locus_near_boundary_leaf():
    """On tr(1,-1) = 2.01 the locus point is (20.1, 20.1, 402) and gamma' is long."""
    polyline = trace_locus(CUSPED, A, B, [2.01])
    point = polyline.points[0].point

    assert point.as_tuple() == pytest.approx((20.1, 20.1, 402.0), rel=1e-9)
    assert trace_of_slope(point, polyline.gamma_prime) > 100
    assert polyline.points[0].residual < 1e-9


def test_locus_points_keep_boundary_length():
    """Points in the standard marking stay valid and keep the slice's boundary length."""
    teich_slice = TeichSlice(0.7)
    for p in trace_locus(teich_slice, Slope(1, 2), Slope(1, 0), [2.5, 3.0, 4.0, 6.0]).points:
        assert validate(p.point)[0]
        assert boundary_length(p.point) == pytest.approx(0.7, abs=1e-10)

    for p in trace_locus(CUSPED, A, B).points:
        assert boundary_length(p.point) == 0.0


def test_locus_boundary_length_drift_with_large_traces():
    """Near the end of the leaf family the re-marked traces are large; drift tracks xyz rounding."""
    polyline = trace_locus(TeichSlice(0.7), Slope(1, 2), Slope(3, -1), [2.1, 3.0, 8.0, 40.0])

    for p in polyline.points:
        x, y, z = p.point.as_tuple()
        slack = max(1e-10, 256 * np.finfo(float).eps * max(1.0, x * y * z) / np.sinh(0.35))
        assert validate(p.point)[0]
        assert abs(boundary_length(p.point) - 0.7) < slack
