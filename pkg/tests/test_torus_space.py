import pytest
import numpy as np
from src.curves.slopes import Slope
from src.errors import DomainError
from src.teich.space import (
    FrickePoint,
    TeichSlice,
    boundary_length,
    change_basis,
    cusped_diagonal_point,
    leaf_minimum,
    leaf_point,
    length_vector,
    projective_gap,
    symmetric_family,
    validate,
)


def random_point(rng: np.random.Generator) -> FrickePoint:
    return leaf_point(
        TeichSlice(rng.uniform(0.0, 3.0)),
        rng.uniform(2.2, 8.0),
        rng.uniform(-2.0, 2.0),
    )


def test_validate_cusped_points():
    """(3,3,3) and (3,3,6) satisfy R = 0."""
    ok, reason = validate(FrickePoint(3, 3, 3))
    assert ok
    assert "cusped" in reason

    ok, reason = validate(FrickePoint(3, 3, 6))
    assert ok
    assert "cusped" in reason


def test_validate_rejects_bad_points():
    """Positive relation, traces <= 2 and non-finite values are invalid."""
    ok, reason = validate(FrickePoint(3, 3, 2.9))
    assert not ok
    assert "positive" in reason

    ok, reason = validate(FrickePoint(3, 3, 2.0))
    assert not ok
    assert "exceed 2" in reason

    ok, _ = validate(FrickePoint(3, float("nan"), 3))
    assert not ok


def test_boundary_length():
    """Cusps have length 0; (6,6,6) has boundary trace 110."""
    assert boundary_length(FrickePoint(3, 3, 3)) == 0.0
    assert boundary_length(FrickePoint(3, 3, 6)) == 0.0
    assert boundary_length(FrickePoint(6, 6, 6)) == pytest.approx(2 * np.arccosh(55.0), rel=1e-12)

    with pytest.raises(DomainError, match="Invalid point"):
        boundary_length(FrickePoint(3, 3, 2.9))


def test_symmetric_family():
    """t = 3 is the modular torus; t = 4 has boundary length 2*arccosh(9)."""
    assert symmetric_family(3.0) == FrickePoint(3, 3, 3)
    assert boundary_length(symmetric_family(4.0)) == pytest.approx(2 * np.arccosh(9.0), rel=1e-12)
    assert boundary_length(symmetric_family(3.5)) > 0

    with pytest.raises(DomainError, match="t >= 3"):
        symmetric_family(2.5)


def test_teich_slice_relation():
    """R = 2 - 2cosh(eps/2); slices are recovered from points."""
    assert TeichSlice(0.0).relation == 0.0
    assert TeichSlice.of_point(FrickePoint(4, 4, 4)).relation == pytest.approx(-16.0, rel=1e-12)

    with pytest.raises(DomainError):
        TeichSlice(-1.0)


def test_leaf_point_center():
    """theta = 0 gives y = z; on the cusped leaf x = 3 this is the modular torus."""
    point = leaf_point(TeichSlice(0.0), 3.0, 0.0)
    assert point.as_tuple() == pytest.approx((3.0, 3.0, 3.0), rel=1e-14)

    point = leaf_point(TeichSlice(1.3), 5.0, 0.0)
    assert point.y == pytest.approx(point.z, rel=1e-14)


def test_leaf_point_stays_on_slice():
    """Every leaf point has the slice's relation value."""
    rng = np.random.default_rng(42)
    for _ in range(200):
        teich_slice = TeichSlice(rng.uniform(0.0, 4.0))
        x = rng.uniform(2.01, 20.0)
        point = leaf_point(teich_slice, x, rng.uniform(-5.0, 5.0))

        scale = max(1.0, point.x * point.y * point.z)
        assert abs(point.relation - teich_slice.relation) < 1e-12 * scale
        assert validate(point)[0]


def test_leaf_point_reaches_twist_image():
    """On the cusped leaf x = 3 the point (3, 6, 3) is reached at some theta."""
    teich_slice = TeichSlice(0.0)
    grid = np.linspace(0.0, 3.0, 3001)
    ys = np.array([leaf_point(teich_slice, 3.0, theta).y for theta in grid])
    theta = grid[np.argmin(np.abs(ys - 6.0))]

    point = leaf_point(teich_slice, 3.0, theta)
    assert point.y == pytest.approx(6.0, abs=1e-2)
    assert point.z == pytest.approx(3.0, abs=1e-2)
    assert abs(point.relation) < 1e-12 * point.x * point.y * point.z


def test_leaf_minimum():
    """Smallest y along a leaf."""
    teich_slice = TeichSlice(0.7)
    thetas = np.linspace(-4.0, 4.0, 8001)
    ys = [leaf_point(teich_slice, 4.0, t).y for t in thetas]

    assert min(ys) == pytest.approx(leaf_minimum(teich_slice, 4.0), rel=1e-6)
    assert min(ys) >= leaf_minimum(teich_slice, 4.0) * (1 - 1e-12)


def test_leaf_point_rejects_small_trace():
    with pytest.raises(DomainError, match="exceed 2"):
        leaf_point(TeichSlice(0.0), 2.0, 0.0)


def test_change_basis():
    """Re-marking keeps the relation, hence the boundary length."""
    modular = FrickePoint(3, 3, 3)
    assert change_basis(modular, Slope(1, 0), Slope(0, 1)) == modular
    assert change_basis(modular, Slope(0, 1), Slope(1, 0)) == modular

    point = change_basis(FrickePoint(3, 3, 6), Slope(1, 1), Slope(0, 1))
    assert point.as_tuple() == pytest.approx((6.0, 3.0, 15.0))
    assert point.relation == pytest.approx(0.0, abs=1e-9)

    with pytest.raises(DomainError, match="basis"):
        change_basis(modular, Slope(1, 0), Slope(1, 2))


def test_cusped_diagonal_point():
    """m = 2, 1 and 2 - sqrt(2) give (3,3,6), (3,3,3) and (4,4,8-sqrt(32))."""
    assert cusped_diagonal_point(2.0).as_tuple() == pytest.approx((3.0, 3.0, 6.0))
    assert cusped_diagonal_point(1.0).as_tuple() == pytest.approx((3.0, 3.0, 3.0))
    assert cusped_diagonal_point(2.0 - np.sqrt(2.0)).as_tuple() == pytest.approx((4.0, 4.0, 8.0 - np.sqrt(32.0)))

    for m in np.linspace(0.6, 2.0, 15):
        point = cusped_diagonal_point(m)
        assert abs(point.relation) < 1e-9


def test_length_vector_projective_injectivity():
    """Distinct random tori have non-proportional 4-length vectors."""
    rng = np.random.default_rng(42)

    for _ in range(1000):
        first, second = random_point(rng), random_point(rng)
        assert projective_gap(first, second) > 1e-6

    modular = FrickePoint(3, 3, 3)
    assert projective_gap(modular, modular) == 0.0
    assert list(length_vector(modular)) == pytest.approx([2 * np.arccosh(1.5)] * 3 + [2 * np.arccosh(3.0)])


def conserved_length_slack(point: FrickePoint, epsilon: float) -> float:
    """R carries rounding of order |xyz| ulp; d(eps)/dR = 1/sinh(eps/2)."""
    scale = max(1.0, point.x * point.y * point.z)
    return max(1e-10, 256 * np.finfo(float).eps * scale / np.sinh(epsilon / 2.0))


def test_change_basis_keeps_boundary_length_small_traces():
    """Re-marking by small slopes keeps the boundary length to 1e-10."""
    teich_slice = TeichSlice(0.7)
    point = leaf_point(teich_slice, 3.0, 0.2)

    for gamma, gamma_prime in [(Slope(1, 1), Slope(0, 1)), (Slope(0, 1), Slope(1, 0)), (Slope(2, 1), Slope(1, 1))]:
        remarked = change_basis(point, gamma, gamma_prime)
        assert validate(remarked)[0]
        assert boundary_length(remarked) == pytest.approx(0.7, abs=1e-10)


def test_change_basis_keeps_boundary_length_random():
    """Random points and bases: drift stays within the rounding of R."""
    rng = np.random.default_rng(5)
    bases = [(Slope(1, 1), Slope(0, 1)), (Slope(2, 1), Slope(1, 1)), (Slope(1, -1), Slope(1, 0))]

    for _ in range(100):
        epsilon = rng.uniform(0.5, 3.0)
        point = leaf_point(TeichSlice(epsilon), rng.uniform(2.2, 6.0), rng.uniform(-1.0, 1.0))
        gamma, gamma_prime = bases[rng.integers(len(bases))]

        remarked = change_basis(point, gamma, gamma_prime)
        assert validate(remarked)[0]
        assert abs(boundary_length(remarked) - epsilon) < conserved_length_slack(remarked, epsilon)


def test_change_basis_large_traces_drift():
    """(5,7), (2,3) pushes traces up and the drift grows with xyz, not beyond it."""
    point = leaf_point(TeichSlice(0.7), 3.0, 0.0)
    remarked = change_basis(point, Slope(5, 7), Slope(2, 3))

    assert remarked.x * remarked.y * remarked.z > 1e6
    assert abs(boundary_length(remarked) - 0.7) < conserved_length_slack(remarked, 0.7)
