import pytest
import sympy
from dataclasses import replace
from fractions import Fraction
from src.errors import DomainError
from src.fhs.counterexample import TARGET, counterexample_pair, counterexample_report, exact_invariants, x_star
from src.fhs.solvers import C, D, boundary_polynomials, recover_ab, solve_boundary_general, solve_boundary_symmetric
from src.fhs.traces import (
    bar_traces_from,
    boundary_invariants,
    check_basic_identity,
    check_consistency,
    interior_invariants,
    surface_from,
    tracepoly_residual,
)


def test_boundary_invariants():
    """All-ones boundary gives (2,2,2,8); (2,2,2,3) gives (10,10,10,117)."""
    assert boundary_invariants(1, 1, 1, 1).as_tuple() == (2, 2, 2, 8)
    assert boundary_invariants(2, 2, 2, 3).as_tuple() == (10, 10, 10, 117)


def test_tracepoly_all_ones():
    assert tracepoly_residual(1, 1, 1, 1, 1, 1, 1) == 20


def test_x_star_solves_cubic():
    """x* is the real root of 2x^3 - 3x^2 - 60x - 116."""
    x = x_star()
    assert x == pytest.approx(6.9843, abs=1e-3)
    assert abs(2 * x ** 3 - 3 * x ** 2 - 60 * x - 116) < 1e-9
    assert abs(tracepoly_residual(2, 2, 2, 3, x, x, x)) < 1e-9


def test_surface_from_is_consistent():
    """Bar traces from the first three equations satisfy every equation."""
    x = x_star()
    surface = surface_from(2.0, 2.0, 2.0, 3.0, x, x, x)

    residuals = check_consistency(surface)
    assert set(residuals) == {"f1", "f2", "f3", "f4", "basic_identity", "tracepoly"}
    for name, value in residuals.items():
        assert abs(value) < 1e-9, name

    left = boundary_invariants(*surface.boundary)
    right = interior_invariants(*surface.interior)
    assert left.max_gap(right) < 1e-9


def test_perturbed_bar_trace_breaks_identity():
    """Moving xbar by 0.1 moves the basic identity by 0.1."""
    x = x_star()
    surface = surface_from(2.0, 2.0, 2.0, 3.0, x, x, x)
    broken = replace(surface, xbar=surface.xbar + 0.1)

    assert check_consistency(broken)["basic_identity"] == pytest.approx(0.1, abs=1e-9)
    assert check_consistency(broken)["f1"] == pytest.approx(0.05, abs=1e-9)


def test_non_geometric_values_flagged():
    """Half-traces below 1 are named."""
    surface = surface_from(0.5, 2.0, 2.0, 2.0, 3.0, 3.0, 3.0)
    assert "a" in surface.non_geometric
    assert surface_from(2.0, 2.0, 2.0, 3.0, 7.0, 7.0, 7.0).non_geometric == ()


def test_counterexample_report():
    """Different boundaries with the same interior data."""
    report = counterexample_report()

    assert report.invariant_gap < 1e-9
    assert report.boundary_gap > 0.9
    assert report.first.boundary == (2.0, 2.0, 2.0, 3.0)
    for residuals in report.residuals:
        assert abs(residuals["tracepoly"]) < 1e-9
    assert report.first.x == report.second.x == pytest.approx(x_star())


def test_counterexample_exact_invariants():
    """Both boundaries give exactly (10, 10, 10, 117)."""
    first, second = exact_invariants()
    assert first.as_tuple() == TARGET.as_tuple()
    assert second.f1 == second.f2 == second.f3 == 10
    assert second.f4 == 117


def test_symmetric_all_equal():
    f = boundary_invariants(1.5, 1.5, 1.5, 1.5)
    result = solve_boundary_symmetric(f, "all-equal")

    assert result.consistent
    assert result.solutions == ((1.5, 1.5, 1.5, 1.5),)


def test_symmetric_all_equal_inconsistent():
    """(10,10,10,117) has no all-equal boundary: 4a^2 + 4a^4 = 120."""
    result = solve_boundary_symmetric(TARGET, "all-equal")

    assert not result.consistent
    assert result.solutions == ()
    assert result.residual == pytest.approx(3.0)


def test_symmetric_three_equal_finds_both_boundaries():
    """The cubic for (10,10,10,117) has roots a^2 = 4, 7/2 - sqrt 6 and 7/2 + sqrt 6."""
    result = solve_boundary_symmetric(TARGET, "three-equal")

    assert result.consistent
    assert len(result.solutions) == 3
    assert any(s == pytest.approx((2.0, 2.0, 2.0, 3.0), abs=1e-9) for s in result.solutions)

    r = (3.5 - 6 ** 0.5) ** 0.5
    s = (39.5 + 15 * 6 ** 0.5) ** 0.5
    assert any(sol == pytest.approx((r, r, r, s), rel=1e-9) for sol in result.solutions)


def test_symmetric_two_pairs():
    """(a, c, c, a) and its swap both solve f = (8.5, 7.5, 7.5, 73.25)."""
    f = boundary_invariants(1.5, 2.5, 2.5, 1.5)
    result = solve_boundary_symmetric(f, "two-pairs")

    assert result.consistent
    assert result.solutions == ((1.5, 2.5, 2.5, 1.5), (2.5, 1.5, 1.5, 2.5))


def test_symmetric_unknown_case():
    with pytest.raises(DomainError, match="Unknown symmetric case"):
        solve_boundary_symmetric(TARGET, "four-equal")


def test_recover_ab():
    f = boundary_invariants(Fraction(6, 5), Fraction(17, 10), Fraction(23, 10), Fraction(11, 10))
    assert recover_ab(f, Fraction(23, 10), Fraction(11, 10)) == (Fraction(6, 5), Fraction(17, 10))

    with pytest.raises(DomainError, match="singular"):
        recover_ab(f, 2, 2)


def test_general_solver_from_nearby_seed():
    """A seed at the true (c, d) recovers the whole boundary; the result is flagged best-effort."""
    boundary = (Fraction(6, 5), Fraction(17, 10), Fraction(23, 10), Fraction(11, 10))
    f = boundary_invariants(*boundary)
    result = solve_boundary_general(f, seeds=[(2.3, 1.1)])

    assert result.best_effort
    assert result.case == "general"
    assert any(s == pytest.approx(tuple(float(v) for v in boundary), abs=1e-8) for s in result.solutions)
    for solution in result.solutions:
        assert boundary_invariants(*solution).max_gap(f) < 1e-6


def test_bar_traces_and_basic_identity():
    """Bars solve the first three equations; the basic identity is the first one rearranged."""
    xbar, ybar, zbar = bar_traces_from(1, 1, 1, 1, 3, 3, 3)
    assert (xbar, ybar, zbar) == (11, 11, 11)

    surface = surface_from(1, 1, 1, 1, 3, 3, 3)
    assert check_basic_identity(surface) == 0


def test_counterexample_pair_shares_interior():
    first, second = counterexample_pair()
    assert first.interior == pytest.approx(second.interior, rel=1e-12)
    assert sorted(first.boundary) != pytest.approx(sorted(second.boundary), abs=0.5)


def test_boundary_polynomials_vanish_at_boundary():
    """P and Q vanish at the (c, d) of the boundary that produced f."""
    boundary = (Fraction(6, 5), Fraction(17, 10), Fraction(23, 10), Fraction(11, 10))
    p, q = boundary_polynomials(boundary_invariants(*boundary))
    at = {C: sympy.Rational(23, 10), D: sympy.Rational(11, 10)}

    assert p.as_expr().subs(at) == 0
    assert q.as_expr().subs(at) == 0
    assert p.total_degree() == 6
