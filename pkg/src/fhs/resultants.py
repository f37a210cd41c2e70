"""
Resultants of the boundary polynomials P and Q.

Eliminating c (or d) leaves a polynomial of degree 28 in the other variable
with leading coefficient 256 (f1 - f2)^4 (f1 + f2)^4, so whenever f1 != f2 only
finitely many boundaries share the same interior data.
"""

from dataclasses import dataclass

import sympy
from sympy.polys.subresultants_qq_zz import sylvester

from src.errors import DegenerateCaseError, DomainError
from src.fhs.solvers import C, D, exact_rational, boundary_polynomials
from src.fhs.traces import Invariant4

EXPECTED_DEGREE = 28
METHODS = ("subresultant", "sylvester")


@dataclass(frozen=True)
class ResultantReport:
    r_c: sympy.Poly
    r_d: sympy.Poly
    expected_leading: sympy.Rational

    @property
    def degree_c(self) -> int:
        return self.r_c.degree()

    @property
    def degree_d(self) -> int:
        return self.r_d.degree()

    @property
    def leading_c(self) -> sympy.Rational:
        return self.r_c.LC()

    @property
    def leading_d(self) -> sympy.Rational:
        return self.r_d.LC()

    @property
    def ok(self) -> bool:
        return (
            self.degree_c == EXPECTED_DEGREE
            and self.degree_d == EXPECTED_DEGREE
            and self.leading_c == self.expected_leading
            and self.leading_d == self.expected_leading
        )


def expected_leading_coefficient(f: Invariant4) -> sympy.Rational:
    f1, f2 = exact_rational(f.f1), exact_rational(f.f2)
    return 256 * (f1 - f2) ** 4 * (f1 + f2) ** 4


def _eliminate(p: sympy.Poly, q: sympy.Poly, var, keep, method: str) -> sympy.Poly:
    if method == "sylvester":
        matrix = sylvester(p.as_expr(), q.as_expr(), var, 1)
        return sympy.Poly(sympy.expand(matrix.det(method="bareiss")), keep, domain="QQ")
    p_var = sympy.Poly(p.as_expr(), var, keep, domain="QQ")
    q_var = sympy.Poly(q.as_expr(), var, keep, domain="QQ")
    return sympy.Poly(p_var.resultant(q_var).as_expr(), keep, domain="QQ")


def resultant_check(f: Invariant4, method: str = "subresultant") -> ResultantReport:
    """
    Exact resultants R_c(d) = Res_c(P, Q) and R_d(c) = Res_d(P, Q).

    Args:
        f: Invariants with exact rational entries (ints, Fractions, sympy Rationals or strings)
        method: "subresultant" (sympy PRS) or "sylvester" (fraction-free Bareiss determinant)

    Raises:
        DegenerateCaseError: when f1 == f2
    """
    if method not in METHODS:
        raise DomainError(f"Unknown resultant method {method!r}, expected one of {METHODS}")
    f1, f2 = exact_rational(f.f1), exact_rational(f.f2)
    if f1 == f2:
        raise DegenerateCaseError(f"f1 = f2 = {f1}: the leading coefficient vanishes")
    if f1 <= 0 or f2 <= 0:
        raise DomainError(f"f1 and f2 must be positive, got {f1}, {f2}")

    p, q = boundary_polynomials(f)
    r_c = _eliminate(p, q, C, D, method)
    r_d = _eliminate(p, q, D, C, method)
    return ResultantReport(r_c, r_d, expected_leading_coefficient(f))

