from fractions import Fraction

import pytest

from src.errors import DimensionMismatch
from src.feasibility import eliminate, fm_pair, is_feasible, satisfies, solve_system

from .helpers import Q


def row(b, *a):
    return Fraction(b), Q(*a)


class TestSolveSystem:
    """測試 solve_system() 的可行點與不可行憑證"""

    def test_feasible_triangle(self):
        """x >= 1, y >= 1, x + y <= 3"""
        ineqs = [row(-1, 1, 0), row(-1, 0, 1), row(3, -1, -1)]
        result = solve_system(ineqs, [], 2)

        assert result.feasible
        assert satisfies(result.point, ineqs)

    def test_prefers_zero(self):
        """區間包含 0 時取 0"""
        result = solve_system([row(1, 1, 0), row(1, 0, -1)], [], 2)
        assert result.point == Q(0, 0)

    def test_infeasible_with_certificate(self):
        """x >= 2 與 x <= 1 矛盾"""
        ineqs = [row(-2, 1), row(1, -1)]
        result = solve_system(ineqs, [], 1)

        assert not result.feasible
        cert = result.certificate
        assert cert.verify(ineqs, [], 1)
        const, coeffs = cert.combination(ineqs, [], 1)
        assert const < 0
        assert coeffs == Q(0)

    def test_equations_are_substituted(self):
        """x + y = 4, x - y = 2 → (3, 1)"""
        eqs = [row(-4, 1, 1), row(-2, 1, -1)]
        result = solve_system([], eqs, 2)
        assert result.point == Q(3, 1)

    def test_inconsistent_equations(self):
        eqs = [row(-1, 1, 1), row(-2, 1, 1)]
        ineqs = [row(5, 1, 0)]
        result = solve_system(ineqs, eqs, 2)

        assert not result.feasible
        assert result.certificate.verify(ineqs, eqs, 2)

    def test_equation_against_inequality(self):
        """x = 3 但 x <= 1"""
        ineqs = [row(1, -1)]
        eqs = [row(-3, 1)]
        result = solve_system(ineqs, eqs, 1)

        assert not result.feasible
        assert result.certificate.verify(ineqs, eqs, 1)

    def test_zero_variables(self):
        """n = 0 時只剩常數列"""
        assert solve_system([row(1)], [], 0).feasible
        assert not solve_system([row(-1)], [], 0).feasible

    def test_three_dimensional_simplex(self):
        ineqs = [row(0, 1, 0, 0), row(0, 0, 1, 0), row(0, 0, 0, 1), row(-3, 1, 1, 1)]
        result = solve_system(ineqs, [], 3)

        assert result.feasible
        assert satisfies(result.point, ineqs)
        assert is_feasible(ineqs + [row(2, -1, -1, -1)], [], 3) is False

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            solve_system([row(0, 1, 1)], [], 3)


class TestEliminate:
    """測試投影（消去變數）"""

    def test_project_triangle_to_x(self):
        """{x >= 0, y >= 0, x + y <= 2} 投影到 x 軸是 [0, 2]"""
        ineqs = [row(0, 1, 0), row(0, 0, 1), row(2, -1, -1)]
        projected, eqs = eliminate(ineqs, [], 2, [1])

        assert eqs == []
        assert all(a[1] == 0 for _, a in projected)
        assert satisfies(Q(2, 0), projected)
        assert satisfies(Q(0, 0), projected)
        assert not satisfies(Q('5/2', 0), projected)
        assert not satisfies(Q(-1, 0), projected)

    def test_empty_projection(self):
        assert eliminate([row(-2, 1, 1), row(1, -1, -1)], [], 2, [1]) is None

    def test_fm_pair_cancels(self):
        u = Q(1, 2, 3)
        v = Q(4, -1, 2)
        combined = fm_pair(u, v, 1)
        assert combined[1] == 0
        assert combined == Q(9, 0, 7)
