import random
from fractions import Fraction
from math import factorial, prod

import pytest

from younggraph.hall_littlewood import (
    Poly,
    b_poly,
    check_hl_ratio_inequality,
    hl_P,
    hl_P_poly,
    hl_P_values,
    hl_Q,
    hl_Q_poly,
    hl_Q_symmetrization,
)
from younggraph.partitions import enumerate_move_quadruples, enumerate_partitions
from younggraph.reports import NOT_APPLICABLE
from younggraph.schur import check_product_inequality, schur_ones

F = Fraction


class TestPoly:
    def test_trim_and_eval(self):
        p = Poly([1, 2, 0])
        assert p.coeffs == (1, 2)
        assert p(F(1, 2)) == 2

    def test_one_minus_tpow(self):
        assert Poly.one_minus_tpow(0).is_zero()
        assert Poly.one_minus_tpow(2)(F(1, 2)) == F(3, 4)

    def test_arithmetic(self):
        a, b = Poly([1, 1]), Poly([1, -1])
        assert (a * b).coeffs == (1, 0, -1)
        assert (a + b).coeffs == (2,)
        assert (a - b).coeffs == (0, 2)

    def test_division_by_one_minus_t(self):
        p = Poly.one_minus_tpow(3)
        q = p.divide_by_one_minus_t()
        assert q.coeffs == (1, 1, 1)
        with pytest.raises(ValueError):
            Poly([1, 1]).divide_by_one_minus_t()

    def test_multiplicity(self):
        p = Poly.one_minus_tpow(1) * Poly.one_minus_tpow(2) * Poly([2, 1])
        assert p.multiplicity_at_one() == 2


class TestHallLittlewoodValues:
    def test_single_box(self):
        for n_vars in range(1, 6):
            assert hl_Q_poly((1,), n_vars) == Poly([n_vars, -n_vars])

    def test_vertical_domino(self):
        # P is the second elementary symmetric polynomial, so 1 at two ones
        assert hl_P((1, 1), 2, F(1, 3)) == 1
        expected = Poly.one_minus_tpow(1) * Poly.one_minus_tpow(2)
        assert hl_Q_poly((1, 1), 2) == expected

    def test_zero_at_schur_point(self):
        for n in range(7):
            for lam in enumerate_partitions(n):
                for n_vars in range(len(lam), 7):
                    if n_vars == 0:
                        continue
                    assert hl_Q(lam, n_vars, 0) == schur_ones(lam, n_vars)

    def test_monomial_count_at_t_one(self):
        for n in range(6):
            for lam in enumerate_partitions(n):
                for n_vars in range(max(len(lam), 1), 6):
                    counts: dict[int, int] = {}
                    for part in lam:
                        counts[part] = counts.get(part, 0) + 1
                    distinct = factorial(n_vars) // (
                        factorial(n_vars - len(lam)) * prod(factorial(c) for c in counts.values())
                    )
                    assert hl_P(lam, n_vars, 1) == distinct

    def test_too_few_variables(self):
        with pytest.raises(ValueError, match="variables"):
            hl_P((2, 1), 1, F(1, 2))

    def test_t_outside_unit_interval_warns(self):
        with pytest.warns(UserWarning):
            hl_Q((1,), 2, 2)


class TestSymmetrizationOracle:
    def test_single_row_one_variable(self):
        for k in range(1, 5):
            assert hl_Q_symmetrization((k,), [F(2)], F(1, 3)) == (1 - F(1, 3)) * 2**k

    def test_single_box_is_scaled_power_sum(self):
        xs = [F(1), F(2), F(5, 2)]
        t = F(1, 4)
        assert hl_Q_symmetrization((1,), xs, t) == (1 - t) * sum(xs)

    def test_repeated_arguments_rejected(self):
        with pytest.raises(ValueError, match="distinct"):
            hl_Q_symmetrization((1,), [F(1), F(1)], F(1, 2))

    def test_agrees_with_branching_route(self):
        xs = [F(1), F(2), F(3)]
        t = F(1, 2)
        for n in range(5):
            for lam in enumerate_partitions(n):
                if len(lam) > 3:
                    continue
                branch = b_poly(lam)(t) * hl_P_values(lam, xs, t)
                assert hl_Q_symmetrization(lam, xs, t) == branch

    def test_agrees_at_random_rational_points(self):
        rng = random.Random(9)
        for n in range(1, 5):
            for lam in enumerate_partitions(n):
                if len(lam) > 4:
                    continue
                for _ in range(3):
                    xs = []
                    while len(set(xs)) != 4:
                        xs = [F(rng.randint(1, 30), rng.randint(1, 7)) for _ in range(4)]
                    t = F(rng.randint(0, 9), 10)
                    branch = b_poly(lam)(t) * hl_P_values(lam, xs, t)
                    assert hl_Q_symmetrization(lam, xs, t) == branch


class TestRatioInequality:
    def all_quadruples(self, n_max=5):
        return [q for n in range(5, n_max + 1) for q in enumerate_move_quadruples(n)]

    def test_zero_t_matches_product_inequality(self):
        for q in self.all_quadruples(6):
            for n_vars in range(len(q.lam_hat), 6):
                hl = check_hl_ratio_inequality(q, n_vars, 0)
                direct = check_product_inequality(q, n_vars)
                assert hl.verdict == direct.verdict
                if hl.applicable:
                    assert hl.equality == direct.equality

    def test_all_equal_at_t_one(self):
        for q in self.all_quadruples(6):
            for n_vars in range(len(q.lam_hat), 6):
                v = check_hl_ratio_inequality(q, n_vars, 1)
                if v.applicable:
                    assert v.holds and v.equality
                    assert v.lhs == v.rhs == 0
                    assert "cleared_lhs" in v.details

    def test_conjectured_sign_on_grid(self):
        for q in self.all_quadruples(5):
            for n_vars in range(len(q.lam_hat), 5):
                for t in (0, F(1, 4), F(1, 2), F(3, 4), 1):
                    v = check_hl_ratio_inequality(q, n_vars, t)
                    assert v.verdict in ("holds", NOT_APPLICABLE)

    def test_prefactor_exponents_positive(self):
        # the removed box keeps a part of its own size in both shapes, so the
        # literal prefactor never degenerates to 1 - t^0 on valid quadruples
        for q in self.all_quadruples(6):
            if q.case == "between":
                continue
            v = check_hl_ratio_inequality(q, len(q.lam_hat), F(1, 2))
            assert all(e >= 1 for e in v.details["prefactor_exponents"])

    def test_too_few_variables(self):
        q = self.all_quadruples()[0]
        with pytest.raises(ValueError, match="variables"):
            check_hl_ratio_inequality(q, len(q.lam_hat) - 1, 0)
