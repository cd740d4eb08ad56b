from fractions import Fraction

import pytest
from hypothesis import given

from archimedean_converse.errors import ParameterError
from archimedean_converse.gamma.expr import (
    UNIT,
    GammaExpr,
    ge_div,
    ge_mul,
    ge_prod,
    ge_subst,
    normalize_dup,
    slopes,
)
from strategies import gamma_exprs, lf

HALF = Fraction(1, 2)


class TestConstruction:
    def test_cancellation(self):
        assert GammaExpr(num=(lf(1),), den=(lf(1),)) == UNIT

    def test_root_of_unity_is_reduced(self):
        assert GammaExpr(root4=5).root4 == 1
        assert GammaExpr(root4=-1).root4 == 3

    def test_zero_slope_rejected(self):
        with pytest.raises(ParameterError):
            GammaExpr(num=(lf(0, 1),))

    def test_entries_are_sorted(self):
        assert GammaExpr(num=(lf(1, 2), lf(-1, 1))) == GammaExpr(num=(lf(-1, 1), lf(1, 2)))

    def test_str(self):
        assert str(UNIT) == "1"
        assert str(GammaExpr.constant(root4=1)) == "i"
        assert str(GammaExpr(exp2=lf(2, -1), num=(lf(-1, 1),), den=(lf(1),))) == (
            "2^(2*s - 1) * Gamma(-1*s + 1) / Gamma(1*s)"
        )


class TestAlgebra:
    def test_examples(self, gamma_s):
        assert ge_div(gamma_s, gamma_s) == UNIT
        assert ge_mul(gamma_s, gamma_s) == GammaExpr(num=(lf(1), lf(1)))
        a = GammaExpr(root4=1, exp2=lf(1), num=(lf(1),))
        b = GammaExpr(root4=1, exp2=lf(-1, 1), den=(lf(1),))
        assert ge_mul(a, b) == GammaExpr.constant(root4=2, two=1)

    @given(gamma_exprs, gamma_exprs)
    def test_commutative(self, a, b):
        assert a * b == b * a

    @given(gamma_exprs, gamma_exprs, gamma_exprs)
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(gamma_exprs)
    def test_reciprocal(self, x):
        assert x * x.reciprocal() == UNIT
        assert x.reciprocal().reciprocal() == x

    def test_product_of_nothing(self):
        assert ge_prod([]) == UNIT

    def test_two_pi_power(self):
        assert GammaExpr.two_pi_power(lf(-1, 2)) == GammaExpr(exp2=lf(-1, 2), expPi=lf(-1, 2))

    def test_constant(self):
        assert GammaExpr.constant(two=1, pi=HALF).is_constant()
        assert not GammaExpr(num=(lf(1),)).is_constant()


class TestSubstitution:
    def test_reflection(self, gamma_s):
        assert ge_subst(gamma_s, -1, 1) == GammaExpr(num=(lf(-1, 1),))

    def test_shift(self):
        x = GammaExpr(num=(lf(1, HALF),))
        assert ge_subst(x, 1, 3) == GammaExpr(num=(lf(1, Fraction(7, 2)),))

    def test_scaling(self):
        x = GammaExpr(exp2=lf(2), num=(lf(HALF),))
        assert ge_subst(x, 2, 0) == GammaExpr(exp2=lf(4), num=(lf(1),))

    @given(gamma_exprs)
    def test_reflection_is_involution(self, x):
        assert ge_subst(ge_subst(x, -1, 1), -1, 1) == x

    def test_zero_slope_substitution(self, gamma_s):
        with pytest.raises(ParameterError):
            ge_subst(gamma_s, 0, 1)


class TestDuplication:
    def test_pair_collapses(self):
        x = GammaExpr(num=(lf(HALF), lf(HALF, HALF)))
        expected = GammaExpr(exp2=lf(-1, 1), expPi=lf(0, HALF), num=(lf(1),))
        assert normalize_dup(x) == expected

    def test_denominator_pair(self):
        x = GammaExpr(den=(lf(1), lf(1, HALF)))
        expected = GammaExpr(exp2=lf(2, -1), expPi=lf(0, -HALF), den=(lf(2),))
        assert normalize_dup(x) == expected

    def test_without_partner(self, gamma_s):
        assert normalize_dup(gamma_s) == gamma_s
        doubled = GammaExpr(num=(lf(HALF), lf(HALF)))
        assert normalize_dup(doubled) == doubled

    def test_slopes(self):
        assert slopes(GammaExpr(num=(lf(HALF), lf(-1, 1)), den=(lf(HALF, 1),))) == (
            Fraction(-1),
            HALF,
        )
