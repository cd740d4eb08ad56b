from fractions import Fraction

import pytest
from hypothesis import given

from archimedean_converse.arithmetic.scalars import (
    GaussQ,
    LinForm,
    Order,
    int_diff,
    linform_eval,
    preceq_cmp,
    rational_str,
    residue_mod,
    to_rational,
)
from archimedean_converse.errors import ParameterError
from strategies import gauss, linforms, nonzero_gauss

HALF = Fraction(1, 2)


class TestGaussQ:
    def test_multiplication(self):
        assert GaussQ(1, 2) * GaussQ(3, -1) == GaussQ(5, 5)

    @given(gauss, nonzero_gauss)
    def test_division_inverts_multiplication(self, a, b):
        assert (a * b) / b == a

    @given(gauss, gauss)
    def test_subtraction_is_antisymmetric(self, a, b):
        assert a - b == -(b - a)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussQ(1) / GaussQ()

    def test_str(self):
        assert str(GaussQ(HALF, 3)) == "1/2+3i"
        assert str(GaussQ(0, -HALF)) == "0-1/2i"
        assert str(GaussQ(-2)) == "-2"

    def test_integer_checks(self):
        assert GaussQ(3).is_integer()
        assert not GaussQ(3, 1).is_integer()
        assert not GaussQ(HALF).is_integer()
        assert GaussQ(-4).as_int() == -4
        with pytest.raises(ParameterError):
            GaussQ(HALF).as_int()

    def test_mixed_operands(self):
        assert GaussQ(1, 1) + 2 == GaussQ(3, 1)
        assert 2 - GaussQ(1, 1) == GaussQ(1, -1)
        assert 2 * GaussQ(HALF, 1) == GaussQ(1, 2)


def test_to_rational():
    assert to_rational("3/4") == Fraction(3, 4)
    assert to_rational(" -2 ") == Fraction(-2)
    assert to_rational(5) == Fraction(5)
    for bad in ("x", "1/0", True, 0.5):
        with pytest.raises(ParameterError):
            to_rational(bad)


def test_rational_str_always_has_denominator():
    assert rational_str(Fraction(3)) == "3/1"
    assert rational_str(Fraction(-1, 2)) == "-1/2"


class TestOrder:
    def test_examples(self):
        assert preceq_cmp(GaussQ(0), GaussQ(2)) is Order.LESS
        assert preceq_cmp(GaussQ(3, 2), GaussQ(3, 2)) is Order.EQUAL
        assert preceq_cmp(GaussQ(0), GaussQ(HALF)) is Order.INCOMPARABLE
        assert preceq_cmp(GaussQ(2), GaussQ(0)) is Order.GREATER

    def test_int_diff(self):
        assert int_diff(GaussQ(HALF), GaussQ(Fraction(5, 2))) == 2
        assert int_diff(GaussQ(0, 1), GaussQ(3, 1)) == 3
        assert int_diff(GaussQ(0), GaussQ(1, 1)) is None

    @given(gauss, gauss)
    def test_antisymmetry(self, w, z):
        flipped = {
            Order.LESS: Order.GREATER,
            Order.GREATER: Order.LESS,
            Order.EQUAL: Order.EQUAL,
            Order.INCOMPARABLE: Order.INCOMPARABLE,
        }
        assert preceq_cmp(z, w) is flipped[preceq_cmp(w, z)]

    @given(gauss)
    def test_residue_mod_reassembles(self, z):
        r, k = residue_mod(z, Fraction(1))
        assert 0 <= r.re < 1
        assert r + k == z

    def test_residue_mod_step(self):
        assert residue_mod(GaussQ(Fraction(-3, 2), 1), Fraction(1)) == (GaussQ(HALF, 1), -2)
        assert residue_mod(GaussQ(Fraction(7, 4)), HALF) == (GaussQ(Fraction(1, 4)), 3)
        with pytest.raises(ParameterError):
            residue_mod(GaussQ(1), Fraction(0))


class TestLinForm:
    def test_eval(self):
        assert linform_eval(LinForm(1, 1), GaussQ(-1)) == GaussQ(0)
        assert linform_eval(LinForm(HALF, Fraction(3, 2)), GaussQ(1)) == GaussQ(2)
        assert linform_eval(LinForm(-1, GaussQ(1, 1)), GaussQ(0, 1)) == GaussQ(1)

    def test_subst(self):
        # (2s + 1) at s -> -s + 1
        assert LinForm(2, 1).subst(-1, 1) == LinForm(-2, 3)

    @given(linforms, gauss)
    def test_subst_agrees_with_eval(self, f, z):
        shifted = f.subst(3, z)
        assert linform_eval(shifted, GaussQ(1)) == linform_eval(f, z + 3)

    def test_str(self):
        assert str(LinForm(2, -1)) == "2*s - 1"
        assert str(LinForm(0, 3)) == "3"
        assert str(LinForm(HALF, 0)) == "1/2*s"
        assert str(LinForm(-1, GaussQ(1, 1))) == "-1*s + 1+1i"

    def test_zero(self):
        assert LinForm().is_zero()
        assert LinForm.const(0).is_zero()
        assert not LinForm.shifted_s(0).is_zero()
