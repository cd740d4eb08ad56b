"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from archimedean_converse.arithmetic.scalars import GaussQ, LinForm
from archimedean_converse.gamma.expr import GammaExpr
from archimedean_converse.parameters.constituents import CharC, CharR, Disc2R, Field
from archimedean_converse.parameters.parameter import normalize

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)
gauss = st.builds(GaussQ, rationals, rationals)
real_gauss = st.builds(GaussQ, rationals)
nonzero_gauss = gauss.filter(lambda z: not z.is_zero())

slopes = st.sampled_from([Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2), Fraction(2)])
gamma_args = st.builds(LinForm, slopes, gauss)
linforms = st.builds(LinForm, rationals, gauss)

gamma_exprs = st.builds(
    GammaExpr,
    st.integers(0, 3),
    linforms,
    linforms,
    st.lists(gamma_args, max_size=3).map(tuple),
    st.lists(gamma_args, max_size=3).map(tuple),
)

char_c = st.builds(CharC, st.integers(-3, 3), gauss)
char_r = st.builds(CharR, st.integers(0, 1), gauss)
disc_2r = st.builds(Disc2R, st.integers(0, 3), gauss)
real_constituents = st.one_of(char_r, disc_2r)

complex_params = st.lists(char_c, min_size=1, max_size=3).map(
    lambda cs: normalize(Field.COMPLEX, cs)
)
real_params = st.lists(real_constituents, min_size=1, max_size=3).map(
    lambda cs: normalize(Field.REAL, cs)
)
parameters = st.one_of(complex_params, real_params)


def lf(slope, offset=0) -> LinForm:
    """slope·s + offset, for writing expected expressions compactly."""
    return LinForm(Fraction(slope), GaussQ.of(offset))
