"""
numeric.py

Numeric channel for GammaExpr: evaluation through the complex log-gamma of
mpmath at the configured working precision, and the equality decision used
everywhere a factor is compared (exact divisors plus sampled ratios).
"""

from __future__ import annotations

from typing import Iterable

import mpmath

from archimedean_converse.auto_config.environment import get_eval_dps
from archimedean_converse.auto_config.logging_config import logger
from archimedean_converse.constants import (
    EQUALITY_RATIO_TOLERANCE,
    EQUALITY_SAMPLE_POINTS,
    SAMPLE_CLEARANCE,
    SAMPLE_SHIFT,
    SINGULAR_DISTANCE,
)
from archimedean_converse.errors import SingularEvaluationError
from archimedean_converse.gamma.divisor import ge_divisor
from archimedean_converse.gamma.expr import GammaExpr

mp = mpmath.MPContext()
mp.dps = get_eval_dps()

_LOG2 = mp.log(2)
_LOGPI = mp.log(mp.pi)
_HALF_PI_I = mp.mpc(0, mp.pi / 2)


def _q(x):
    return mp.mpf(x.numerator) / x.denominator


def _arg(form, s):
    return _q(form.slope) * s + mp.mpc(_q(form.offset.re), _q(form.offset.im))


def _pole_distance(z) -> float:
    """Distance from z to the nearest pole of Γ (the nonpositive integers)."""
    n = min(0, int(mp.nint(mp.re(z))))
    return float(abs(z - n))


def _log_gamma(z):
    if _pole_distance(z) < SINGULAR_DISTANCE:
        raise SingularEvaluationError(f"Gamma argument {mp.nstr(z, 12)} is on a pole")
    return mp.loggamma(z)


def ge_log_eval(x: GammaExpr, s: complex):
    """A logarithm of x(s) as an mpmath complex; exponentiate for the value."""
    s = mp.mpc(s)
    total = _HALF_PI_I * x.root4
    total += _arg(x.exp2, s) * _LOG2 + _arg(x.expPi, s) * _LOGPI
    for f in x.num:
        total += _log_gamma(_arg(f, s))
    for f in x.den:
        total -= _log_gamma(_arg(f, s))
    return total


def ge_eval(x: GammaExpr, s: complex) -> complex:
    return complex(mp.exp(ge_log_eval(x, s)))


def _too_close(exprs: Iterable[GammaExpr], s: complex) -> bool:
    s = mp.mpc(s)
    return any(
        _pole_distance(_arg(f, s)) < SAMPLE_CLEARANCE
        for x in exprs
        for f in x.gamma_arguments()
    )


def sample_points(*exprs: GammaExpr):
    """The fixed sample points, each shifted right by SAMPLE_SHIFT until clear of every pole."""
    points = []
    for s in EQUALITY_SAMPLE_POINTS:
        while _too_close(exprs, s):
            s += SAMPLE_SHIFT
        points.append(s)
    return points


def ge_eq(a: GammaExpr, b: GammaExpr) -> bool:
    """True iff a and b have the same divisor and agree numerically at the sample points."""
    if a == b:
        return True
    if ge_divisor(a) != ge_divisor(b):
        return False
    for s in sample_points(a, b):
        ratio = mp.exp(ge_log_eval(a, s) - ge_log_eval(b, s))
        if abs(ratio - 1) > EQUALITY_RATIO_TOLERANCE:
            logger.debug(f"ge_eq: ratio {mp.nstr(ratio, 12)} at s={s}")
            return False
    return True
