"""
local_factors.py

L-, ε- and γ-factors of parameters over R and C as GammaExpr functions of s,
for the standard additive character. Factors are multiplicative over
constituents and the variable enters through the twist t -> t + s.

Twisted factors are always obtained by twisting the parameter first and then
applying the untwisted formulas. The closed-form twisted display for
phi_{-N,t} ⊗ lambda_{delta,s} that is sometimes quoted carries no -1 in the
(2π) exponent and Γ(s+t) in the denominator; substitution into the untwisted
formula gives (2π)^{2(s+t-δ)-N-1} and Γ(s+t-δ). We follow substitution.

The closed form for lambda_{eps,t} ⊗ lambda_{delta,s} is kept as
``gamma_lambda_twist_display``. It agrees with substitution when eta = 0;
for eps = delta = 1 its π exponent is larger by eta = 2.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List

from archimedean_converse.arithmetic.scalars import GaussQ, LinForm
from archimedean_converse.constants import ONE_HALF
from archimedean_converse.errors import ParameterError
from archimedean_converse.gamma.expr import GammaExpr, ge_div, ge_mul, ge_prod, ge_subst
from archimedean_converse.parameters.constituents import (
    CharC,
    CharR,
    Character,
    Constituent,
    Disc2R,
)
from archimedean_converse.parameters.parameter import (
    Parameter,
    dual,
    partition_sim,
    rankin_selberg,
    twist_gl1,
)


def _two_times_two_pi(exponent: LinForm) -> GammaExpr:
    """2·(2π)^exponent."""
    return ge_mul(GammaExpr.constant(two=1), GammaExpr.two_pi_power(exponent))


# per-constituent formulas, t already shifted to t + s

def _L(c: Constituent) -> GammaExpr:
    if isinstance(c, CharC):
        arg = LinForm.shifted_s(c.t + max(0, -c.N))
        return ge_mul(_two_times_two_pi(-arg), GammaExpr.gamma(arg))
    if isinstance(c, CharR):
        arg = LinForm.shifted_s(c.t).scale(ONE_HALF)
        return GammaExpr(expPi=-arg, num=(arg,))
    if isinstance(c, Disc2R):
        arg = LinForm.shifted_s(c.normalized().t)
        return ge_mul(_two_times_two_pi(-arg), GammaExpr.gamma(arg))
    raise ParameterError(f"unknown constituent {c!r}")


def _eps(c: Constituent) -> GammaExpr:
    if isinstance(c, CharC):
        return GammaExpr.constant(root4=abs(c.N))
    if isinstance(c, CharR):
        return GammaExpr.constant(root4=3 * c.eps)
    if isinstance(c, Disc2R):
        # -i^{N+1}
        return GammaExpr.constant(root4=c.normalized().N + 3)
    raise ParameterError(f"unknown constituent {c!r}")


def _gamma(c: Constituent) -> GammaExpr:
    if isinstance(c, CharC):
        N = c.N
        return GammaExpr(
            root4=abs(N),
            exp2=LinForm(2, 2 * c.t - N - 1),
            expPi=LinForm(2, 2 * c.t - N - 1),
            num=(LinForm(-1, 1 - c.t + max(0, N)),),
            den=(LinForm(1, c.t + max(0, -N)),),
        )
    if isinstance(c, CharR):
        return GammaExpr(
            root4=3 * c.eps,
            expPi=LinForm(1, c.t - c.eps - ONE_HALF),
            num=(LinForm(-ONE_HALF, (1 - c.t + 2 * c.eps) / 2),),
            den=(LinForm(ONE_HALF, c.t / 2),),
        )
    if isinstance(c, Disc2R):
        c = c.normalized()
        N = c.N
        return GammaExpr(
            root4=N + 3,
            exp2=LinForm(2, 2 * c.t - N - 1),
            expPi=LinForm(2, 2 * c.t - N - 1),
            num=(LinForm(-1, 1 - c.t + N),),
            den=(LinForm(1, c.t),),
        )
    raise ParameterError(f"unknown constituent {c!r}")


def L_param(p: Parameter) -> GammaExpr:
    """L(s, p)."""
    return ge_prod(_L(c) for c in p)


def eps_param(p: Parameter) -> GammaExpr:
    """ε(s, p, ψ); a constant fourth root of unity."""
    return ge_prod(_eps(c) for c in p)


def gamma_param_direct(p: Parameter) -> GammaExpr:
    """γ(s, p, ψ) from the per-constituent closed forms."""
    return ge_prod(_gamma(c) for c in p)


def gamma_param_fe(p: Parameter) -> GammaExpr:
    """γ(s, p, ψ) = ε(p, ψ) L(1-s, p^∨) / L(s, p)."""
    return ge_div(ge_mul(eps_param(p), ge_subst(L_param(dual(p)), -1, 1)), L_param(p))


@lru_cache(maxsize=65536)
def gamma_twisted(p: Parameter, chi: Character) -> GammaExpr:
    """γ(s, p ⊗ chi, ψ)."""
    return gamma_param_direct(twist_gl1(p, chi))


def gamma_lambda_twist_display(eps: int, t, delta: int) -> GammaExpr:
    """The closed form for γ(lambda_{eps,t} ⊗ lambda_{delta,s}) as a function of s."""
    if eps not in (0, 1) or delta not in (0, 1):
        raise ParameterError("signs must be 0 or 1")
    t = GaussQ.of(t)
    eta = 2 if eps == 1 and delta == 1 else 0
    return GammaExpr(
        root4=3 * (eps + delta - eta),
        expPi=LinForm(1, t - eps - delta + eta - ONE_HALF),
        num=(LinForm(-ONE_HALF, (1 - t + 2 * (eps + delta) - eta) / 2),),
        den=(LinForm(ONE_HALF, (t - eta) / 2),),
    )


def block_gammas(p: Parameter) -> List[GammaExpr]:
    """γ(s, b, ψ) for each ~-block b of p, in partition order."""
    return [gamma_param_direct(b) for b in partition_sim(p)]


def rankin_selberg_L(p: Parameter) -> GammaExpr:
    """L(s, p ⊗ p^∨)."""
    return L_param(rankin_selberg(p))
