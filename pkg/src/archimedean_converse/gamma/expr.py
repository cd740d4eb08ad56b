"""
expr.py

Symbolic values of the form

    i^k · 2^{e2(s)} · π^{eπ(s)} · ∏ Γ(num_j(s)) / ∏ Γ(den_j(s))

with e2, eπ and the Γ-arguments linear forms in s. Every L-, ε- and
γ-factor is a GammaExpr.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from archimedean_converse.arithmetic.scalars import (
    ZERO_FORM,
    GaussQ,
    LinForm,
    RationalLike,
    to_rational,
)
from archimedean_converse.constants import ONE_HALF
from archimedean_converse.errors import ParameterError

_UNITS = {0: "1", 1: "i", 2: "-1", 3: "-i"}


def _sorted_forms(forms: Iterable[LinForm]) -> Tuple[LinForm, ...]:
    return tuple(sorted(forms, key=LinForm.sort_key))


@dataclass(frozen=True)
class GammaExpr:
    root4: int = 0
    exp2: LinForm = ZERO_FORM
    expPi: LinForm = ZERO_FORM
    num: Tuple[LinForm, ...] = field(default_factory=tuple)
    den: Tuple[LinForm, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if isinstance(self.root4, bool) or not isinstance(self.root4, int):
            raise ParameterError(f"root4 must be an integer, got {self.root4!r}")
        for f in (*self.num, *self.den):
            if f.slope == 0:
                raise ParameterError(f"Gamma argument {f} has zero slope")
        num, den = Counter(self.num), Counter(self.den)
        common = num & den
        object.__setattr__(self, "root4", self.root4 % 4)
        object.__setattr__(self, "num", _sorted_forms((num - common).elements()))
        object.__setattr__(self, "den", _sorted_forms((den - common).elements()))

    @classmethod
    def gamma(cls, arg: LinForm) -> "GammaExpr":
        return cls(num=(arg,))

    @classmethod
    def constant(
        cls,
        root4: int = 0,
        two: RationalLike = 0,
        pi: RationalLike = 0,
    ) -> "GammaExpr":
        """i^root4 · 2^two · π^pi."""
        return cls(root4, LinForm.const(to_rational(two)), LinForm.const(to_rational(pi)))

    @classmethod
    def two_pi_power(cls, exponent: LinForm) -> "GammaExpr":
        """(2π)^exponent."""
        return cls(exp2=exponent, expPi=exponent)

    def is_constant(self) -> bool:
        return (
            not self.num and not self.den
            and self.exp2.is_const() and self.expPi.is_const()
        )

    def reciprocal(self) -> "GammaExpr":
        return GammaExpr(-self.root4, -self.exp2, -self.expPi, self.den, self.num)

    def gamma_arguments(self) -> Tuple[LinForm, ...]:
        return self.num + self.den

    def __mul__(self, other: "GammaExpr") -> "GammaExpr":
        return ge_mul(self, other)

    def __truediv__(self, other: "GammaExpr") -> "GammaExpr":
        return ge_div(self, other)

    def __str__(self) -> str:
        parts = []
        if self.root4 or (self.exp2.is_zero() and self.expPi.is_zero() and not self.num):
            parts.append(_UNITS[self.root4])
        if not self.exp2.is_zero():
            parts.append(f"2^({self.exp2})")
        if not self.expPi.is_zero():
            parts.append(f"pi^({self.expPi})")
        parts.extend(f"Gamma({f})" for f in self.num)
        text = " * ".join(parts)
        if self.den:
            den = " * ".join(f"Gamma({f})" for f in self.den)
            text += f" / ({den})" if len(self.den) > 1 else f" / {den}"
        return text


UNIT = GammaExpr()


def ge_mul(a: GammaExpr, b: GammaExpr) -> GammaExpr:
    return GammaExpr(
        a.root4 + b.root4,
        a.exp2 + b.exp2,
        a.expPi + b.expPi,
        a.num + b.num,
        a.den + b.den,
    )


def ge_div(a: GammaExpr, b: GammaExpr) -> GammaExpr:
    return ge_mul(a, b.reciprocal())


def ge_prod(items: Iterable[GammaExpr]) -> GammaExpr:
    out = UNIT
    for x in items:
        out = ge_mul(out, x)
    return out


def ge_subst(x: GammaExpr, a: RationalLike, b) -> GammaExpr:
    """Replace s by a·s + b in every linear form."""
    a = to_rational(a)
    if a == 0:
        raise ParameterError("substitution s -> a*s + b needs a != 0")
    b = GaussQ.of(b)
    return GammaExpr(
        x.root4,
        x.exp2.subst(a, b),
        x.expPi.subst(a, b),
        tuple(f.subst(a, b) for f in x.num),
        tuple(f.subst(a, b) for f in x.den),
    )


def _half_partner(forms: Tuple[LinForm, ...]) -> Optional[Tuple[LinForm, LinForm]]:
    present = set(forms)
    for f in forms:
        g = LinForm(f.slope, f.offset + ONE_HALF)
        if g in present:
            return f, g
    return None


def _duplicate(u: LinForm) -> GammaExpr:
    """Γ(u)Γ(u+1/2) = 2^{1-2u} π^{1/2} Γ(2u)."""
    return GammaExpr(
        exp2=LinForm.const(1) - u.scale(2),
        expPi=LinForm.const(ONE_HALF),
        num=(u.scale(2),),
    )


def normalize_dup(x: GammaExpr) -> GammaExpr:
    """Apply the duplication formula to numerator and denominator pairs until none is left."""
    while True:
        pair = _half_partner(x.num)
        if pair is not None:
            u, v = pair
            x = ge_mul(ge_div(x, GammaExpr(num=(u, v))), _duplicate(u))
            continue
        pair = _half_partner(x.den)
        if pair is not None:
            u, v = pair
            x = ge_div(ge_mul(x, GammaExpr(num=(u, v))), _duplicate(u))
            continue
        return x


def slopes(x: GammaExpr) -> Tuple[Fraction, ...]:
    return tuple(sorted({f.slope for f in x.gamma_arguments()}))
