"""
divisor.py

Pole/zero divisors of GammaExpr values.

Γ(αs+β) has simple poles at s = -β/α - k/α for k = 0, 1, 2, ...; this is a
Progression with start -β/α and signed step 1/α. A negative step (α < 0)
walks upward. Numerator arguments contribute poles (mult > 0), denominator
arguments zeros (mult < 0); the prefactors contribute nothing.

Two divisors are compared through a canonical form: all progressions are
refined to the common step L (the lcm of the step magnitudes), points are
grouped by their class in C / LZ, and each class is rewritten as one upward
tail plus a finite list of downward progressions.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Optional, Tuple

from archimedean_converse.arithmetic.scalars import GaussQ, linform_eval, residue_mod
from archimedean_converse.errors import ParameterError
from archimedean_converse.gamma.expr import GammaExpr


@dataclass(frozen=True)
class Progression:
    start: GaussQ
    step: Fraction
    mult: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", GaussQ.of(self.start))
        object.__setattr__(self, "step", Fraction(self.step))
        if self.step == 0:
            raise ParameterError("progression step must be nonzero")
        if self.mult == 0:
            raise ParameterError("progression multiplicity must be nonzero")

    @property
    def upward(self) -> bool:
        return self.step < 0

    def contains(self, s0: GaussQ) -> bool:
        k = (self.start - s0) / self.step
        return k.is_integer() and k.re >= 0

    def refine(self, step_size: Fraction) -> List["Progression"]:
        """Split into progressions whose step has magnitude ``step_size``."""
        ratio = step_size / abs(self.step)
        if ratio.denominator != 1:
            raise ParameterError(f"{step_size} is not a multiple of {abs(self.step)}")
        new_step = step_size if self.step > 0 else -step_size
        return [
            Progression(self.start - self.step * j, new_step, self.mult)
            for j in range(ratio.numerator)
        ]

    def sort_key(self):
        return (self.start.re, self.start.im, self.step, self.mult)

    def __str__(self) -> str:
        kind = "poles" if self.mult > 0 else "zeros"
        direction = "+" if self.upward else "-"
        return f"{kind}x{abs(self.mult)} at {self.start} {direction} k*{abs(self.step)}"


def lcm_rational(values: Iterable[Fraction]) -> Fraction:
    values = [abs(Fraction(v)) for v in values]
    if not values:
        return Fraction(1)
    num = reduce(lambda a, b: a * b // math.gcd(a, b), (v.numerator for v in values))
    den = reduce(math.gcd, (v.denominator for v in values))
    return Fraction(num, den)


# (class representative, kind, k, mult) with kind 0 = downward, 1 = upward tail
CanonicalEntry = Tuple[GaussQ, int, int, int]


@lru_cache(maxsize=4096)
def _canonical(progressions: Tuple[Progression, ...], L: Fraction) -> Tuple[CanonicalEntry, ...]:
    down: Dict[GaussQ, Dict[int, int]] = defaultdict(lambda: defaultdict(int))
    up: Dict[GaussQ, Dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for prog in progressions:
        for piece in prog.refine(L):
            r, k = residue_mod(piece.start, L)
            (up if piece.upward else down)[r][k] += piece.mult

    entries: List[CanonicalEntry] = []
    for r in sorted(set(down) | set(up), key=GaussQ.sort_key):
        d, u = down[r], up[r]
        c_plus = sum(u.values())
        ks = list(d) + list(u)
        lo, hi = min(ks) - 1, max(ks)

        def f(k: int) -> int:
            return sum(m for k0, m in d.items() if k <= k0) + sum(m for k0, m in u.items() if k >= k0)

        values = {k: f(k) for k in range(lo, hi + 2)}
        off_tail = [k for k in range(lo, hi + 1) if values[k] != c_plus]
        if not off_tail:
            # the whole lattice with constant multiplicity; pivot at k = 0
            if c_plus:
                entries.extend([(r, 1, 1, c_plus), (r, 0, 0, c_plus)])
            continue
        pivot = max(off_tail)
        if c_plus:
            entries.append((r, 1, pivot + 1, c_plus))
        for k in range(lo, pivot + 1):
            m = values[k] if k == pivot else values[k] - values.get(k + 1, c_plus)
            if m:
                entries.append((r, 0, k, m))
    return tuple(entries)


class Divisor:
    """A finite formal sum of progressions; equality is equality of multiplicity functions."""

    __hash__ = None  # type: ignore[assignment]

    def __init__(self, progressions: Iterable[Progression] = ()) -> None:
        self.progressions: Tuple[Progression, ...] = tuple(
            sorted(progressions, key=Progression.sort_key)
        )

    @property
    def step_lcm(self) -> Fraction:
        return lcm_rational(p.step for p in self.progressions)

    def canonical_entries(self, L: Optional[Fraction] = None) -> Tuple[CanonicalEntry, ...]:
        return _canonical(self.progressions, L if L is not None else self.step_lcm)

    def canonical(self, L: Optional[Fraction] = None) -> Tuple[Progression, ...]:
        """The canonical progression list at common step L (default: own lcm)."""
        L = L if L is not None else self.step_lcm
        out = []
        for r, kind, k, m in self.canonical_entries(L):
            start = r + L * k
            out.append(Progression(start, -L if kind else L, m))
        return tuple(out)

    def multiplicity(self, s0) -> int:
        s0 = GaussQ.of(s0)
        return sum(p.mult for p in self.progressions if p.contains(s0))

    def support_in(self, lo: Fraction, hi: Fraction) -> List[Tuple[GaussQ, int]]:
        """Points with nonzero multiplicity and real part in [lo, hi], sorted."""
        points = set()
        for p in self.progressions:
            k_lo, k_hi = sorted(((p.start.re - hi) / p.step, (p.start.re - lo) / p.step))
            for k in range(max(0, math.ceil(k_lo)), math.floor(k_hi) + 1):
                points.add(p.start - p.step * k)
        out = [(z, self.multiplicity(z)) for z in sorted(points, key=GaussQ.sort_key)]
        return [(z, m) for z, m in out if m]

    def is_zero(self) -> bool:
        return not self.canonical_entries()

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(self.progressions + other.progressions)

    def __neg__(self) -> "Divisor":
        return Divisor(Progression(p.start, p.step, -p.mult) for p in self.progressions)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        L = lcm_rational([self.step_lcm, other.step_lcm])
        return self.canonical_entries(L) == other.canonical_entries(L)

    def __repr__(self) -> str:
        return "Divisor(" + ", ".join(str(p) for p in self.canonical()) + ")"


def gamma_progression(arg, mult: int) -> Progression:
    """Poles of Γ(arg) (mult > 0) or zeros of 1/Γ(arg) (mult < 0)."""
    return Progression(-arg.offset / arg.slope, 1 / arg.slope, mult)


def ge_divisor(x: GammaExpr) -> Divisor:
    return Divisor(
        [gamma_progression(f, 1) for f in x.num] + [gamma_progression(f, -1) for f in x.den]
    )


def _is_gamma_pole(value: GaussQ) -> bool:
    return value.is_integer() and value.re <= 0


def order_at(x: GammaExpr, s0) -> int:
    """Pole order at s0; negative values are zero orders."""
    s0 = GaussQ.of(s0)
    poles = sum(1 for f in x.num if _is_gamma_pole(linform_eval(f, s0)))
    zeros = sum(1 for f in x.den if _is_gamma_pole(linform_eval(f, s0)))
    return poles - zeros


def holomorphic_at(x: GammaExpr, s0) -> bool:
    return order_at(x, s0) <= 0
