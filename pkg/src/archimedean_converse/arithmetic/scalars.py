"""
scalars.py

Exact arithmetic substrate: rationals (``fractions.Fraction``), Gaussian
rationals, linear forms in the variable s, and the partial order
w ⪯ z  <=>  z - w ∈ Z≥0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

from archimedean_converse.errors import ParameterError

RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, bool):
        raise ParameterError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParameterError(f"not a rational literal: {value!r}") from e
    raise ParameterError(f"not a rational: {value!r}")


def rational_str(q: Fraction) -> str:
    """``p/q`` form used in every JSON payload (always with a denominator)."""
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class GaussQ:
    """Gaussian rational re + im·i with exact Fraction parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", to_rational(self.re))
        object.__setattr__(self, "im", to_rational(self.im))

    @classmethod
    def of(cls, value: Union["GaussQ", RationalLike]) -> "GaussQ":
        if isinstance(value, GaussQ):
            return value
        return cls(to_rational(value))

    def __add__(self, other) -> "GaussQ":
        other = GaussQ.of(other)
        return GaussQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussQ":
        other = GaussQ.of(other)
        return GaussQ(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussQ":
        return GaussQ.of(other) - self

    def __neg__(self) -> "GaussQ":
        return GaussQ(-self.re, -self.im)

    def __mul__(self, other) -> "GaussQ":
        other = GaussQ.of(other)
        return GaussQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussQ":
        other = GaussQ.of(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero GaussQ")
        return GaussQ(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_rational(self) -> bool:
        return self.im == 0

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def as_int(self) -> int:
        if not self.is_integer():
            raise ParameterError(f"{self} is not a rational integer")
        return self.re.numerator

    def sort_key(self) -> Tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self) -> str:
        return f"GaussQ({self})"


ZERO = GaussQ()


def residue_mod(z: GaussQ, step: Fraction) -> Tuple[GaussQ, int]:
    """
    Split ``z`` as ``r + k·step`` with 0 <= Re(r) < step and k an integer.

    ``r`` is the canonical representative of the class of ``z`` in
    C / (step·Z); two points lie on a common lattice iff their ``r`` agree.
    """
    if step <= 0:
        raise ParameterError(f"lattice step must be positive, got {step}")
    k = math.floor(z.re / step)
    return GaussQ(z.re - k * step, z.im), k


class Order(Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"


def int_diff(w: GaussQ, z: GaussQ) -> Optional[int]:
    """Return z - w when it is a rational integer, else None."""
    d = GaussQ.of(z) - GaussQ.of(w)
    return d.as_int() if d.is_integer() else None


def preceq_cmp(w: GaussQ, z: GaussQ) -> Order:
    """Compare under w ⪯ z  <=>  z - w ∈ Z≥0."""
    d = int_diff(w, z)
    if d is None:
        return Order.INCOMPARABLE
    if d > 0:
        return Order.LESS
    if d < 0:
        return Order.GREATER
    return Order.EQUAL


@dataclass(frozen=True)
class LinForm:
    """slope·s + offset, slope rational and offset Gaussian rational."""

    slope: Fraction = Fraction(0)
    offset: GaussQ = ZERO

    def __post_init__(self) -> None:
        object.__setattr__(self, "slope", to_rational(self.slope))
        object.__setattr__(self, "offset", GaussQ.of(self.offset))

    @classmethod
    def const(cls, c) -> "LinForm":
        return cls(Fraction(0), GaussQ.of(c))

    @classmethod
    def shifted_s(cls, c, slope: RationalLike = 1) -> "LinForm":
        """``slope·s + c``; the usual argument after the substitution t -> t + s."""
        return cls(to_rational(slope), GaussQ.of(c))

    def __add__(self, other: "LinForm") -> "LinForm":
        return LinForm(self.slope + other.slope, self.offset + other.offset)

    def __sub__(self, other: "LinForm") -> "LinForm":
        return LinForm(self.slope - other.slope, self.offset - other.offset)

    def __neg__(self) -> "LinForm":
        return LinForm(-self.slope, -self.offset)

    def scale(self, c: RationalLike) -> "LinForm":
        c = to_rational(c)
        return LinForm(self.slope * c, self.offset * c)

    def subst(self, a: RationalLike, b) -> "LinForm":
        """The form evaluated at a·s + b."""
        a = to_rational(a)
        return LinForm(self.slope * a, self.offset + GaussQ.of(b) * self.slope)

    def is_const(self) -> bool:
        return self.slope == 0

    def is_zero(self) -> bool:
        return self.slope == 0 and self.offset.is_zero()

    def sort_key(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.slope, self.offset.re, self.offset.im)

    def __lt__(self, other: "LinForm") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.slope == 0:
            return str(self.offset)
        if self.offset.is_zero():
            return f"{self.slope}*s"
        offset = str(self.offset)
        if self.offset.im == 0 and self.offset.re < 0:
            return f"{self.slope}*s - {offset[1:]}"
        return f"{self.slope}*s + {offset}"


ZERO_FORM = LinForm()


def linform_eval(f: LinForm, s0) -> GaussQ:
    """slope·s0 + offset, exactly."""
    return GaussQ.of(s0) * f.slope + f.offset
