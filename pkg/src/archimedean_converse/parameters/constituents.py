"""
constituents.py

Irreducible pieces of semisimple Weil-group representations.

    CharC(N, t)   the character z -> z^{-N} ||z||^t of C^x       (written chi_{-N,t})
    CharR(eps, t) the character r -> r^{-eps} |r|^t of R^x       (written lambda_{eps,t})
    Disc2R(N, t)  the 2-dim representation of W_R induced from chi_{-N,t}  (phi_{-N,t})

The textual form of every constituent follows the command-line grammar:
``chi(a, t)`` / ``phi(a, t)`` carry the subscript pair exactly as written,
so ``chi(-2, t)`` is CharC(N=2, t).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple, Union

from archimedean_converse.arithmetic.scalars import GaussQ
from archimedean_converse.errors import FieldMismatchError, ParameterError

SortKey = Tuple[int, int, Fraction, Fraction, int]


class Field(Enum):
    REAL = "R"
    COMPLEX = "C"


def _check_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParameterError(f"{name} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class CharC:
    N: int
    t: GaussQ

    field = Field.COMPLEX
    dim = 1

    def __post_init__(self) -> None:
        _check_int(self.N, "N")
        object.__setattr__(self, "t", GaussQ.of(self.t))

    def sort_key(self) -> SortKey:
        return (0, self.N, self.t.re, self.t.im, 0)

    def dual(self) -> "CharC":
        return CharC(-self.N, -self.t)

    def twist(self, chi: "CharC") -> "CharC":
        if not isinstance(chi, CharC):
            raise FieldMismatchError(f"cannot twist {self} by {chi}")
        return CharC(self.N + chi.N, self.t + chi.t)

    def __str__(self) -> str:
        return f"chi({-self.N}, {self.t})"


@dataclass(frozen=True)
class CharR:
    eps: int
    t: GaussQ

    field = Field.REAL
    dim = 1

    def __post_init__(self) -> None:
        if _check_int(self.eps, "eps") not in (0, 1):
            raise ParameterError(f"eps must be 0 or 1, got {self.eps}")
        object.__setattr__(self, "t", GaussQ.of(self.t))

    def sort_key(self) -> SortKey:
        return (1, 0, self.t.re, self.t.im, self.eps)

    def dual(self) -> "CharR":
        return CharR(self.eps, -self.t + 2 * self.eps)

    def twist(self, chi: "CharR") -> "CharR":
        """lambda_{eps,t} ⊗ lambda_{delta,s} = lambda_{eps+delta-eta, t+s-eta}, eta = 2 iff eps = delta = 1."""
        if not isinstance(chi, CharR):
            raise FieldMismatchError(f"cannot twist {self} by {chi}")
        eta = 2 if self.eps == 1 and chi.eps == 1 else 0
        return CharR(self.eps + chi.eps - eta, self.t + chi.t - eta)

    def __str__(self) -> str:
        return f"lambda({self.eps}, {self.t})"


@dataclass(frozen=True)
class Disc2R:
    N: int
    t: GaussQ

    field = Field.REAL
    dim = 2

    def __post_init__(self) -> None:
        _check_int(self.N, "N")
        object.__setattr__(self, "t", GaussQ.of(self.t))

    def normalized(self) -> "Disc2R":
        """phi_{-N,t} = phi_{N,t-N}; the representative with N >= 0."""
        if self.N >= 0:
            return self
        return Disc2R(-self.N, self.t - self.N)

    def sort_key(self) -> SortKey:
        return (2, self.N, self.t.re, self.t.im, 0)

    def dual(self) -> "Disc2R":
        return Disc2R(self.N, self.N - self.t).normalized()

    def twist(self, chi: CharR) -> "Disc2R":
        if not isinstance(chi, CharR):
            raise FieldMismatchError(f"cannot twist {self} by {chi}")
        return Disc2R(self.N, self.t + chi.t - chi.eps).normalized()

    def __str__(self) -> str:
        return f"phi({-self.N}, {self.t})"


Constituent = Union[CharC, CharR, Disc2R]
Character = Union[CharC, CharR]


def trivial_character(field: Field) -> Character:
    return CharC(0, GaussQ()) if field is Field.COMPLEX else CharR(0, GaussQ())


def character_field(chi: Character) -> Field:
    if isinstance(chi, (CharC, CharR)):
        return chi.field
    raise ParameterError(f"not a one-dimensional character: {chi!r}")
