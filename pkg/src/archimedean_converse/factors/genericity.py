"""
genericity.py

Two independent genericity tests and their cross-check:

* the combinatorial inequalities on integer-difference pairs
  (C3 over C; Ra, Rb, Rc over R), and
* holomorphy of L(s, p ⊗ p^∨) at s = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional, Tuple

from archimedean_converse.arithmetic.scalars import int_diff
from archimedean_converse.auto_config.logging_config import logger
from archimedean_converse.errors import GenericityMismatchError
from archimedean_converse.factors.local_factors import rankin_selberg_L
from archimedean_converse.gamma.divisor import order_at
from archimedean_converse.parameters.constituents import CharR, Disc2R, Field
from archimedean_converse.parameters.parameter import Parameter


@dataclass(frozen=True)
class Witness:
    condition: str          # C3, Ra, Rb, Rc or L-pole
    indices: Tuple[int, ...]  # positions in Parameter.constituents
    instance: str

    def __str__(self) -> str:
        where = f" at {list(self.indices)}" if self.indices else ""
        return f"{self.condition}{where}: {self.instance}"


@dataclass(frozen=True)
class GenericityVerdict:
    generic: bool
    witness: Optional[Witness] = None

    def __post_init__(self) -> None:
        if self.generic == (self.witness is not None):
            raise ValueError("a witness is present exactly when the verdict is non-generic")

    def __str__(self) -> str:
        return "generic" if self.generic else f"not generic ({self.witness})"


GENERIC = GenericityVerdict(True)


def _bounded(low: int, value: int, high: int) -> bool:
    return low <= value <= high


def _check_complex(p: Parameter) -> GenericityVerdict:
    cs = p.constituents
    for i, j in permutations(range(len(cs)), 2):
        if cs[i].N > cs[j].N:
            continue
        d = int_diff(cs[i].t, cs[j].t)
        if d is None:
            continue
        if not _bounded(0, d, cs[j].N - cs[i].N):
            instance = f"0 <= t_j - t_i = {d} <= N_j - N_i = {cs[j].N - cs[i].N}"
            return GenericityVerdict(False, Witness("C3", (i, j), instance))
    return GENERIC


def _check_real(p: Parameter) -> GenericityVerdict:
    cs = p.constituents
    lams = [i for i, c in enumerate(cs) if isinstance(c, CharR)]
    phis = [i for i, c in enumerate(cs) if isinstance(c, Disc2R)]

    for i, j in combinations(lams, 2):
        d = int_diff(cs[j].t, cs[i].t)
        if d is not None and d % 2:
            instance = f"t_i - t_j = {d} is odd"
            return GenericityVerdict(False, Witness("Ra", (i, j), instance))

    for i in phis:
        for j in lams:
            phi, lam = cs[i], cs[j]
            d = int_diff(lam.t, phi.t)
            if d is None:
                continue
            if not _bounded(-lam.eps, d, phi.N - lam.eps):
                instance = f"{-lam.eps} <= u_i - t_j = {d} <= {phi.N - lam.eps}"
                return GenericityVerdict(False, Witness("Rb", (i, j), instance))

    for i, j in permutations(phis, 2):
        if cs[i].N > cs[j].N:
            continue
        d = int_diff(cs[i].t, cs[j].t)
        if d is None:
            continue
        if not _bounded(0, d, cs[j].N - cs[i].N):
            instance = f"0 <= u_j - u_i = {d} <= N_j - N_i = {cs[j].N - cs[i].N}"
            return GenericityVerdict(False, Witness("Rc", (i, j), instance))
    return GENERIC


def is_generic_comb(p: Parameter) -> GenericityVerdict:
    if p.field is Field.COMPLEX:
        return _check_complex(p)
    return _check_real(p)


def is_generic_L(p: Parameter) -> GenericityVerdict:
    order = order_at(rankin_selberg_L(p), 1)
    if order <= 0:
        return GENERIC
    return GenericityVerdict(
        False, Witness("L-pole", (), f"L(s, p x p^v) has a pole of order {order} at s=1")
    )


def genericity_cross_check(p: Parameter) -> bool:
    """True when both routes agree; raises GenericityMismatchError otherwise."""
    comb, analytic = is_generic_comb(p), is_generic_L(p)
    if comb.generic != analytic.generic:
        logger.error(f"Genericity routes disagree for {p}: {comb} vs {analytic}")
        raise GenericityMismatchError(p, comb, analytic)
    return True
