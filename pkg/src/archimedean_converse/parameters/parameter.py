"""
parameter.py

Langlands parameters as multisets of irreducible constituents, with the
operations the local factors and the converse machinery are built on.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from archimedean_converse.arithmetic.scalars import GaussQ, int_diff, residue_mod
from archimedean_converse.errors import FieldMismatchError, ParameterError
from archimedean_converse.parameters.constituents import (
    CharC,
    CharR,
    Character,
    Constituent,
    Disc2R,
    Field,
)

_FIELD_TYPES = {
    Field.COMPLEX: (CharC,),
    Field.REAL: (CharR, Disc2R),
}


@dataclass(frozen=True)
class Parameter:
    """
    A semisimple parameter, stored as a sorted tuple of constituents.

    Equality is multiset equality. Build through ``normalize`` unless the
    constituents are already known to be normalized.
    """

    field: Field
    constituents: Tuple[Constituent, ...] = ()

    def __post_init__(self) -> None:
        allowed = _FIELD_TYPES[self.field]
        for c in self.constituents:
            if not isinstance(c, allowed):
                raise FieldMismatchError(f"{c!r} is not a constituent over {self.field.value}")
        object.__setattr__(
            self, "constituents", tuple(sorted(self.constituents, key=lambda c: c.sort_key()))
        )

    @property
    def dim(self) -> int:
        return sum(c.dim for c in self.constituents)

    @property
    def is_complex(self) -> bool:
        return self.field is Field.COMPLEX

    def __iter__(self):
        return iter(self.constituents)

    def __len__(self) -> int:
        return len(self.constituents)

    def __str__(self) -> str:
        if not self.constituents:
            return f"{self.field.value}: (empty)"
        return f"{self.field.value}: " + " + ".join(str(c) for c in self.constituents)


def _merge_phi0(items: List[Constituent]) -> List[Constituent]:
    """Replace every coexisting pair lambda_{0,t}, lambda_{1,t+1} by phi_{0,t}."""
    counts = Counter(c for c in items if isinstance(c, CharR))
    out: List[Constituent] = [c for c in items if not isinstance(c, CharR)]
    for lam, n in sorted(counts.items(), key=lambda kv: kv[0].sort_key()):
        if lam.eps != 0:
            continue
        partner = CharR(1, lam.t + 1)
        pairs = min(n, counts.get(partner, 0))
        if pairs:
            counts[lam] -= pairs
            counts[partner] -= pairs
            out.extend(Disc2R(0, lam.t) for _ in range(pairs))
    for lam, n in counts.items():
        out.extend(lam for _ in range(n))
    return out


def normalize(field: Field, raw: Iterable[Constituent]) -> Parameter:
    """
    Build a normalized parameter from an arbitrary constituent list.

    Over R every phi gets N >= 0 and lambda_{0,t} + lambda_{1,t+1} pairs are
    merged into phi_{0,t}; over C nothing changes beyond sorting.
    """
    items = list(raw)
    if field is Field.REAL:
        items = [c.normalized() if isinstance(c, Disc2R) else c for c in items]
        for c in items:
            if not isinstance(c, (CharR, Disc2R)):
                raise FieldMismatchError(f"{c} is not a constituent over R")
        items = _merge_phi0(items)
    return Parameter(field, tuple(items))


def dual(p: Parameter) -> Parameter:
    return normalize(p.field, (c.dual() for c in p))


def _check_character(field: Field, chi: Character) -> None:
    expected = CharC if field is Field.COMPLEX else CharR
    if not isinstance(chi, expected):
        raise FieldMismatchError(f"character {chi} does not match a parameter over {field.value}")


def twist_gl1(p: Parameter, chi: Character) -> Parameter:
    _check_character(p.field, chi)
    return normalize(p.field, (c.twist(chi) for c in p))


def _tensor_raw(a: Disc2R, b: Disc2R) -> List[Disc2R]:
    return [Disc2R(a.N + b.N, a.t + b.t), Disc2R(a.N - b.N, a.t + b.t - b.N)]


def tensor_2x2(a: Disc2R, b: Disc2R) -> Parameter:
    """phi_{-N,t} ⊗ phi_{-M,s} = phi_{-(N+M), t+s} + phi_{-(N-M), t+s-M}."""
    if not isinstance(a, Disc2R) or not isinstance(b, Disc2R):
        raise ParameterError("tensor_2x2 takes two 2-dimensional constituents")
    return normalize(Field.REAL, _tensor_raw(a.normalized(), b.normalized()))


def _pair_tensor(x: Constituent, y: Constituent) -> List[Constituent]:
    if isinstance(x, CharC):
        return [x.twist(y)]
    if isinstance(x, CharR) and isinstance(y, CharR):
        return [x.twist(y)]
    if isinstance(x, Disc2R) and isinstance(y, CharR):
        return [x.twist(y)]
    if isinstance(x, CharR) and isinstance(y, Disc2R):
        return [y.twist(x)]
    return _tensor_raw(x, y)


def rankin_selberg(p: Parameter) -> Parameter:
    """The parameter of p ⊗ p^∨, expanded pairwise and renormalized."""
    duals = [c.dual() for c in p]
    raw: List[Constituent] = []
    for x in p:
        for y in duals:
            raw.extend(_pair_tensor(x, y))
    return normalize(p.field, raw)


def rankin_selberg_display(p: Parameter) -> Parameter:
    """
    p ⊗ p^∨ for a real parameter from the closed-form family decomposition:

        lambda_i ⊗ lambda_j^∨ = lambda_{e_i+e_j-h, t_i-t_j+2e_j-h}   (h = 2 iff e_i = e_j = 1)
        phi_i ⊗ lambda_j^∨    = phi_{-N_i, u_i-t_j+e_j}
        lambda_j ⊗ phi_i^∨    = phi_{-N_i, N_i-u_i+t_j-e_j}
        phi_i ⊗ phi_j^∨       = phi_{-(N_i+N_j), u_i+N_j-u_j} + phi_{-(N_i-N_j), u_i-u_j}

    Independent of ``rankin_selberg``; the two are compared in the tests.
    """
    if p.field is not Field.REAL:
        raise FieldMismatchError("the closed-form decomposition is stated over R")
    lams = [c for c in p if isinstance(c, CharR)]
    phis = [c for c in p if isinstance(c, Disc2R)]
    raw: List[Constituent] = []
    for li in lams:
        for lj in lams:
            h = 2 if li.eps == 1 and lj.eps == 1 else 0
            raw.append(CharR(li.eps + lj.eps - h, li.t - lj.t + 2 * lj.eps - h))
    for fi in phis:
        for lj in lams:
            raw.append(Disc2R(fi.N, fi.t - lj.t + lj.eps))
            raw.append(Disc2R(fi.N, fi.N - fi.t + lj.t - lj.eps))
    for fi in phis:
        for fj in phis:
            raw.append(Disc2R(fi.N + fj.N, fi.t + fj.N - fj.t))
            raw.append(Disc2R(fi.N - fj.N, fi.t - fj.t))
    return normalize(Field.REAL, raw)


def sim_related(a: Constituent, b: Constituent) -> bool:
    """a ~ b iff their t-parameters differ by a rational integer."""
    if a.field is not b.field:
        raise FieldMismatchError(f"{a} and {b} live over different fields")
    return int_diff(a.t, b.t) is not None


def _sim_class(c: Constituent) -> GaussQ:
    return residue_mod(c.t, 1)[0]


def partition_sim(p: Parameter) -> List[Parameter]:
    """Maximal ~-blocks of p, ordered by the class representative."""
    blocks: Dict[GaussQ, List[Constituent]] = defaultdict(list)
    for c in p:
        blocks[_sim_class(c)].append(c)
    return [Parameter(p.field, tuple(blocks[r])) for r in sorted(blocks, key=GaussQ.sort_key)]
