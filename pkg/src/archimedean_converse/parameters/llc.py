"""
llc.py

Pretty-printer for the inducing data attached to a parameter by the local
Langlands correspondence. Constituents are listed in the Langlands situation,
i.e. by decreasing real part of t; the representation is the unique
irreducible quotient of the induced representation.
"""

from typing import List

from archimedean_converse.arithmetic.scalars import GaussQ
from archimedean_converse.parameters.constituents import CharC, CharR, Constituent, Disc2R, Field
from archimedean_converse.parameters.parameter import Parameter


def _exp(x: GaussQ) -> str:
    return "{" + str(x) + "}"


def describe_constituent(c: Constituent) -> str:
    if isinstance(c, CharC):
        return f"{c}: character z^{_exp(GaussQ(-c.N))} ||z||^{_exp(c.t)} of GL_1(C)"
    if isinstance(c, CharR):
        if c.eps == 0 and c.t.is_zero():
            return f"{c}: trivial character of GL_1(R)"
        abs_part = f"|.|^{_exp(c.t - c.eps)}"
        return f"{c}: character {'sgn ⊗ ' if c.eps else ''}{abs_part} of GL_1(R)"
    if isinstance(c, Disc2R):
        shift = c.t - GaussQ(c.N) / 2
        kind = "limit of discrete series" if c.N == 0 else "discrete series"
        return f"{c}: {kind} D_{c.N} ⊗ |det|^{_exp(shift)} of GL_2(R)"
    raise TypeError(f"unknown constituent {c!r}")


def describe_llc(p: Parameter) -> str:
    group = "GL_{}({})".format(p.dim, "C" if p.field is Field.COMPLEX else "R")
    ordered = sorted(p.constituents, key=lambda c: -c.t.re)
    lines: List[str] = []
    if len(ordered) <= 1:
        lines.append(f"Representation of {group} attached to {p}:")
    else:
        lines.append(f"Unique irreducible quotient of the representation of {group} induced from:")
    lines.extend(f"  {describe_constituent(c)}" for c in ordered)
    return "\n".join(lines)
