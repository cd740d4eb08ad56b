"""
separation.py

Search for a GL(1) twist whose gamma factors tell two parameters apart.
"""

from __future__ import annotations

from typing import Iterator, Optional

from archimedean_converse.arithmetic.scalars import GaussQ
from archimedean_converse.auto_config.logging_config import logger
from archimedean_converse.converse.oracle import SearchBounds
from archimedean_converse.errors import FieldMismatchError, SearchExhaustedError
from archimedean_converse.factors.local_factors import gamma_twisted
from archimedean_converse.gamma.numeric import ge_eq
from archimedean_converse.parameters.constituents import CharC, CharR, Character, Field
from archimedean_converse.parameters.parameter import Parameter


def _offsets(limit: int) -> Iterator[int]:
    """0, 1, -1, 2, -2, ..., limit, -limit."""
    yield 0
    for m in range(1, limit + 1):
        yield m
        yield -m


def twist_candidates(field: Field, bounds: SearchBounds) -> Iterator[Character]:
    """
    Characters tried by ``find_distinguishing_twist``, in order.

    Over C: chi_{-M,0} for |M| <= maxTwistOffset. Over R: lambda_{0,0},
    lambda_{1,0}, then lambda_{delta,k} for nonzero integers |k| <= maxTwistOffset.
    """
    if field is Field.COMPLEX:
        for m in _offsets(bounds.max_twist_offset):
            yield CharC(m, GaussQ())
        return
    for k in _offsets(bounds.max_twist_offset):
        for delta in (0, 1):
            yield CharR(delta, GaussQ(k))


def find_distinguishing_twist(p: Parameter, q: Parameter, bounds: SearchBounds) -> Optional[Character]:
    """A character whose twisted gamma factors tell p and q apart; None when p == q."""
    if p.field is not q.field:
        raise FieldMismatchError(f"cannot compare {p} with {q}")
    if p == q:
        return None
    tried = 0
    for chi in twist_candidates(p.field, bounds):
        tried += 1
        if not ge_eq(gamma_twisted(p, chi), gamma_twisted(q, chi)):
            logger.debug(f"{chi} separates {p} from {q} after {tried} candidates")
            return chi
    raise SearchExhaustedError(p, q, tried)
