"""
oracle.py

Sources of twisted gamma-factor data for the converse machinery, and the
search bounds that make "M large enough" effective.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Protocol, Tuple

from archimedean_converse.arithmetic.scalars import GaussQ, to_rational
from archimedean_converse.auto_config.environment import get_default_bounds_spec
from archimedean_converse.auto_config.logging_config import logger
from archimedean_converse.errors import FieldMismatchError, MissingQueryError, ParameterError
from archimedean_converse.factors.local_factors import gamma_twisted
from archimedean_converse.gamma.expr import GammaExpr
from archimedean_converse.parameters.constituents import Character, Field, character_field
from archimedean_converse.parameters.parameter import Parameter


class GammaOracle(Protocol):
    field: Field

    def query(self, chi: Character) -> GammaExpr:
        ...


def _check_field(field: Field, chi: Character) -> None:
    if character_field(chi) is not field:
        raise FieldMismatchError(f"character {chi} queried from an oracle over {field.value}")


class ParameterOracle:
    """γ(s, p ⊗ chi, ψ) computed from a known parameter."""

    def __init__(self, p: Parameter) -> None:
        self.parameter = p
        self.field = p.field

    def query(self, chi: Character) -> GammaExpr:
        _check_field(self.field, chi)
        return gamma_twisted(self.parameter, chi)


class TranscriptOracle:
    """A fixed table character -> GammaExpr, typically loaded from JSON."""

    def __init__(self, field: Field, mapping: Mapping[Character, GammaExpr]) -> None:
        self.field = field
        for chi in mapping:
            _check_field(field, chi)
        self.mapping: Dict[Character, GammaExpr] = dict(mapping)

    def query(self, chi: Character) -> GammaExpr:
        _check_field(self.field, chi)
        try:
            return self.mapping[chi]
        except KeyError:
            raise MissingQueryError("transcript has no entry for this character", character=chi) from None


class RecordingOracle:
    """Wraps another oracle and remembers every query in first-asked order."""

    def __init__(self, inner: GammaOracle) -> None:
        self.inner = inner
        self.field = inner.field
        self.transcript: Dict[Character, GammaExpr] = {}

    def query(self, chi: Character) -> GammaExpr:
        if chi not in self.transcript:
            self.transcript[chi] = self.inner.query(chi)
        return self.transcript[chi]


def t_span(points: Iterable[GaussQ]) -> int:
    """max ⌈|Re z|⌉ + ⌈|Im z|⌉ over the points (0 for none)."""
    return max((math.ceil(abs(z.re)) + math.ceil(abs(z.im)) for z in points), default=0)


def default_max_twist_offset(max_n: int, t_grid: Iterable[GaussQ]) -> int:
    return 2 * max_n + 2 + 2 * t_span(t_grid)


@dataclass(frozen=True)
class SearchBounds:
    max_n: int
    t_grid: Tuple[GaussQ, ...]
    max_twist_offset: int

    def __post_init__(self) -> None:
        if self.max_n < 0:
            raise ParameterError(f"maxN must be non-negative, got {self.max_n}")
        grid = tuple(sorted(set(GaussQ.of(t) for t in self.t_grid), key=GaussQ.sort_key))
        if not grid:
            raise ParameterError("tGrid must not be empty")
        object.__setattr__(self, "t_grid", grid)
        if self.max_twist_offset <= self.max_n:
            raise ParameterError(
                f"maxTwistOffset={self.max_twist_offset} must exceed maxN={self.max_n}"
            )

    @classmethod
    def create(
        cls,
        max_n: int,
        t_grid: Iterable,
        max_twist_offset: Optional[int] = None,
    ) -> "SearchBounds":
        grid = tuple(GaussQ.of(t) for t in t_grid)
        if max_twist_offset is None:
            max_twist_offset = default_max_twist_offset(max_n, grid)
        return cls(max_n, grid, max_twist_offset)


def parse_grid(text: str) -> Tuple[GaussQ, ...]:
    """Comma-separated rationals, e.g. ``0,1/2,1``."""
    try:
        return tuple(GaussQ(to_rational(part)) for part in text.split(",") if part.strip())
    except ParameterError as e:
        raise ParameterError(f"invalid t grid {text!r}: {e}") from e


def default_bounds() -> SearchBounds:
    max_n, grid_text = get_default_bounds_spec()
    bounds = SearchBounds.create(max_n, parse_grid(grid_text))
    logger.debug(f"Default bounds: maxN={bounds.max_n}, tGrid size {len(bounds.t_grid)}, "
                 f"maxTwistOffset={bounds.max_twist_offset}")
    return bounds
