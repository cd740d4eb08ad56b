"""
serialization.py

JSON forms of the objects the command line prints or reads back.

Rationals are always written as ``"p/q"`` strings so that payloads are exact
and byte-for-byte reproducible; readers also accept a bare ``"p"``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from archimedean_converse.arithmetic.scalars import GaussQ, LinForm, rational_str, to_rational
from archimedean_converse.cli.grammar import parse_character, parse_gq
from archimedean_converse.converse.oracle import SearchBounds, TranscriptOracle
from archimedean_converse.errors import ParameterError, ParseError
from archimedean_converse.factors.genericity import GenericityVerdict
from archimedean_converse.gamma.expr import GammaExpr
from archimedean_converse.parameters.constituents import (
    CharC,
    CharR,
    Character,
    Constituent,
    Disc2R,
    Field,
    character_field,
)
from archimedean_converse.parameters.parameter import Parameter, normalize


def gauss_to_json(z: GaussQ) -> List[str]:
    return [rational_str(z.re), rational_str(z.im)]


def gauss_from_json(data: Any) -> GaussQ:
    if not isinstance(data, list) or len(data) != 2:
        raise ParameterError(f"expected [re, im], got {data!r}")
    return GaussQ(to_rational(data[0]), to_rational(data[1]))


def linform_to_json(f: LinForm) -> Dict[str, Any]:
    return {"s": rational_str(f.slope), "c": gauss_to_json(f.offset)}


def linform_from_json(data: Any) -> LinForm:
    if not isinstance(data, dict) or set(data) != {"s", "c"}:
        raise ParameterError(f"expected a linear form {{'s': ..., 'c': [...]}}, got {data!r}")
    return LinForm(to_rational(data["s"]), gauss_from_json(data["c"]))


def gamma_to_json(x: GammaExpr) -> Dict[str, Any]:
    return {
        "i": x.root4,
        "exp2": linform_to_json(x.exp2),
        "expPi": linform_to_json(x.expPi),
        "num": [linform_to_json(f) for f in x.num],
        "den": [linform_to_json(f) for f in x.den],
    }


def gamma_from_json(data: Any) -> GammaExpr:
    if not isinstance(data, dict):
        raise ParameterError(f"expected a gamma expression object, got {data!r}")
    missing = {"i", "exp2", "expPi", "num", "den"} - set(data)
    if missing:
        raise ParameterError(f"gamma expression is missing {sorted(missing)}")
    return GammaExpr(
        root4=data["i"],
        exp2=linform_from_json(data["exp2"]),
        expPi=linform_from_json(data["expPi"]),
        num=tuple(linform_from_json(f) for f in data["num"]),
        den=tuple(linform_from_json(f) for f in data["den"]),
    )


def _constituent_to_json(c: Constituent) -> Dict[str, Any]:
    if isinstance(c, CharR):
        return {"type": "lambda", "eps": c.eps, "t": gauss_to_json(c.t)}
    kind = "chi" if isinstance(c, CharC) else "phi"
    # subscript pair as written in the grammar
    return {"type": kind, "a": -c.N, "t": gauss_to_json(c.t)}


def parameter_to_json(p: Parameter) -> Dict[str, Any]:
    return {
        "field": p.field.value,
        "dim": p.dim,
        "text": str(p),
        "constituents": [_constituent_to_json(c) for c in p],
    }


def _constituent_from_json(data: Any) -> Constituent:
    if not isinstance(data, dict) or "type" not in data or "t" not in data:
        raise ParameterError(f"expected a constituent object, got {data!r}")
    t = gauss_from_json(data["t"])
    kind = data["type"]
    try:
        if kind == "lambda":
            return CharR(data["eps"], t)
        if kind in ("chi", "phi"):
            cls = CharC if kind == "chi" else Disc2R
            return cls(-data["a"], t)
    except (KeyError, TypeError) as e:
        raise ParameterError(f"malformed {kind} constituent: {data!r}") from e
    raise ParameterError(f"unknown constituent type {kind!r}")


def parameter_from_json(data: Any) -> Parameter:
    """Read back ``parameter_to_json`` output; dim and text are ignored."""
    if not isinstance(data, dict) or "field" not in data or "constituents" not in data:
        raise ParameterError("a parameter needs 'field' and 'constituents' entries")
    try:
        field = Field(data["field"])
    except ValueError:
        raise ParameterError(f"unknown field {data['field']!r}") from None
    return normalize(field, [_constituent_from_json(c) for c in data["constituents"]])


def character_to_json(chi: Optional[Character]) -> Optional[str]:
    return None if chi is None else str(chi)


def verdict_to_json(v: GenericityVerdict) -> Dict[str, Any]:
    witness = None
    if v.witness is not None:
        witness = {
            "condition": v.witness.condition,
            "indices": list(v.witness.indices),
            "instance": v.witness.instance,
        }
    return {"generic": v.generic, "witness": witness}


def bounds_to_json(bounds: SearchBounds) -> Dict[str, Any]:
    return {
        "maxN": bounds.max_n,
        "tGrid": [str(t) for t in bounds.t_grid],
        "maxTwistOffset": bounds.max_twist_offset,
    }


def bounds_from_json(data: Any) -> SearchBounds:
    try:
        return SearchBounds.create(
            int(data["maxN"]),
            [parse_gq(t) for t in data["tGrid"]],
            data.get("maxTwistOffset"),
        )
    except (AttributeError, KeyError, TypeError) as e:
        raise ParameterError(f"malformed bounds object: {data!r}") from e


def transcript_to_json(
    field: Field,
    queries: Mapping[Character, GammaExpr],
    bounds: Optional[SearchBounds] = None,
) -> Dict[str, Any]:
    """Transcript payload; queries keep the order in which they were asked."""
    payload: Dict[str, Any] = {
        "field": field.value,
        "gamma": {str(chi): gamma_to_json(x) for chi, x in queries.items()},
    }
    if bounds is not None:
        payload["bounds"] = bounds_to_json(bounds)
    return payload


def transcript_from_json(data: Any) -> Tuple[TranscriptOracle, Optional[SearchBounds]]:
    """The oracle stored in a transcript, plus its bounds when recorded."""
    if not isinstance(data, dict) or "field" not in data or "gamma" not in data:
        raise ParameterError("a transcript needs 'field' and 'gamma' entries")
    try:
        field = Field(data["field"])
    except ValueError:
        raise ParameterError(f"unknown field {data['field']!r}") from None
    mapping = {}
    for key, expr in data["gamma"].items():
        chi = parse_character(key)
        if character_field(chi) is not field:
            raise ParameterError(f"transcript over {field.value} contains {key}")
        mapping[chi] = gamma_from_json(expr)
    bounds = bounds_from_json(data["bounds"]) if "bounds" in data else None
    return TranscriptOracle(field, mapping), bounds


def dumps(data: Any) -> str:
    """The canonical text of a JSON payload."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def load_json(path: Union[Path, str]) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(str(path), None, f"invalid JSON in {path}: {e}") from e
    except OSError as e:
        raise ParameterError(f"cannot read {path}: {e}") from e
