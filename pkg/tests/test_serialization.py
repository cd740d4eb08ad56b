import json

import pytest
from hypothesis import given

from archimedean_converse.arithmetic.scalars import GaussQ, LinForm
from archimedean_converse.cli.grammar import parse_param
from archimedean_converse.cli.serialization import (
    bounds_from_json,
    bounds_to_json,
    dumps,
    gamma_from_json,
    gamma_to_json,
    linform_from_json,
    load_json,
    parameter_from_json,
    parameter_to_json,
    transcript_from_json,
    transcript_to_json,
    verdict_to_json,
)
from archimedean_converse.converse.oracle import ParameterOracle, SearchBounds
from archimedean_converse.errors import FieldMismatchError, ParameterError, ParseError
from archimedean_converse.factors.genericity import is_generic_comb
from archimedean_converse.parameters.constituents import CharC, CharR, Field
from strategies import gamma_exprs, parameters


@given(gamma_exprs)
def test_gamma_survives_json(x):
    assert gamma_from_json(json.loads(dumps(gamma_to_json(x)))) == x


def test_gamma_layout(gamma_s):
    assert gamma_to_json(gamma_s) == {
        "i": 0,
        "exp2": {"s": "0/1", "c": ["0/1", "0/1"]},
        "expPi": {"s": "0/1", "c": ["0/1", "0/1"]},
        "num": [{"s": "1/1", "c": ["0/1", "0/1"]}],
        "den": [],
    }


def test_integer_strings_are_accepted():
    assert linform_from_json({"s": "2", "c": ["-1", "1/2"]}) == LinForm(2, GaussQ(-1, "1/2"))


@pytest.mark.parametrize(
    "data",
    [
        {"s": "1"},
        {"s": "x", "c": ["0", "0"]},
        {"s": "1", "c": ["0"]},
        [1, 2],
    ],
)
def test_malformed_linform(data):
    with pytest.raises(ParameterError):
        linform_from_json(data)


def test_gamma_missing_keys():
    with pytest.raises(ParameterError):
        gamma_from_json({"i": 0, "num": []})


def test_parameter_json():
    data = parameter_to_json(parse_param("R: phi(-2, 1) + lambda(1, 1/2)"))
    assert data["field"] == "R"
    assert data["dim"] == 3
    assert data["constituents"] == [
        {"type": "lambda", "eps": 1, "t": ["1/2", "0/1"]},
        {"type": "phi", "a": -2, "t": ["1/1", "0/1"]},
    ]
    assert parse_param(data["text"]) == parse_param("R: phi(-2, 1) + lambda(1, 1/2)")


@given(parameters)
def test_parameter_survives_json(p):
    assert parameter_from_json(json.loads(dumps(parameter_to_json(p)))) == p


def test_parameter_from_json_normalizes():
    data = {
        "field": "R",
        "constituents": [
            {"type": "lambda", "eps": 0, "t": ["1", "0"]},
            {"type": "lambda", "eps": 1, "t": ["2", "0"]},
        ],
    }
    assert parameter_from_json(data) == parse_param("R: phi(0, 1)")


@pytest.mark.parametrize(
    "data",
    [
        {"field": "C"},
        {"field": "Q", "constituents": []},
        {"field": "C", "constituents": [{"type": "chi", "t": ["0", "0"]}]},
        {"field": "C", "constituents": [{"type": "psi", "a": 0, "t": ["0", "0"]}]},
        {"field": "R", "constituents": [{"type": "lambda", "eps": 2, "t": ["0", "0"]}]},
    ],
)
def test_malformed_parameter(data):
    with pytest.raises(ParameterError):
        parameter_from_json(data)


def test_parameter_field_mismatch():
    data = {"field": "C", "constituents": [{"type": "phi", "a": -1, "t": ["0", "0"]}]}
    with pytest.raises(FieldMismatchError):
        parameter_from_json(data)


def test_verdict_json():
    assert verdict_to_json(is_generic_comb(parse_param("C: chi(0, 0)"))) == {
        "generic": True,
        "witness": None,
    }
    data = verdict_to_json(is_generic_comb(parse_param("C: chi(0, 0) + chi(0, 1)")))
    assert data["generic"] is False
    assert data["witness"]["condition"] == "C3"
    assert data["witness"]["indices"] == [0, 1]


class TestTranscript:
    def test_round_trip(self, small_bounds):
        p = parse_param("C: chi(-1, 0) + chi(0, 1/2)")
        oracle = ParameterOracle(p)
        queries = {chi: oracle.query(chi) for chi in (CharC(0, 0), CharC(5, 0))}
        text = dumps(transcript_to_json(Field.COMPLEX, queries, small_bounds))
        replay, bounds = transcript_from_json(json.loads(text))
        assert bounds == small_bounds
        assert replay.mapping == queries
        assert list(json.loads(text)["gamma"]) == ["chi(-5, 0)", "chi(0, 0)"]

    def test_without_bounds(self):
        data = transcript_to_json(Field.REAL, {})
        assert "bounds" not in data
        replay, bounds = transcript_from_json(data)
        assert bounds is None and replay.field is Field.REAL

    def test_wrong_field_entry(self):
        x = gamma_to_json(ParameterOracle(parse_param("R: lambda(0, 0)")).query(CharR(0, 0)))
        with pytest.raises(ParameterError):
            transcript_from_json({"field": "C", "gamma": {"lambda(0, 0)": x}})

    @pytest.mark.parametrize("data", [{}, {"field": "Q", "gamma": {}}, []])
    def test_malformed(self, data):
        with pytest.raises(ParameterError):
            transcript_from_json(data)


def test_bounds_json():
    bounds = SearchBounds.create(2, ["0", "1/2"])
    assert bounds_from_json(bounds_to_json(bounds)) == bounds
    with pytest.raises(ParameterError):
        bounds_from_json({"maxN": 1})


def test_load_json(tmp_path):
    good = tmp_path / "good.json"
    good.write_text('{"a": 1}', encoding="utf-8")
    assert load_json(good) == {"a": 1}
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    with pytest.raises(ParseError):
        load_json(bad)
    with pytest.raises(ParameterError):
        load_json(tmp_path / "missing.json")
