"""Family-scale runs; these take minutes, deselect with -m 'not slow'."""

import json
import math
import random
from fractions import Fraction
from itertools import product

import pytest

from archimedean_converse.cli.grammar import parse_param
from archimedean_converse.cli.main import EXIT_OK, run
from archimedean_converse.cli.serialization import parameter_from_json, parameter_to_json
from archimedean_converse.converse.families import (
    enumerate_generic,
    enumerate_parameters,
    verify_family,
)
from archimedean_converse.converse.oracle import SearchBounds
from archimedean_converse.factors.genericity import is_generic_L, is_generic_comb
from archimedean_converse.factors.local_factors import (
    L_param,
    eps_param,
    gamma_param_direct,
    gamma_param_fe,
    gamma_twisted,
)
from archimedean_converse.gamma.expr import GammaExpr, ge_div, ge_mul
from archimedean_converse.gamma.numeric import ge_eq, ge_eval
from archimedean_converse.parameters.constituents import CharR, Disc2R, Field, trivial_character
from archimedean_converse.parameters.parameter import (
    Parameter,
    dual,
    normalize,
    tensor_2x2,
)
from conftest import STANDARD_GRID
from strategies import lf

pytestmark = pytest.mark.slow

BOUNDS = SearchBounds.create(3, STANDARD_GRID)
FIELDS = [Field.COMPLEX, Field.REAL]


def family(field, n_max=3):
    return enumerate_parameters(field, n_max, BOUNDS)


@pytest.mark.parametrize("k", range(1, 21))
def test_merged_pair_coherence(k):
    t = Fraction(k, 4)
    merged = Parameter(Field.REAL, (Disc2R(0, t),))
    lam0 = Parameter(Field.REAL, (CharR(0, t),))
    lam1 = Parameter(Field.REAL, (CharR(1, t + 1),))
    for factor in (gamma_param_direct, L_param, eps_param):
        assert ge_eq(factor(merged), ge_mul(factor(lam0), factor(lam1))), factor.__name__


@pytest.mark.parametrize("field", FIELDS)
def test_genericity_routes_agree_on_family(field):
    disagreements = [
        str(p) for p in family(field)
        if is_generic_comb(p).generic != is_generic_L(p).generic
    ]
    assert disagreements == []


@pytest.mark.parametrize("field", FIELDS)
def test_functional_equation_on_family(field):
    failures = [str(p) for p in family(field) if not ge_eq(gamma_param_direct(p), gamma_param_fe(p))]
    assert failures == []


@pytest.mark.parametrize("field", FIELDS)
def test_family(field):
    report = verify_family(field, 2, BOUNDS)
    assert report.ok, "\n".join(report.summary_lines())
    assert report.generic > 0
    assert report.total["separation"] == report.generic * (report.generic - 1) // 2


def test_tensor_commutes_on_grid():
    phis = [Disc2R(N, t) for N in range(5) for t in STANDARD_GRID]
    failures = [(a, b) for a, b in product(phis, repeat=2) if tensor_2x2(a, b) != tensor_2x2(b, a)]
    assert failures == []


@pytest.mark.parametrize("field", FIELDS)
def test_algebraic_invariants_on_family(field):
    trivial = trivial_character(field)
    for p in family(field):
        assert dual(dual(p)) == p
        assert normalize(field, p.constituents) == p
        assert gamma_twisted(p, trivial) == gamma_param_direct(p)


def test_numeric_engine():
    gamma_s = GammaExpr.gamma(lf(1))
    root_pi = math.sqrt(math.pi)
    assert abs(ge_eval(gamma_s, 0.5) - root_pi) / root_pi <= 1e-12
    # Γ(s)Γ(s + 1/2) / (2^{1-2s} √π Γ(2s))
    ratio = ge_div(
        GammaExpr(num=(lf(1), lf(1, Fraction(1, 2)))),
        GammaExpr(exp2=lf(-2, 1), expPi=lf(0, Fraction(1, 2)), num=(lf(2),)),
    )
    rng = random.Random(7)
    for _ in range(10):
        s = complex(rng.uniform(0.1, 3), rng.uniform(-2, 2))
        assert abs(ge_eval(ratio, s) - 1) <= 1e-10


@pytest.mark.parametrize("field", FIELDS)
def test_cli_text_and_json_are_reproducible(field, capsys):
    members = family(field)
    for p in random.Random(3).sample(members, min(100, len(members))):
        assert parse_param(str(p)) == p
        assert parameter_from_json(json.loads(json.dumps(parameter_to_json(p)))) == p
        outputs = []
        for _ in range(2):
            assert run(["factor", str(p), "--json"]) == EXIT_OK
            outputs.append(capsys.readouterr().out.encode("utf-8"))
        assert outputs[0] == outputs[1]


@pytest.mark.parametrize("field", FIELDS)
def test_cli_round_trip(field, capsys, tmp_path):
    members = list(enumerate_generic(field, 2, BOUNDS))
    sample = random.Random(1).sample(members, min(100, len(members)))
    grid = ",".join(str(t) for t in STANDARD_GRID)
    for p in sample:
        assert run(["transcript", str(p), "--maxN", "3", "--tgrid", grid]) == EXIT_OK
        path = tmp_path / "transcript.json"
        path.write_text(capsys.readouterr().out, encoding="utf-8")
        assert run(["reconstruct", str(path), "--json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["text"] == str(p)
