from fractions import Fraction
from itertools import product
from math import comb

from archimedean_converse.converse.families import (
    CHECKS,
    constituent_universe,
    enumerate_generic,
    enumerate_parameters,
    verify_family,
)
from archimedean_converse.converse.oracle import SearchBounds
from archimedean_converse.factors.genericity import is_generic_L
from archimedean_converse.parameters.constituents import CharC, CharR, Disc2R, Field
from archimedean_converse.parameters.parameter import normalize


def brute_force_family(field, n_max, bounds):
    """Every ordered choice of constituents, normalized and deduplicated."""
    ns, ts = range(bounds.max_n + 1), bounds.t_grid
    if field is Field.COMPLEX:
        pieces = [CharC(n, t) for n, t in product(ns, ts)]
    else:
        pieces = [CharR(e, t) for e, t in product((0, 1), ts)] + [Disc2R(n, t) for n, t in product(ns, ts)]
    found = set()
    for size in range(1, n_max + 1):
        for choice in product(pieces, repeat=size):
            if sum(c.dim for c in choice) <= n_max:
                found.add(normalize(field, choice))
    return found


def test_universe_sizes(small_bounds):
    assert len(constituent_universe(Field.COMPLEX, small_bounds)) == 4
    # two signs and two discrete series weights over two t values
    assert len(constituent_universe(Field.REAL, small_bounds)) == 8


def test_complex_counts():
    bounds = SearchBounds.create(2, (0, 1))
    members = enumerate_parameters(Field.COMPLEX, 2, bounds)
    # multisets of size 1 and 2 drawn from six characters
    assert len(members) == sum(comb(6 + k - 1, k) for k in (1, 2)) == 27
    assert len(list(enumerate_generic(Field.COMPLEX, 2, bounds))) == 21


def test_enumeration_matches_brute_force():
    bounds = SearchBounds.create(2, (0, Fraction(1, 2), 1))
    for field in (Field.COMPLEX, Field.REAL):
        members = enumerate_parameters(field, 2, bounds)
        expected = brute_force_family(field, 2, bounds)
        assert set(members) == expected
        generic = list(enumerate_generic(field, 2, bounds))
        assert len(generic) == sum(is_generic_L(p).generic for p in expected)


def test_members_are_distinct_and_ordered():
    bounds = SearchBounds.create(1, (0, Fraction(1, 2)))
    members = enumerate_parameters(Field.REAL, 2, bounds)
    assert len(set(members)) == len(members)
    dims = [p.dim for p in members]
    assert dims == sorted(dims)
    assert all(p.dim <= 2 for p in members)


def test_real_sign_family():
    members = enumerate_parameters(Field.REAL, 2, SearchBounds.create(0, (0,)))
    assert sorted(map(str, members)) == [
        "R: lambda(0, 0)",
        "R: lambda(0, 0) + lambda(0, 0)",
        "R: lambda(0, 0) + lambda(1, 0)",
        "R: lambda(1, 0)",
        "R: lambda(1, 0) + lambda(1, 0)",
        "R: phi(0, 0)",
    ]


def test_verify_small_complex_family(small_bounds):
    report = verify_family(Field.COMPLEX, 1, small_bounds, max_workers=2)
    assert report.ok
    assert report.members == report.generic == 4
    assert report.total["separation"] == 6
    assert all(report.passed[c] == report.total[c] for c in CHECKS)


def test_verify_small_real_family():
    report = verify_family(Field.REAL, 2, SearchBounds.create(0, (0,)), max_workers=2)
    assert report.ok, report.summary_lines()
    data = report.to_dict()
    assert data["field"] == "R"
    assert data["checks"]["round_trip"]["total"] == data["generic"]
    assert data["bounds"]["tGrid"] == ["0"]


def test_empty_family(small_bounds):
    report = verify_family(Field.COMPLEX, 0, small_bounds)
    assert report.ok
    assert report.members == 0
    assert report.to_dict()["checks"]["separation"] == {"passed": 0, "total": 0}
