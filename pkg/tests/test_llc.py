from archimedean_converse.cli.grammar import parse_param
from archimedean_converse.parameters.llc import describe_llc


def test_discrete_series_shift():
    text = describe_llc(parse_param("R: phi(-3, 2)"))
    assert "D_3 ⊗ |det|^{1/2}" in text
    assert "discrete series" in text


def test_limit_of_discrete_series():
    assert "limit of discrete series D_0" in describe_llc(parse_param("R: phi(0, 1)"))


def test_trivial_character():
    assert "trivial character of GL_1(R)" in describe_llc(parse_param("R: lambda(0, 0)"))


def test_sign_character():
    assert "sgn ⊗ |.|^{2}" in describe_llc(parse_param("R: lambda(1, 3)"))


def test_langlands_order():
    lines = describe_llc(parse_param("C: chi(-1, 1) + chi(0, 0)")).splitlines()
    assert lines[0].startswith("Unique irreducible quotient")
    assert "GL_2(C)" in lines[0]
    assert lines[1].strip().startswith("chi(-1, 1)")
    assert lines[2].strip().startswith("chi(0, 0)")
