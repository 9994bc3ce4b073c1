import pytest
from hypothesis import given
from hypothesis import strategies as st

from gentle_derived.dsl import (
    EXAMPLE_GENTLE_TEXT,
    ParseError,
    builtin,
    gamma,
    gamma_prime,
    lambda_family,
    parse,
    parse_family,
    serialize,
)
from gentle_derived.errors import ParameterOutOfRange
from gentle_derived.quiver import make_presentation


def kinds(text):
    with pytest.raises(ParseError) as e:
        parse(text)
    return [d.kind for d in e.value.diagnostics]


def test_example_parses():
    P = parse(EXAMPLE_GENTLE_TEXT)
    assert P.vertices == (1, 2, 3)
    names = {a.name: a.id for a in P.arrows}
    # "rel b a": b then a vanishes
    assert P.is_zero_composite(names["b"], names["a"])
    assert P.is_zero_composite(names["a"], names["g"])
    assert not P.is_zero_composite(names["a"], names["b"])


def test_comments_degrees_and_ids():
    P = parse("vertices: 0 1  # two vertices\narrow x: 0 -> 1 deg -2 id 7\n")
    (a,) = P.arrows
    assert (a.id, a.degree, a.name) == (7, -2, "x")


def test_diagnostics_are_collected():
    text = "vertices: 1 2\narrow a: 1 -> 3\narrow b: 1 -> 2 deg x\nrel a c\n"
    assert kinds(text) == ["UnknownVertex", "DegreeNotInteger", "UnknownArrow", "UnknownArrow"]


def test_diagnostic_positions():
    with pytest.raises(ParseError) as e:
        parse("vertices: 1 2\narrow a: 1 -> 9\n")
    (d,) = e.value.diagnostics
    assert (d.line, d.col, d.end_col) == (2, 15, 16)
    assert str(d).startswith("2:15-16: UnknownVertex")


@pytest.mark.parametrize(
    "text,kind",
    [
        ("arrow a: 1 -> 2\n", "MissingSection"),
        ("vertices: 1 1\n", "DuplicateId"),
        ("vertices: 1 2\narrow a: 1 -> 2\narrow a: 2 -> 1\n", "DuplicateId"),
        ("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\nrel a b\n", "NonComposableRelation"),
        ("vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrel a b\nrel a b\n", "DuplicateRelation"),
        ("vertices: 1\nfoo bar\n", "Syntax"),
    ],
)
def test_error_kinds(text, kind):
    assert kind in kinds(text)


@pytest.mark.parametrize(
    "P", [gamma(2, 3, -1), gamma_prime(3, 2), lambda_family(2, 3, 2, 4), parse(EXAMPLE_GENTLE_TEXT)]
)
def test_round_trip_builtins(P):
    assert parse(serialize(P)) == P
    assert serialize(parse(serialize(P))) == serialize(P)


@st.composite
def presentations(draw):
    n = draw(st.integers(1, 5))
    vs = draw(st.lists(st.integers(-20, 20), min_size=n, max_size=n, unique=True))
    k = draw(st.integers(0, 6))
    ids = draw(st.lists(st.integers(0, 30), min_size=k, max_size=k, unique=True))
    arrows = [(i, draw(st.sampled_from(vs)), draw(st.sampled_from(vs)), draw(st.integers(-5, 5))) for i in ids]
    pairs = [(f, g) for f, s, _, _ in arrows for g, _, t, _ in arrows if t == s]
    rels = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_presentation(vs, arrows, rels)


@given(presentations())
def test_round_trip_property(P):
    assert parse(serialize(P)) == P


def test_builtin_specs():
    assert builtin("Lambda(1,2,0)") == lambda_family(1, 2, 0, 0)
    assert builtin(" Gamma(1, 2, -3) ") == gamma(1, 2, -3)
    assert parse_family("GammaPrime(3,1)") == ("GammaPrime", (3, 1))
    for bad in ("Gamma(1,2)", "Delta(1)", "Lambda(1,x,0)"):
        with pytest.raises(ParameterOutOfRange):
            builtin(bad)
    with pytest.raises(ParameterOutOfRange):
        lambda_family(3, 2, 0)
    with pytest.raises(ParameterOutOfRange):
        gamma(0, 1, 1)
