import pytest
from hypothesis import given
from hypothesis import strategies as st

from gentle_derived.dsl import EXAMPLE_GENTLE_TEXT, gamma, gamma_prime, lambda_family, parse
from gentle_derived.errors import ParameterOutOfRange, UnsupportedShape
from gentle_derived.normal_form import (
    Gamma,
    GammaPrime,
    canonical,
    conjecture_check,
    derived_equivalent,
    lambda_normal_form,
    normal_form,
    parse_normal_form,
)
from gentle_derived.quiver import make_presentation

gammas = st.builds(Gamma, st.integers(1, 6), st.integers(1, 6), st.integers(-6, 6))


def test_gamma_normal_form():
    assert normal_form(gamma(2, 1, -3)) == Gamma(1, 2, 3)
    assert normal_form(gamma(1, 2, 3)) == Gamma(1, 2, 3)
    assert normal_form(gamma(3, 2, 0)) == Gamma(2, 3, 0)
    assert normal_form(gamma_prime(4, -2)) == GammaPrime(4, -2)


def test_lambda_normal_form_boundary():
    assert lambda_normal_form(2, 2, 1, 0) == GammaPrime(3, 2)
    assert normal_form(lambda_family(2, 2, 1, 0)) == GammaPrime(3, 2)
    with pytest.raises(ParameterOutOfRange):
        lambda_normal_form(0, 2, 0, 0)


@given(gammas)
def test_canonical_is_idempotent_and_symmetric(g):
    c = canonical(g)
    assert canonical(c) == c
    assert c.r >= 0
    assert canonical(Gamma(g.q, g.p, -g.r)) == c


@given(gammas, gammas)
def test_derived_equivalent_is_an_equivalence(a, b):
    assert derived_equivalent(a, a)
    assert derived_equivalent(a, b) == derived_equivalent(b, a)
    assert derived_equivalent(a, b) == (canonical(a) == canonical(b))


def test_unsupported_inputs_carry_a_report():
    not_gentle = make_presentation([1, 2, 3, 4], [(0, 1, 2), (1, 1, 3), (2, 1, 4)])
    with pytest.raises(UnsupportedShape) as e:
        normal_form(not_gentle)
    assert e.value.report["gentle"]["is_gentle"] is False
    # gentle one-cycle, but outside the recognized families
    with pytest.raises(UnsupportedShape) as e:
        normal_form(parse(EXAMPLE_GENTLE_TEXT))
    assert "clock" in e.value.report


def test_parse_normal_form():
    assert parse_normal_form("Gamma(1, 2,-3)") == Gamma(1, 2, -3)
    assert parse_normal_form("GammaPrime(3,0)") == GammaPrime(3, 0)
    for bad in ("Gamma(1,2)", "GammaPrime(1,2,3)", "Gamma(0,1,1)", "Beta(1,1)"):
        with pytest.raises(ParameterOutOfRange):
            parse_normal_form(bad)
    assert str(parse_normal_form(str(Gamma(2, 5, -1)))) == "Gamma(2,5,-1)"


@given(st.integers(1, 4), st.integers(0, 4), st.integers(0, 3), st.integers(-4, 4))
def test_conjecture_agrees_on_lambda(r, extra, m, d):
    rep = conjecture_check(lambda_family(r, r + extra, m, d))
    assert rep.agree
    assert rep.zero_form == (rep.normal_form.r == 0)
