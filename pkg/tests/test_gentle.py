import pytest
from hypothesis import given
from hypothesis import strategies as st

from gentle_derived.dsl import EXAMPLE_GENTLE_TEXT, gamma, gamma_prime, lambda_family, parse
from gentle_derived.errors import NotFiniteDimensional, NotGentle, NotOneCycle
from gentle_derived.gentle import (
    AtLeast,
    GammaPrimeShape,
    GammaShape,
    LambdaShape,
    Unrecognized,
    check_finite_dimensional,
    check_gentle,
    clock_invariants,
    gldim_oracle,
    has_finite_global_dimension,
    match_shape,
    signed_cycle_degree,
)
from gentle_derived.quiver import make_presentation


def test_example_is_gentle():
    rep = check_gentle(parse(EXAMPLE_GENTLE_TEXT))
    assert rep.is_gentle and rep.connected and rep.cycle_count == 1


def test_violations():
    three_out = make_presentation([1, 2, 3, 4], [(0, 1, 2), (1, 1, 3), (2, 1, 4)])
    assert [c for c, _ in check_gentle(three_out).violations] == [1]
    fork = make_presentation([1, 2, 3, 4], [(0, 1, 2), (1, 2, 3), (2, 2, 4)])
    rep = check_gentle(fork)
    assert (2, ("arrow", 0)) in rep.violations
    both_zero = make_presentation([1, 2, 3, 4], [(0, 1, 2), (1, 2, 3), (2, 2, 4)], [(1, 0), (2, 0)])
    assert (3, ("arrow", 0)) in check_gentle(both_zero).violations
    assert not check_gentle(both_zero).is_gentle


def test_disconnected_is_reported_not_raised():
    rep = check_gentle(make_presentation([1, 2, 3], [(0, 1, 2)]))
    assert rep.is_gentle and not rep.connected


def test_clock_requires_gentle_one_cycle():
    with pytest.raises(NotGentle):
        clock_invariants(make_presentation([1, 2, 3, 4], [(0, 1, 2), (1, 1, 3), (2, 1, 4), (3, 4, 1)]))
    with pytest.raises(NotOneCycle):
        clock_invariants(make_presentation([1, 2], [(0, 1, 2)]))


@given(st.integers(1, 5), st.integers(-5, 5))
def test_gamma_prime_clock(q, r):
    ci = clock_invariants(gamma_prime(q, r))
    assert {ci.cw_relations, ci.ccw_relations} == {q, 0}
    assert {ci.d_plus, ci.d_minus} == ({r, 0} if r else {0})
    assert ci.graded_clock == (r == 0)
    assert not ci.clock


@given(st.integers(1, 4), st.integers(1, 4), st.integers(-5, 5))
def test_gamma_signed_degree(p, q, r):
    P = gamma(p, q, r)
    assert abs(signed_cycle_degree(P)) == abs(r)
    ci = clock_invariants(P)
    assert ci.clock
    assert ci.graded_clock == (r == 0)


def test_orientation_picks_a_side():
    # with no relations the side holding more arrows is walked forwards
    assert signed_cycle_degree(gamma(1, 2, 5)) == 5
    assert signed_cycle_degree(gamma(2, 1, 5)) == -5


def test_global_dimension():
    assert has_finite_global_dimension(lambda_family(1, 3, 2))
    assert not has_finite_global_dimension(lambda_family(3, 3, 0))
    assert gldim_oracle(gamma(2, 3, 1), 6) == 1
    assert gldim_oracle(gamma_prime(3, 0), 8) == AtLeast(8)
    # A_4 with every composite zero
    a4 = make_presentation([1, 2, 3, 4], [(0, 1, 2), (1, 2, 3), (2, 3, 4)], [(1, 0), (2, 1)])
    assert has_finite_global_dimension(a4)
    assert gldim_oracle(a4, 6) == 3
    with pytest.raises(ValueError):
        gldim_oracle(a4, 0)


def test_infinite_dimensional_algebra_rejected():
    with pytest.raises(NotFiniteDimensional):
        check_finite_dimensional(make_presentation([1, 2], [(0, 1, 2), (1, 2, 1)]))


def test_match_shapes():
    assert match_shape(gamma(1, 2, 3)).tag == GammaShape(1, 2, 3)
    assert match_shape(gamma(2, 1, 3)).tag == GammaShape(1, 2, -3)
    assert match_shape(gamma_prime(3, 1)).tag == GammaPrimeShape(3, 1)
    assert match_shape(lambda_family(2, 3, 1, -1)).tag == LambdaShape(2, 3, 1, -1)
    # gentle, but the tail leaves the cycle instead of feeding into it
    odd = make_presentation([0, 1, 2, 3], [(0, 0, 1), (1, 1, 2), (2, 2, 0), (3, 1, 3)], [(1, 0)])
    assert check_gentle(odd).is_gentle
    assert isinstance(match_shape(odd).tag, Unrecognized)


def test_lambda_with_n_equal_r_is_gamma_prime_shape():
    assert match_shape(lambda_family(3, 3, 0, 2)).tag == GammaPrimeShape(3, 1)
