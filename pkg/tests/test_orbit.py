import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentle_derived.covering import INF, CoveringQuiver, IntervalModule, apply_degree_shift
from gentle_derived.errors import InfiniteDimensional, MixedQuiver
from gentle_derived.orbit import (
    DerivedObject,
    OrbitObject,
    ar_middle,
    ar_successors,
    copy_permutation,
    derived_component,
    derived_families,
    derived_tau,
    derived_tau_inverse,
    orbit_hom_dim,
    orbit_hom_dim_summation,
    orbit_isomorphic,
    orbit_isomorphic_search,
    sample_family,
    seed_object,
    sigma_orbit_tags,
    to_orbit,
    truncation_bound,
    verify_suspension,
    verify_tau_sigma,
)

quivers = st.builds(
    CoveringQuiver, st.integers(0, 3), st.integers(1, 3), st.sampled_from([-3, -2, -1, 1, 2, 3])
)


@st.composite
def objects(draw, Q):
    b = draw(st.integers(-10, 10))
    a = b + draw(st.integers(1, 8))
    return OrbitObject(IntervalModule(Q, draw(st.integers(0, Q.copies - 1)), a, b))


def test_canonical_representative():
    Q = CoveringQuiver(1, 2, 2)
    M = IntervalModule(Q, 0, 3, 1)
    X = DerivedObject(M, 3)
    assert to_orbit(X) == OrbitObject(apply_degree_shift(M, 3))
    assert orbit_isomorphic(X, DerivedObject(apply_degree_shift(M, 1), 2))
    assert orbit_isomorphic_search(DerivedObject(apply_degree_shift(M, -2), 2), DerivedObject(M, 0), 3)
    assert not orbit_isomorphic_search(DerivedObject(M, 1), DerivedObject(M, 0), 3)


@settings(max_examples=60, deadline=None)
@given(quivers, st.data(), st.integers(-3, 3))
def test_orbit_hom_matches_summation(Q, data, n):
    X, Y = data.draw(objects(Q)), data.draw(objects(Q))
    direct = orbit_hom_dim(X, Y, n)
    b = truncation_bound(X, Y, n)
    assert orbit_hom_dim_summation(X, Y, n, b) == direct
    assert orbit_hom_dim_summation(X, Y, n, 2 * b) == direct


@settings(max_examples=80)
@given(quivers, st.data())
def test_tau_is_invertible(Q, data):
    X = data.draw(objects(Q))
    assert derived_tau_inverse(derived_tau(X)) == X
    assert derived_tau(derived_tau_inverse(X)) == X
    assert derived_component(derived_tau(X)) == derived_component(X)


@settings(max_examples=80)
@given(quivers, st.data())
def test_mesh_middle_terms(Q, data):
    X = data.draw(objects(Q))
    T = derived_tau(X)
    tag = derived_component(X)
    for E in ar_middle(X):
        assert derived_component(E) == tag
        assert orbit_hom_dim(T, E) >= 1 and orbit_hom_dim(E, X) >= 1
    assert ar_successors(T) == ar_middle(X)


def test_middle_term_counts_in_regular_families():
    Q = CoveringQuiver(2, 3, 1)
    mouth = OrbitObject(seed_object(Q, "X1"))
    assert len(ar_middle(mouth)) == 1
    (second,) = ar_successors(mouth)
    assert len(ar_middle(second)) == 2
    assert mouth in ar_middle(second)


def test_suspension_permutes_components():
    Q = CoveringQuiver(2, 1, 3)
    assert copy_permutation(Q) == {0: 2, 1: 0, 2: 1}
    for fam in derived_families(Q):
        tags = sigma_orbit_tags(seed_object(Q, fam))
        assert len(tags) == 3
        assert {t.copy for t in tags} == {0, 1, 2}


def test_domain_errors():
    Q = CoveringQuiver(1, 1, 1)
    X = OrbitObject(IntervalModule(Q, 0, 1, 0))
    with pytest.raises(InfiniteDimensional):
        orbit_hom_dim(X, OrbitObject(IntervalModule(Q, 0, INF, 0)))
    with pytest.raises(MixedQuiver):
        orbit_hom_dim(X, OrbitObject(IntervalModule(CoveringQuiver(1, 1, 2), 0, 1, 0)))


def test_sampling_stays_in_family():
    Q = CoveringQuiver(3, 2, 2)
    rng = random.Random(7)
    for fam in ("P", "X1", "X2"):
        for M in sample_family(Q, fam, 25, rng):
            assert derived_component(M).family == fam


def test_tau_sigma_reports_are_deterministic():
    Q = CoveringQuiver(2, 3, 2)
    a = verify_tau_sigma(Q, "X1", 15, seed=11)
    b = verify_tau_sigma(Q, "X1", 15, seed=11)
    assert a.as_dict() == b.as_dict()
    assert a.relation == (3, -2)
    assert verify_tau_sigma(Q, "X2", 15, seed=11).relation == (2, 2)
    assert verify_tau_sigma(Q, "P", 15, seed=11).relation is None
    assert "tau^3 = Sigma^-2" in str(a)


def test_linear_relation_and_suspension():
    Q = CoveringQuiver(0, 3, -2)
    assert verify_tau_sigma(Q, "X", 20).relation == (3, 2)
    rep = verify_suspension(Q, "X", 20)
    assert rep.order == 2 and rep.shifts_copy_down
