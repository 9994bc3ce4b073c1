import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentle_derived.dsl import gamma, gamma_prime, lambda_family
from gentle_derived.errors import Disconnected, InvalidPresentation, NotComposable
from gentle_derived.quiver import (
    compose_paths,
    enumerate_paths,
    make_presentation,
    path_from_arrows,
    spanning_tree_cycle_count,
    trivial_path,
    underlying_graph_cycles,
)

from helpers import random_transform


def test_invalid_presentations():
    with pytest.raises(InvalidPresentation):
        make_presentation([1, 1], [])
    with pytest.raises(InvalidPresentation):
        make_presentation([1, 2], [(0, 1, 3)])
    with pytest.raises(InvalidPresentation):
        make_presentation([1, 2], [(0, 1, 2), (0, 2, 1)])
    with pytest.raises(InvalidPresentation, match="not composable"):
        make_presentation([1, 2, 3], [(0, 1, 2), (1, 3, 2)], [(1, 0)])


def test_paths_and_composition():
    P = make_presentation([1, 2, 3], [(0, 1, 2, 1), (1, 2, 3, 2)])
    p = path_from_arrows(P.quiver, [0, 1])
    assert (p.source, p.target, p.degree) == (1, 3, 3)
    assert compose_paths(trivial_path(1), p) == p
    with pytest.raises(NotComposable):
        path_from_arrows(P.quiver, [1, 0])
    # three idempotents, two arrows, one path of length two
    assert len(enumerate_paths(P, 5)) == 6
    Pz = make_presentation([1, 2, 3], [(0, 1, 2), (1, 2, 3)], [(1, 0)])
    assert len(enumerate_paths(Pz, 5)) == 5


def test_gamma_prime_paths_have_length_at_most_one():
    P = gamma_prime(4, 1)
    assert max(len(p) for p in enumerate_paths(P, 10)) == 1


def test_cycle_census():
    assert underlying_graph_cycles(gamma(2, 3, 1)).count == 1
    c = underlying_graph_cycles(lambda_family(1, 3, 2))
    assert c.count == 1 and len(c.cycle) == 3
    two = make_presentation([1, 2], [(0, 1, 2), (1, 1, 2), (2, 2, 1)])
    assert underlying_graph_cycles(two).count == 2
    with pytest.raises(Disconnected):
        underlying_graph_cycles(make_presentation([1, 2], []))


def test_cycle_starts_at_smallest_vertex():
    P = gamma(2, 2, 0)
    cyc = underlying_graph_cycles(P).cycle
    amap = P.quiver.arrow_map
    first, sign = cyc[0]
    start = amap[first].source if sign == 1 else amap[first].target
    assert start == min(P.vertices)


@st.composite
def connected_multigraphs(draw):
    n = draw(st.integers(1, 6))
    arrows = []
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        arrows.append((u, v) if draw(st.booleans()) else (v, u))
    for _ in range(draw(st.integers(0, 3))):
        arrows.append((draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))))
    return make_presentation(range(n), [(i, s, t) for i, (s, t) in enumerate(arrows)])


@given(connected_multigraphs())
def test_cycle_count_two_ways(P):
    assert underlying_graph_cycles(P).count == spanning_tree_cycle_count(P)


@settings(max_examples=30)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(-4, 4), st.integers(0, 10**6))
def test_cycle_direction_survives_relabeling(p, q, r, seed):
    P = gamma(p, q, r)
    Q = random_transform(P, random.Random(seed))
    signs_p = sorted(s for _, s in underlying_graph_cycles(P).cycle)
    signs_q = sorted(s for _, s in underlying_graph_cycles(Q).cycle)
    assert signs_p == signs_q
