import pytest

from gentle_derived.dsl import gamma, lambda_family
from gentle_derived.errors import NotFiniteDimensional
from gentle_derived.reps import (
    Algebra,
    auslander_reiten_translate,
    direct_sum,
    hom_dim_generic,
    injective,
    projective,
    projective_cover,
    projective_dimension,
    simple,
    syzygy,
)


@pytest.fixture
def a3():
    """1 -> 2 -> 3, hereditary."""
    return Algebra([1, 2, 3], [(0, 1, 2), (1, 2, 3)])


@pytest.fixture
def a3_rel():
    """1 -> 2 -> 3 with the length-two path killed."""
    return Algebra([1, 2, 3], [(0, 1, 2), (1, 2, 3)], [(1, 0)])


def test_projectives_and_injectives(a3, a3_rel):
    assert projective(a3, 1).dims == {1: 1, 2: 1, 3: 1}
    assert injective(a3, 3).dims == {1: 1, 2: 1, 3: 1}
    assert projective(a3_rel, 1).dims == {1: 1, 2: 1}
    assert injective(a3_rel, 3).dims == {2: 1, 3: 1}
    assert a3.dimension == 6 and a3_rel.dimension == 5


def test_cycle_without_relations_is_rejected():
    with pytest.raises(NotFiniteDimensional):
        Algebra([1, 2], [(0, 1, 2), (1, 2, 1)])


def test_projective_dimension(a3, a3_rel):
    assert projective_dimension(a3, simple(a3, 1), 5) == 1
    assert projective_dimension(a3_rel, simple(a3_rel, 1), 5) == 2
    assert projective_dimension(a3, projective(a3, 2), 5) == 0


def test_ar_translate_on_a3(a3):
    assert auslander_reiten_translate(a3, simple(a3, 2)).dims == {3: 1}
    assert auslander_reiten_translate(a3, simple(a3, 1)).dims == {2: 1}
    assert auslander_reiten_translate(a3, projective(a3, 1)).total_dim == 0


def test_cover_and_syzygy(a3):
    M = simple(a3, 1)
    cov, K = syzygy(a3, M)
    assert [u for u, _ in cov.tops] == [1]
    assert K.rep.dims == {2: 1, 3: 1}
    S = direct_sum(a3, [simple(a3, 1), simple(a3, 2)])
    assert sorted(u for u, _ in projective_cover(a3, S).tops) == [1, 2]


@pytest.mark.parametrize("P", [gamma(2, 2, 0), lambda_family(1, 3, 1)])
def test_hom_from_projective_is_evaluation(P):
    A = Algebra.from_presentation(P)
    mods = [projective(A, v) for v in A.vertices] + [injective(A, v) for v in A.vertices]
    for v in A.vertices:
        for M in mods:
            assert hom_dim_generic(A, projective(A, v), M) == M.dim(v)
            assert hom_dim_generic(A, M, injective(A, v)) == M.dim(v)
