import json

import pytest

from gentle_derived.arquiver import ar_window, summary_gamma, summary_gamma_prime, summary_lambda
from gentle_derived.covering import CoveringQuiver
from gentle_derived.errors import DegenerateBoundary, ParameterOutOfRange, UnsupportedFamily
from gentle_derived.orbit import OrbitObject, derived_tau, seed_object


def test_gamma_summary():
    s = summary_gamma(2, 3, -2)
    assert s.component_count == 6
    assert [(c.family, c.count) for c in s.components] == [("P", 2), ("X1", 2), ("X2", 2)]
    rels = {(t.family, t.tau_power, t.sigma_power) for t in s.tau_relations}
    assert rels == {("X1", 3, 2), ("X2", 2, -2)}
    assert s.suspension["order"] == 2
    text = s.to_text()
    assert text.splitlines()[0] == "category: D_fd(Gamma(2,3,-2))"
    assert "tau^3 X = Sigma^2 X" in text


def test_gamma_prime_summary():
    s = summary_gamma_prime(3, 2)
    assert s.component_count == 4
    assert {c.family for c in s.components} == {"X", "Y"}
    assert {(t.tau_power, t.sigma_power) for t in s.tau_relations} == {(3, -2)}


def test_gamma_prime_r_zero_closed_form():
    s = summary_gamma_prime(3, 0)
    assert s.component_count is None
    assert all(c.count is None for c in s.components)
    assert {(t.tau_power, t.sigma_power) for t in s.tau_relations} == {(3, 0)}


def test_lambda_summary_goes_through_normal_form():
    s = summary_lambda(1, 3, 0, 0)
    assert s.via == "Gamma(2,1,1)"
    assert s.component_count == 3
    with pytest.raises(DegenerateBoundary):
        summary_lambda(1, 2, 0, 1)


def test_summary_validation():
    with pytest.raises(ParameterOutOfRange):
        summary_gamma(0, 1, 1)
    with pytest.raises(ParameterOutOfRange):
        summary_gamma(1, 1, 0)


def test_summary_dict_is_json():
    d = summary_gamma(1, 1, 3).as_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["component_count"] == 9


@pytest.mark.parametrize("pqr,family", [((2, 1, 2), "X1"), ((2, 1, 2), "X2"), ((1, 2, 1), "P"), ((0, 2, 3), "X")])
def test_window_mesh_shape(pqr, family):
    Q = CoveringQuiver(*pqr)
    C = OrbitObject(seed_object(Q, family))
    W = ar_window(Q, family, C, 3)
    assert C in W.nodes
    for m in W.meshes:
        X = m["end"]
        assert m["tau"] == derived_tau(X)
        ins = {Y for Y, _ in m["middle"]}
        assert set(W.predecessors(X)) == ins
        # every middle term receives a mesh arrow from tau X
        for Y in ins:
            assert Y in W.successors(m["tau"])
    for X in W.nodes:
        assert len(W.predecessors(X)) <= 2
    if family == "P":
        # interior of a ZA_inf_inf component: two in, two out
        assert len(W.predecessors(C)) == 2 and len(W.successors(C)) == 2


def test_window_exports():
    Q = CoveringQuiver(2, 1, 2)
    W = ar_window(Q, "X1", OrbitObject(seed_object(Q, "X1")), 2)
    dot = W.to_dot()
    assert dot.startswith('digraph "X1" {')
    assert dot.count("->") == len(W.edges)
    assert dot.count("style=dashed") == sum(1 for e in W.edges if e[2] == "tau")
    d = json.loads(W.to_json())
    assert len(d["nodes"]) == len(W.nodes)
    assert d["meta"]["params"] == {"p": 2, "q": 1, "r": 2}


def test_window_errors():
    Q = CoveringQuiver(2, 1, 2)
    C = OrbitObject(seed_object(Q, "X1"))
    with pytest.raises(UnsupportedFamily):
        ar_window(Q, "Y1", C, 2)
    with pytest.raises(ParameterOutOfRange):
        ar_window(Q, "X2", C, 2)
    with pytest.raises(ParameterOutOfRange):
        ar_window(Q, "X1", C, 0)
