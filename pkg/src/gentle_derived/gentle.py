"""Gentleness, cycle orientation data, global dimension, and family recognition."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .errors import NotFiniteDimensional, NotGentle, NotOneCycle
from .quiver import GradedAlgebraPresentation, connected_components, underlying_graph_cycles
from .reps import Algebra, _has_cycle, projective_dimension, simple


@dataclass(frozen=True)
class GentleReport:
    is_gentle: bool
    violations: Tuple[Tuple[int, Tuple[str, int]], ...]
    connected: bool
    cycle_count: int

    def as_dict(self) -> dict:
        return {
            "is_gentle": self.is_gentle,
            "violations": [{"condition": c, "witness": {"kind": k, "id": i}} for c, (k, i) in self.violations],
            "connected": self.connected,
            "cycle_count": self.cycle_count,
        }


def check_gentle(P: GradedAlgebraPresentation) -> GentleReport:
    """Evaluate the four local gentleness conditions.

    (1) at most two arrows in and two out at each vertex; (2) each arrow has at
    most one nonzero continuation on either side; (3) at most one vanishing
    continuation on either side; (4) relations have length two, which holds by
    construction of the relation store.
    """
    viol: List[Tuple[int, Tuple[str, int]]] = []
    for v in P.vertices:
        if len(P.quiver.in_arrows(v)) > 2 or len(P.quiver.out_arrows(v)) > 2:
            viol.append((1, ("vertex", v)))
    for b in P.arrows:
        before = P.quiver.in_arrows(b.source)
        after = P.quiver.out_arrows(b.target)
        zero_before = [a for a in before if (b.id, a.id) in P.relations]
        zero_after = [c for c in after if (c.id, b.id) in P.relations]
        if len(before) - len(zero_before) > 1 or len(after) - len(zero_after) > 1:
            viol.append((2, ("arrow", b.id)))
        if len(zero_before) > 1 or len(zero_after) > 1:
            viol.append((3, ("arrow", b.id)))
    comps = connected_components(P.vertices, P.arrows)
    cycles = len(P.arrows) - len(P.vertices) + len(comps)
    return GentleReport(not viol, tuple(viol), len(comps) <= 1, cycles)


def _require_one_cycle(P: GradedAlgebraPresentation):
    census = underlying_graph_cycles(P)
    if census.count != 1:
        raise NotOneCycle(f"underlying graph has {census.count} independent cycles")
    return census


def _require_gentle(P: GradedAlgebraPresentation):
    rep = check_gentle(P)
    if not rep.is_gentle:
        raise NotGentle(f"gentleness violated: {list(rep.violations)}")


@dataclass(frozen=True)
class ClockInvariants:
    cw_relations: int
    ccw_relations: int
    cw_degree_sum: int
    ccw_degree_sum: int
    d_plus: int
    d_minus: int
    clock: bool
    graded_clock: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def clock_invariants(P: GradedAlgebraPresentation) -> ClockInvariants:
    """Relation and degree counts per orientation of the cycle.

    Orientation +1 ("clockwise") means the arrow points along the canonical
    traversal.  Only relations with both arrows on the cycle are counted.
    """
    _require_gentle(P)
    census = _require_one_cycle(P)
    sign = census.signs()
    amap = P.quiver.arrow_map
    cw = sum(1 for f, g in P.relations if sign.get(f) == 1 and sign.get(g) == 1)
    ccw = sum(1 for f, g in P.relations if sign.get(f) == -1 and sign.get(g) == -1)
    cw_deg = sum(amap[a].degree for a, s in sign.items() if s == 1)
    ccw_deg = sum(amap[a].degree for a, s in sign.items() if s == -1)
    dp, dm = cw - cw_deg, ccw - ccw_deg
    return ClockInvariants(cw, ccw, cw_deg, ccw_deg, dp, dm, cw == ccw, dp == dm)


def signed_cycle_degree(P: GradedAlgebraPresentation) -> int:
    census = _require_one_cycle(P)
    amap = P.quiver.arrow_map
    return sum(s * amap[a].degree for a, s in census.cycle)


def _zero_relation_graph(P: GradedAlgebraPresentation) -> Dict[int, List[int]]:
    succ: Dict[int, List[int]] = {a.id: [] for a in P.arrows}
    for f, g in P.relations:
        succ[g].append(f)
    return succ


def has_finite_global_dimension(P: GradedAlgebraPresentation) -> bool:
    """False iff some cyclic arrow sequence has every consecutive composite in the relations."""
    _require_gentle(P)
    return not _has_cycle(_zero_relation_graph(P))


@dataclass(frozen=True)
class AtLeast:
    bound: int

    def __str__(self) -> str:
        return f">={self.bound}"


def gldim_oracle(P: GradedAlgebraPresentation, bound: int) -> Union[int, AtLeast]:
    """Maximal projective dimension of the simples, by explicit minimal resolutions."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    A = Algebra.from_presentation(P)
    best = 0
    for v in P.vertices:
        pd = projective_dimension(A, simple(A, v), bound)
        if pd is None:
            return AtLeast(bound)
        best = max(best, pd)
    return best


# ---------------------------------------------------------------- shapes


@dataclass(frozen=True)
class GammaShape:
    p: int
    q: int
    r: int


@dataclass(frozen=True)
class LambdaShape:
    r: int
    n: int
    m: int
    d: int


@dataclass(frozen=True)
class GammaPrimeShape:
    q: int
    r: int


@dataclass(frozen=True)
class Unrecognized:
    reason: str = ""


@dataclass(frozen=True)
class ShapeMatch:
    tag: Union[GammaShape, LambdaShape, GammaPrimeShape, Unrecognized]
    # input vertex -> vertex of the builtin presentation (when matched)
    vertex_map: Optional[Dict[int, int]] = field(default=None, compare=False)

    @property
    def recognized(self) -> bool:
        return not isinstance(self.tag, Unrecognized)


def match_shape(P: GradedAlgebraPresentation) -> ShapeMatch:
    """Recognize the Gamma, Lambda and GammaPrime presentations up to relabeling.

    GammaShape(p, q, r): no relations and the quiver is the cycle itself; p
    counts arrows pointing against the canonical traversal, q those along it,
    and r is the signed cycle degree.  The builtin ``Gamma(p,q,r)`` comes back
    as itself or as its mirror ``(q, p, -r)``; which one depends only on the
    isomorphism type, never on labels or grading.

    LambdaShape(r, n, m, d): an oriented n-cycle with a directed tail of length
    m feeding into it and exactly r consecutive vanishing composites on the
    cycle, which must include the composite through the tail's attachment
    vertex; d is the sum of the cycle arrow degrees (in arrow direction).

    GammaPrimeShape(q, r): an oriented q-cycle with all q composites zero and
    no tail; r = q - (cycle degree sum).  This is checked before LambdaShape
    because such a quiver is also Lambda(q, q, 0, .).
    """
    _require_gentle(P)
    census = _require_one_cycle(P)
    amap = P.quiver.arrow_map
    cyc = census.cycle
    cyc_ids = [a for a, _ in cyc]
    signs = [s for _, s in cyc]
    n = len(cyc)

    if not P.relations and len(P.arrows) == n:
        plus = signs.count(1)
        minus = signs.count(-1)
        if plus and minus:
            return ShapeMatch(GammaShape(minus, plus, signed_cycle_degree(P)), _gamma_vertex_map(P, cyc))
        return ShapeMatch(Unrecognized("oriented cycle without relations (infinite dimensional)"))

    if len(set(signs)) != 1:
        return ShapeMatch(Unrecognized("cycle is not oriented and relations are present"))
    # Arrows of the oriented cycle in arrow direction, starting anywhere.
    if signs[0] == -1:
        cyc_ids = cyc_ids[::-1]
    D = sum(amap[a].degree for a in cyc_ids)
    cyc_set = set(cyc_ids)
    cyc_verts = [amap[a].source for a in cyc_ids]
    tail = [a for a in P.arrows if a.id not in cyc_set]
    m = len(tail)
    cycle_rels = {(f, g) for f, g in P.relations if f in cyc_set and g in cyc_set}
    if len(cycle_rels) != len(P.relations):
        return ShapeMatch(Unrecognized("relation involving a non-cycle arrow"))

    if m == 0 and len(cycle_rels) == n:
        return ShapeMatch(GammaPrimeShape(n, n - D), _gamma_prime_vertex_map(amap, cyc_ids))

    # The tail must be a directed path ending at a cycle vertex.
    anchor = None
    if m:
        path = _directed_tail(P, tail, set(cyc_verts))
        if path is None:
            return ShapeMatch(Unrecognized("tail is not a directed path into the cycle"))
        anchor = path[-1]
    r = len(cycle_rels)
    # Lambda(r,n,m,d): with cycle vertices 0..n-1 and arrow a_i: i -> i+1, the
    # zero composites are a_k then a_{k+1} for k = n-r..n-1, so the arrows
    # a_{n-r}, ..., a_{n-1}, a_0 form a run of consecutive zeros ending at 0.
    for start in range(n):
        if anchor is not None and cyc_verts[start] != anchor:
            continue
        rot = cyc_ids[start:] + cyc_ids[:start]  # rot[i] plays a_i
        want = {(rot[(k + 1) % n], rot[k]) for k in range(n - r, n)}
        if want == cycle_rels:
            vmap = {amap[rot[i]].source: i for i in range(n)}
            if m:
                for k, v in enumerate(reversed(path[:-1]), start=1):
                    vmap[v] = -k
            return ShapeMatch(LambdaShape(r, n, m, D), vmap)
    return ShapeMatch(Unrecognized("relations do not form a Lambda pattern"))


def _directed_tail(P: GradedAlgebraPresentation, tail, cyc_verts) -> Optional[List[int]]:
    """Vertices of the tail path in arrow order (ending at the cycle), or None."""
    out = defaultdict(list)
    indeg = defaultdict(int)
    for a in tail:
        out[a.source].append(a.target)
        indeg[a.target] += 1
    starts = [a.source for a in tail if indeg[a.source] == 0 and a.source not in cyc_verts]
    if len(starts) != 1:
        return None
    path = [starts[0]]
    while path[-1] not in cyc_verts:
        nxt = out.get(path[-1], [])
        if len(nxt) != 1:
            return None
        path.append(nxt[0])
    if len(path) - 1 != len(tail):
        return None
    return path


def _gamma_vertex_map(P, cyc) -> Dict[int, int]:
    """Match the traversal start to vertex 1 of the builtin; positions follow the traversal."""
    amap = P.quiver.arrow_map
    vmap = {}
    a0, s0 = cyc[0]
    cur = amap[a0].target if s0 == -1 else amap[a0].source
    for k, (aid, s) in enumerate(cyc):
        vmap[cur] = k + 1
        a = amap[aid]
        cur = a.target if s == 1 else a.source
    return vmap


def _gamma_prime_vertex_map(amap, cyc_ids) -> Dict[int, int]:
    # Builtin: a_i: i+1 -> i for i < q and a_q: 1 -> q, i.e. the cycle runs
    # 1 -> q -> q-1 -> ... -> 1.  Match the source of the first arrow to 1.
    q = len(cyc_ids)
    vmap = {}
    order = [1] + list(range(q, 1, -1))
    for k, aid in enumerate(cyc_ids):
        vmap[amap[aid].source] = order[k]
    return vmap


def check_finite_dimensional(P: GradedAlgebraPresentation) -> None:
    Algebra.from_presentation(P)
