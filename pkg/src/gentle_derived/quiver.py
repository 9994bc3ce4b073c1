"""Finite graded quivers with length-2 relations.

Relations are stored as pairs ``(f, g)`` of arrow ids meaning that the
composite "first ``g``, then ``f``" vanishes.  This is the right-to-left
convention of the algebra literature; paths themselves are written
diagrammatically (left to right, in the order the arrows are traversed).
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import Disconnected, InvalidPresentation, NotComposable


@dataclass(frozen=True)
class Arrow:
    id: int
    source: int
    target: int
    degree: int = 0
    name: Optional[str] = field(default=None, compare=False)

    @property
    def label(self) -> str:
        return self.name if self.name is not None else f"x{self.id}"


@dataclass(frozen=True)
class GradedQuiver:
    vertices: Tuple[int, ...]
    arrows: Tuple[Arrow, ...]

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        if len(verts) != len(self.vertices):
            raise InvalidPresentation("duplicate vertex ids")
        object.__setattr__(self, "vertices", verts)
        arrows = tuple(sorted(self.arrows, key=lambda a: a.id))
        object.__setattr__(self, "arrows", arrows)
        ids = [a.id for a in arrows]
        if len(set(ids)) != len(ids):
            raise InvalidPresentation("duplicate arrow ids")
        vs = set(verts)
        for a in arrows:
            if a.source not in vs or a.target not in vs:
                raise InvalidPresentation(f"arrow {a.label} has an endpoint outside the vertex set")

    def arrow(self, aid: int) -> Arrow:
        for a in self.arrows:
            if a.id == aid:
                return a
        raise KeyError(aid)

    @property
    def arrow_map(self) -> Dict[int, Arrow]:
        return {a.id: a for a in self.arrows}

    def out_arrows(self, v: int) -> List[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: int) -> List[Arrow]:
        return [a for a in self.arrows if a.target == v]


@dataclass(frozen=True)
class GradedAlgebraPresentation:
    quiver: GradedQuiver
    relations: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        rels = frozenset(self.relations)
        object.__setattr__(self, "relations", rels)
        amap = self.quiver.arrow_map
        for f, g in rels:
            if f not in amap or g not in amap:
                raise InvalidPresentation(f"relation ({f}, {g}) references an unknown arrow")
            if amap[g].target != amap[f].source:
                raise InvalidPresentation(
                    f"relation ({f}, {g}) is not composable: {amap[g].label} ends at "
                    f"{amap[g].target}, {amap[f].label} starts at {amap[f].source}"
                )

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> Tuple[Arrow, ...]:
        return self.quiver.arrows

    def is_zero_composite(self, first: int, then: int) -> bool:
        """Whether applying arrow ``first`` and then arrow ``then`` gives zero."""
        return (then, first) in self.relations

    def relabel(self, vertex_map: Mapping[int, int], arrow_map: Mapping[int, int]) -> "GradedAlgebraPresentation":
        arrows = tuple(
            Arrow(arrow_map[a.id], vertex_map[a.source], vertex_map[a.target], a.degree, a.name)
            for a in self.arrows
        )
        q = GradedQuiver(tuple(vertex_map[v] for v in self.vertices), arrows)
        rels = frozenset((arrow_map[f], arrow_map[g]) for f, g in self.relations)
        return GradedAlgebraPresentation(q, rels)

    def regrade(self, weights: Mapping[int, int]) -> "GradedAlgebraPresentation":
        """Replace deg(a) by deg(a) + w(source) - w(target).

        This is the graded equivalence induced by shifting each vertex
        idempotent's projective by its weight.
        """
        arrows = tuple(
            Arrow(a.id, a.source, a.target, a.degree + weights.get(a.source, 0) - weights.get(a.target, 0), a.name)
            for a in self.arrows
        )
        return GradedAlgebraPresentation(GradedQuiver(self.vertices, arrows), self.relations)


def make_presentation(
    vertices: Iterable[int],
    arrows: Iterable[Tuple],
    relations: Iterable[Tuple[int, int]] = (),
) -> GradedAlgebraPresentation:
    """Convenience constructor; arrows given as (id, source, target[, degree[, name]])."""
    arrs = tuple(Arrow(*a) for a in arrows)
    return GradedAlgebraPresentation(GradedQuiver(tuple(vertices), arrs), frozenset(relations))


# ---------------------------------------------------------------- paths


@dataclass(frozen=True)
class Path:
    """A path written diagrammatically; ``arrows`` empty means the idempotent at ``source``."""

    source: int
    target: int
    arrows: Tuple[int, ...] = ()
    degree: int = 0

    def __len__(self) -> int:
        return len(self.arrows)


def trivial_path(v: int) -> Path:
    return Path(v, v, (), 0)


def path_from_arrows(quiver: GradedQuiver, arrow_ids: Sequence[int]) -> Path:
    if not arrow_ids:
        raise ValueError("use trivial_path for the empty path")
    amap = quiver.arrow_map
    arrs = [amap[i] for i in arrow_ids]
    for x, y in zip(arrs, arrs[1:]):
        if x.target != y.source:
            raise NotComposable(f"{x.label} ends at {x.target} but {y.label} starts at {y.source}")
    return Path(arrs[0].source, arrs[-1].target, tuple(arrow_ids), sum(a.degree for a in arrs))


def compose_paths(p1: Path, p2: Path) -> Path:
    """``p1`` followed by ``p2``."""
    if p1.target != p2.source:
        raise NotComposable(f"path ending at {p1.target} cannot be followed by a path starting at {p2.source}")
    return Path(p1.source, p2.target, p1.arrows + p2.arrows, p1.degree + p2.degree)


def enumerate_paths(P: GradedAlgebraPresentation, max_len: int) -> List[Path]:
    """All nonzero paths of length at most ``max_len`` (the idempotents included)."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    out = [trivial_path(v) for v in P.vertices]
    frontier = [Path(a.source, a.target, (a.id,), a.degree) for a in P.arrows] if max_len >= 1 else []
    out.extend(frontier)
    amap = P.quiver.arrow_map
    for _ in range(max_len - 1):
        nxt = []
        for p in frontier:
            last = p.arrows[-1]
            for a in P.quiver.out_arrows(p.target):
                if not P.is_zero_composite(last, a.id):
                    nxt.append(Path(p.source, a.target, p.arrows + (a.id,), p.degree + amap[a.id].degree))
        out.extend(nxt)
        frontier = nxt
        if not frontier:
            break
    return out


# ---------------------------------------------------------------- cycles


@dataclass(frozen=True)
class CycleCensus:
    """Independent cycle count of the underlying multigraph, and the cycle when unique.

    ``cycle`` lists (arrow id, sign) in canonical traversal order; sign is +1
    when the arrow points along the traversal.  The walk starts at the
    smallest cycle vertex; its direction depends only on the isomorphism type
    of the presentation, so relabeling or regrading never reverses it.
    """

    count: int
    cycle: Optional[Tuple[Tuple[int, int], ...]] = None

    def signs(self) -> Dict[int, int]:
        return dict(self.cycle or ())


def connected_components(vertices: Sequence[int], arrows: Sequence[Arrow]) -> List[List[int]]:
    adj: Dict[int, List[int]] = defaultdict(list)
    for a in arrows:
        adj[a.source].append(a.target)
        adj[a.target].append(a.source)
    seen = set()
    comps = []
    for v in vertices:
        if v in seen:
            continue
        comp = []
        dq = deque([v])
        seen.add(v)
        while dq:
            x = dq.popleft()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    dq.append(y)
        comps.append(comp)
    return comps


def is_connected(P: GradedAlgebraPresentation) -> bool:
    return len(connected_components(P.vertices, P.arrows)) <= 1


def underlying_graph_cycles(P: GradedAlgebraPresentation) -> CycleCensus:
    """Cycle census of the underlying undirected multigraph of a connected quiver."""
    if not is_connected(P):
        raise Disconnected("quiver is not connected")
    count = len(P.arrows) - len(P.vertices) + 1
    if count != 1:
        return CycleCensus(count, None)
    # Prune leaves; what remains is the cycle.
    alive = {a.id: a for a in P.arrows}
    deg: Dict[int, int] = defaultdict(int)
    for a in alive.values():
        deg[a.source] += 1
        deg[a.target] += 1
    leaves = deque(v for v in P.vertices if deg[v] == 1)
    while leaves:
        v = leaves.popleft()
        if deg[v] != 1:
            continue
        for aid, a in list(alive.items()):
            if a.source == v or a.target == v:
                del alive[aid]
                deg[a.source] -= 1
                deg[a.target] -= 1
                w = a.target if a.source == v else a.source
                if deg[w] == 1:
                    leaves.append(w)
                break
    start = min({a.source for a in alive.values()} | {a.target for a in alive.values()})
    order: List[Tuple[int, int]] = []
    used = set()
    cur = start
    while len(used) < len(alive):
        cands = sorted(
            (a for a in alive.values() if a.id not in used and (a.source == cur or a.target == cur)),
            key=lambda a: a.id,
        )
        a = cands[0]
        used.add(a.id)
        if a.source == cur:
            order.append((a.id, 1))
            cur = a.target
        else:
            order.append((a.id, -1))
            cur = a.source
    return CycleCensus(1, _intrinsic_direction(P, tuple(order)))


def _reverse_cycle(cyc: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, int], ...]:
    """The same cycle from the same start vertex, walked the other way."""
    return tuple((a, -s) for a, s in reversed(cyc))


def _direction_signature(P: GradedAlgebraPresentation, cyc) -> Tuple:
    """Label- and grading-free description of a traversal direction.

    Each step records the arrow's sign and whether it forms a zero relation
    with the next cycle arrow; the signature is the number of arrows pointing
    along the traversal followed by the least rotation of the step sequence.
    """
    n = len(cyc)
    steps = []
    for i in range(n):
        (a, s), (b, t) = cyc[i], cyc[(i + 1) % n]
        if s == t == 1:
            zero = (b, a) in P.relations
        elif s == t == -1:
            zero = (a, b) in P.relations
        else:
            zero = False
        steps.append((s, int(zero)))
    rotations = min(tuple(steps[i:] + steps[:i]) for i in range(n))
    return (sum(1 for _, s in cyc if s == 1), rotations)


def _intrinsic_direction(P: GradedAlgebraPresentation, cyc):
    """Pick the traversal direction from intrinsic data so relabeling cannot flip it.

    When both directions look alike the structure has a reflection symmetry
    and the direction with nonnegative signed degree is taken.
    """
    rev = _reverse_cycle(cyc)
    s_fwd, s_rev = _direction_signature(P, cyc), _direction_signature(P, rev)
    if s_fwd != s_rev:
        return cyc if s_fwd > s_rev else rev
    amap = P.quiver.arrow_map
    deg = sum(s * amap[a].degree for a, s in cyc)
    return cyc if deg >= 0 else rev


def spanning_tree_cycle_count(P: GradedAlgebraPresentation) -> int:
    """Independent count via union-find: arrows not needed by a spanning forest."""
    parent = {v: v for v in P.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    extra = 0
    for a in P.arrows:
        x, y = find(a.source), find(a.target)
        if x == y:
            extra += 1
        else:
            parent[x] = y
    return extra
