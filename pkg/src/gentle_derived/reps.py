"""Finite-dimensional representations of bound quivers with monomial length-2 relations.

This is generic machinery: indecomposable projectives and injectives from the
path basis, projective covers, kernels, minimal projective resolutions, and
the Auslander-Reiten translate computed as the kernel of the Nakayama functor
applied to a minimal projective presentation.  It knows nothing about interval
modules; :mod:`gentle_derived.covering` uses it on finite windows of the
covering quiver as an independent route to the AR translate.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ComputationFailed, NotFiniteDimensional
from .linalg import PRIME, Matrix, identity, matmul, nullspace, rank, solve_many, zeros
from .quiver import GradedAlgebraPresentation

PathT = Tuple[int, ...]


class Algebra:
    """A bound quiver algebra kQ/(relations) with precomputed path basis."""

    def __init__(self, vertices: Sequence[int], arrows: Sequence[Tuple[int, int, int]], relations=()):
        self.vertices = tuple(vertices)
        self.arrows = {aid: (s, t) for aid, s, t in arrows}
        self.relations = frozenset(relations)
        self.out: Dict[int, List[int]] = defaultdict(list)
        self.inc: Dict[int, List[int]] = defaultdict(list)
        for aid, (s, t) in sorted(self.arrows.items()):
            self.out[s].append(aid)
            self.inc[t].append(aid)
        self._check_finite()
        # paths[(u, w)] = list of nonzero paths from u to w (trivial path is ()).
        self.paths: Dict[Tuple[int, int], List[PathT]] = defaultdict(list)
        for v in self.vertices:
            self.paths[(v, v)].append(())
            frontier = [((a,), self.arrows[a][1]) for a in self.out[v]]
            while frontier:
                nxt = []
                for p, end in frontier:
                    self.paths[(v, end)].append(p)
                    for a in self.out[end]:
                        if (a, p[-1]) not in self.relations:
                            nxt.append((p + (a,), self.arrows[a][1]))
                frontier = nxt
        self._index = {key: {p: i for i, p in enumerate(ps)} for key, ps in self.paths.items()}

    @classmethod
    def from_presentation(cls, P: GradedAlgebraPresentation) -> "Algebra":
        return cls(P.vertices, [(a.id, a.source, a.target) for a in P.arrows], P.relations)

    def _check_finite(self):
        # A nonzero path of unbounded length exists iff the graph on arrows
        # (a -> b when a then b is a nonzero composite) has a directed cycle.
        succ = {a: [b for b in self.out[t] if (b, a) not in self.relations] for a, (_, t) in self.arrows.items()}
        if _has_cycle(succ):
            raise NotFiniteDimensional("algebra has nonzero paths of every length")

    def extend(self, p: PathT, start: int, a: int) -> Optional[PathT]:
        """The path ``p`` (from ``start``) followed by arrow ``a``, or None if zero."""
        if p and (a, p[-1]) in self.relations:
            return None
        return p + (a,)

    def prepend(self, a: int, p: PathT) -> Optional[PathT]:
        if p and (p[0], a) in self.relations:
            return None
        return (a,) + p

    def concat(self, p: PathT, q: PathT) -> Optional[PathT]:
        if p and q and (q[0], p[-1]) in self.relations:
            return None
        return p + q

    def index(self, u: int, w: int, p: PathT) -> int:
        return self._index[(u, w)][p]

    @property
    def dimension(self) -> int:
        return sum(len(ps) for ps in self.paths.values())


def _has_cycle(succ: Dict[int, List[int]]) -> bool:
    color: Dict[int, int] = {}
    for root in succ:
        if root in color:
            continue
        stack = [(root, iter(succ[root]))]
        color[root] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = 2
                stack.pop()
            elif color.get(nxt) == 1:
                return True
            elif nxt not in color:
                color[nxt] = 1
                stack.append((nxt, iter(succ[nxt])))
    return False


@dataclass
class Rep:
    """Representation: a vector space dimension per vertex and a matrix per arrow.

    Storage is sparse: vertices missing from ``dims`` are zero, and arrows
    missing from ``maps`` act by the zero map.  ``maps[a]`` has
    ``dim(target)`` rows and ``dim(source)`` columns.
    """

    dims: Dict[int, int]
    maps: Dict[int, Matrix]

    def dim(self, v: int) -> int:
        return self.dims.get(v, 0)

    def map(self, A: "Algebra", a: int) -> Matrix:
        m = self.maps.get(a)
        if m is None:
            s, t = A.arrows[a]
            return zeros(self.dim(t), self.dim(s))
        return m

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def support(self) -> List[int]:
        return sorted(v for v, d in self.dims.items() if d)


def _live_arrows(A: "Algebra", R: Rep):
    """Arrows whose source and target both carry nonzero spaces in R."""
    for v in R.support():
        for a in A.out[v]:
            t = A.arrows[a][1]
            if R.dim(t):
                yield a, v, t


def path_matrix(A: Algebra, M: Rep, start: int, p: PathT) -> Matrix:
    d0 = M.dim(start)
    out = identity(d0)
    for a in p:
        s, _ = A.arrows[a]
        out = matmul(M.map(A, a), out, inner=M.dim(s), cols=d0)
    return out


def projective(A: Algebra, v: int) -> Rep:
    cache = A.__dict__.setdefault("_proj_cache", {})
    if v in cache:
        return cache[v]
    dims = {w: len(A.paths[(v, w)]) for w in A.vertices if A.paths.get((v, w))}
    R = Rep(dims, {})
    for a, s, t in list(_live_arrows(A, R)):
        m = zeros(dims[t], dims[s])
        for j, p in enumerate(A.paths[(v, s)]):
            q = A.extend(p, v, a)
            if q is not None:
                m[A.index(v, t, q)][j] = 1
        R.maps[a] = m
    cache[v] = R
    return R


def injective(A: Algebra, v: int) -> Rep:
    """I(v)(w) is dual to the paths from w to v."""
    cache = A.__dict__.setdefault("_inj_cache", {})
    if v in cache:
        return cache[v]
    dims = {w: len(A.paths[(w, v)]) for w in A.vertices if A.paths.get((w, v))}
    R = Rep(dims, {})
    for a, s, t in list(_live_arrows(A, R)):
        m = zeros(dims[t], dims[s])
        for i, p in enumerate(A.paths[(t, v)]):
            q = A.prepend(a, p)
            if q is not None:
                m[i][A.index(s, v, q)] = 1
        R.maps[a] = m
    cache[v] = R
    return R


def simple(A: Algebra, v: int) -> Rep:
    return Rep({v: 1}, {})


def direct_sum(A: Algebra, reps: Sequence[Rep]) -> Rep:
    verts = sorted({w for R in reps for w in R.support()})
    dims = {w: sum(R.dim(w) for R in reps) for w in verts}
    out = Rep(dims, {})
    for a, s, t in list(_live_arrows(A, out)):
        m = zeros(dims[t], dims[s])
        ro = co = 0
        for R in reps:
            blk = R.maps.get(a)
            if blk is not None:
                for i in range(R.dim(t)):
                    for j in range(R.dim(s)):
                        m[ro + i][co + j] = blk[i][j]
            ro += R.dim(t)
            co += R.dim(s)
        out.maps[a] = m
    return out


@dataclass
class Cover:
    """A projective cover P0 -> M.

    ``tops`` lists (vertex, vector of M at that vertex) generating M minimally.
    ``basis[w]`` labels the basis of P0(w) by (summand index, path).
    ``phi[w]`` is the matrix of P0(w) -> M(w).
    """

    tops: List[Tuple[int, List[int]]]
    P0: Rep
    basis: Dict[int, List[Tuple[int, PathT]]]
    phi: Dict[int, Matrix]


def projective_cover(A: Algebra, M: Rep) -> Cover:
    tops: List[Tuple[int, List[int]]] = []
    for v in M.support():
        d = M.dim(v)
        cur: List[List[int]] = []
        for a in A.inc[v]:
            s = A.arrows[a][0]
            if not M.dim(s) or a not in M.maps:
                continue
            mat = M.maps[a]
            for j in range(M.dim(s)):
                cur.append([mat[i][j] for i in range(d)])
        r0 = rank([list(x) for x in zip(*cur)], len(cur)) if cur else 0
        for k in range(d):
            if r0 == d:
                break
            e = [0] * d
            e[k] = 1
            trial = cur + [e]
            r1 = rank([list(x) for x in zip(*trial)], len(trial))
            if r1 > r0:
                cur, r0 = trial, r1
                tops.append((v, e))
    basis: Dict[int, List[Tuple[int, PathT]]] = defaultdict(list)
    images: List[Dict[PathT, List[int]]] = []
    for idx, (v, x) in enumerate(tops):
        # Image of each basis path under P0 -> M, built up one arrow at a time.
        img = {(): list(x)}
        for w in A.vertices:
            for p in A.paths.get((v, w), []):
                basis[w].append((idx, p))
        order = sorted((p for w in A.vertices for p in A.paths.get((v, w), []) if p), key=len)
        for p in order:
            prev = img[p[:-1]]
            a = p[-1]
            t = A.arrows[a][1]
            mat = M.maps.get(a)
            dt = M.dim(t)
            if mat is None or not any(prev):
                img[p] = [0] * dt
            else:
                img[p] = [sum(mat[i][k] * prev[k] for k in range(len(prev)) if prev[k]) % PRIME for i in range(dt)]
        images.append(img)
    P0 = direct_sum(A, [projective(A, v) for v, _ in tops])
    phi: Dict[int, Matrix] = {}
    for w in P0.support():
        cols = [images[idx][p] for idx, p in basis[w]]
        phi[w] = [[c[i] for c in cols] for i in range(M.dim(w))]
    return Cover(tops, P0, dict(basis), phi)


@dataclass
class Sub:
    """A subrepresentation given by basis columns ``incl[w]`` inside an ambient rep."""

    rep: Rep
    incl: Dict[int, List[List[int]]]  # vertex -> list of column vectors in the ambient space


def kernel(A: Algebra, P: Rep, phi: Dict[int, Matrix], target_dims: Dict[int, int]) -> Sub:
    incl: Dict[int, List[List[int]]] = {}
    for w in P.support():
        n = P.dim(w)
        if target_dims.get(w, 0) == 0:
            incl[w] = identity(n)
        else:
            incl[w] = nullspace(phi[w], n)
    return restrict(A, P, incl)


def restrict(A: Algebra, P: Rep, incl: Dict[int, List[List[int]]]) -> Sub:
    dims = {w: len(cols) for w, cols in incl.items() if cols}
    sub = Rep(dims, {})
    for a, s, t in list(_live_arrows(A, sub)):
        Ps = P.maps.get(a)
        if Ps is None:
            continue
        imgs = [[sum(Ps[i][k] * col[k] for k in range(len(col)) if col[k]) % PRIME for i in range(P.dim(t))] for col in incl[s]]
        Bt = [[col[i] for col in incl[t]] for i in range(P.dim(t))]
        try:
            sols = solve_many(Bt, imgs, dims[t])
        except ValueError:
            raise ComputationFailed("subspace is not closed under an arrow map") from None
        sub.maps[a] = [[sols[j][i] for j in range(dims[s])] for i in range(dims[t])]
    return Sub(sub, {w: incl[w] for w in dims})


def syzygy(A: Algebra, M: Rep) -> Tuple[Cover, Sub]:
    cov = projective_cover(A, M)
    return cov, kernel(A, cov.P0, cov.phi, M.dims)


def projective_dimension(A: Algebra, M: Rep, bound: int) -> Optional[int]:
    """pd(M), or None when it exceeds ``bound``."""
    cur = M
    for k in range(bound + 1):
        _, K = syzygy(A, cur)
        if K.rep.total_dim == 0:
            return k
        cur = K.rep
    return None


def auslander_reiten_translate(A: Algebra, M: Rep) -> Rep:
    """tau M = ker(nu P1 -> nu P0) for a minimal presentation P1 -> P0 -> M.

    ``M`` should be indecomposable and non-projective; for a projective input
    P1 = 0 and the result is zero.
    """
    cov0, K = syzygy(A, M)
    cov1 = projective_cover(A, K.rep)
    # Coefficients of the composite P1 -> P0: generator j of P1 (at u_j) maps to
    # an element of P0(u_j), i.e. a combination of paths from v_i to u_j.
    coeffs: Dict[Tuple[int, int], List[Tuple[PathT, int]]] = defaultdict(list)
    for j, (u, x) in enumerate(cov1.tops):
        cols = K.incl[u]
        vec = [sum(cols[k][i] * x[k] for k in range(len(x))) % PRIME for i in range(cov0.P0.dim(u))]
        for pos, c in enumerate(vec):
            if c:
                i, path = cov0.basis[u][pos]
                coeffs[(i, j)].append((path, c))
    # nu P(v) = I(v).  Basis of (+)_j I(u_j) at w: (j, path w -> u_j).
    nu1 = direct_sum(A, [injective(A, u) for u, _ in cov1.tops])
    numap: Dict[int, Matrix] = {}
    tgt_dims: Dict[int, int] = {}
    for w in nu1.support():
        src_basis = [(j, p) for j, (u, _) in enumerate(cov1.tops) for p in A.paths.get((w, u), [])]
        tgt_basis = [(i, p) for i, (v, _) in enumerate(cov0.tops) for p in A.paths.get((w, v), [])]
        tgt_dims[w] = len(tgt_basis)
        src_pos = {key: n for n, key in enumerate(src_basis)}
        m = zeros(len(tgt_basis), len(src_basis))
        for row, (i, q) in enumerate(tgt_basis):
            for j in range(len(cov1.tops)):
                for c_path, c in coeffs.get((i, j), []):
                    pq = A.concat(q, c_path)
                    if pq is None:
                        continue
                    col = src_pos.get((j, pq))
                    if col is not None:
                        m[row][col] = (m[row][col] + c) % PRIME
        numap[w] = m
    return kernel(A, nu1, numap, tgt_dims).rep


def hom_dim_generic(A: Algebra, M: Rep, N: Rep) -> int:
    """dim Hom(M, N) by solving the commutativity equations directly."""
    offs = {}
    n = 0
    for v in A.vertices:
        offs[v] = n
        n += M.dim(v) * N.dim(v)
    rows = []
    for a, (s, t) in A.arrows.items():
        ms, mt, ns, nt = M.dim(s), M.dim(t), N.dim(s), N.dim(t)
        Ma, Na = M.map(A, a), N.map(A, a)
        for i in range(nt):
            for j in range(ms):
                row = [0] * n
                # (N(a) f_s)[i][j] - (f_t M(a))[i][j]
                for k in range(ns):
                    if Na[i][k]:
                        row[offs[s] + k * ms + j] += Na[i][k]
                for k in range(mt):
                    if Ma[k][j]:
                        row[offs[t] + i * mt + k] -= Ma[k][j]
                if any(row):
                    rows.append(row)
    return n - rank(rows, n)
