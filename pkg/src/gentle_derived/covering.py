"""Interval modules over the covering quiver of Gamma(p,q,r), r != 0.

The covering quiver is |r| disjoint copies of an A-infinity-infinity quiver
with vertices indexed by the integers:

* ``p == 0``: linear orientation, arrows i -> i+1, shift s(i) = i - 1;
* ``p > 0``: generalized zigzag of period n = p + q.  The arrow between i and
  i+1 points up (i -> i+1) iff (i - 1) mod n < p.  Sources are the vertices
  congruent to 1, sinks those congruent to p + 1, and s(i) = i + n.

The global automorphism sigma sends copy j >= 1 to copy j-1 at the same
vertex and wraps copy 0 to copy |r|-1 while translating by
``wrap = sgn(r) * n`` (zigzag) or ``-sgn(r) * q`` (linear).  Consequently
sigma^r acts on each copy as s (zigzag) or s^q (linear).

Interval modules M_{a,b} live on one copy and are supported on b <= i <= a-1;
endpoints may be infinite.  Homomorphisms between them are computed from the
boundary combinatorics, extensions from an explicit projective presentation,
and the AR translate on the zigzag quiver by DTr on a finite window.  The
``window_oracle_*`` functions recompute Hom and Ext^1 by brute-force linear
algebra and exist purely as an independent check.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

from .errors import (
    ComputationFailed,
    InfiniteDimensionalFirstArgument,
    InfiniteDimensionalInput,
    MixedQuiver,
    ParameterOutOfRange,
    ProjectiveInput,
    RZero,
)
from .linalg import sparse_rank
from .reps import Algebra, Rep, auslander_reiten_translate

INF = math.inf
Endpoint = Union[int, float]


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class CoveringQuiver:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.r == 0:
            raise RZero("the covering is only defined for r != 0")
        if self.p < 0 or self.q < 1:
            raise ParameterOutOfRange(f"covering needs p >= 0 and q >= 1 (got p={self.p}, q={self.q})")

    @property
    def linear(self) -> bool:
        return self.p == 0

    @property
    def copies(self) -> int:
        return abs(self.r)

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def period(self) -> int:
        """Translation period of the orientation."""
        return 1 if self.linear else self.n

    @property
    def shift(self) -> int:
        """s(i) = i + shift."""
        return -1 if self.linear else self.n

    @property
    def wrap(self) -> int:
        """Translation applied when sigma wraps copy 0 around to copy |r|-1."""
        return -self.q * _sgn(self.r) if self.linear else self.n * _sgn(self.r)

    def arrow_up(self, i: int) -> bool:
        """True iff the arrow between i and i+1 is i -> i+1."""
        if self.linear:
            return True
        return (i - 1) % self.n < self.p

    def sigma(self, j: int, i: int, k: int = 1) -> Tuple[int, int]:
        """sigma^k applied to vertex (j, i)."""
        c = self.copies
        jj = j - k
        wraps = -(jj // c)
        return jj % c, i + wraps * self.wrap

    def __str__(self) -> str:
        return f"Gamma({self.p},{self.q},{self.r})"


# ---------------------------------------------------------------- modules


@dataclass(frozen=True)
class IntervalModule:
    quiver: CoveringQuiver
    copy: int
    a: Endpoint
    b: Endpoint

    def __post_init__(self):
        for x in (self.a, self.b):
            if not (isinstance(x, int) or x in (INF, -INF)):
                raise ParameterOutOfRange(f"endpoint {x!r} is neither an integer nor infinite")
        if not self.a > self.b or self.a == -INF or self.b == INF:
            raise ParameterOutOfRange(f"need a > b for M_{{a,b}} (got a={self.a}, b={self.b})")
        if not 0 <= self.copy < self.quiver.copies:
            raise ParameterOutOfRange(f"copy index {self.copy} outside [0, {self.quiver.copies - 1}]")

    @property
    def finite(self) -> bool:
        return isinstance(self.a, int) and isinstance(self.b, int)

    @property
    def dim(self) -> Endpoint:
        return self.a - self.b

    @property
    def top(self) -> Endpoint:
        """Largest vertex of the support."""
        return self.a - 1

    def contains(self, i: int) -> bool:
        return self.b <= i < self.a

    def moved(self, da: int, db: int, copy: Optional[int] = None) -> "IntervalModule":
        return IntervalModule(self.quiver, self.copy if copy is None else copy, self.a + da, self.b + db)

    def __str__(self) -> str:
        return f"M({self.copy}; {_fmt(self.a)}, {_fmt(self.b)})"

    def compact(self) -> str:
        return f"M({self.copy};{_fmt(self.a)},{_fmt(self.b)})"


def _fmt(x: Endpoint) -> str:
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return str(int(x))


_MOD_RE = re.compile(r"\s*\[?\s*M\(\s*(-?\d+)\s*;\s*([+-]?(?:\d+|inf))\s*,\s*([+-]?(?:\d+|inf))\s*\)\s*\]?\s*\Z")


def parse_interval(text: str, Q: CoveringQuiver) -> IntervalModule:
    """Parse ``M(j; a, b)`` (optionally in orbit brackets)."""
    m = _MOD_RE.match(text)
    if not m:
        raise ParameterOutOfRange(f"cannot parse interval module {text!r}")

    def ep(s: str) -> Endpoint:
        if s.lstrip("+-") == "inf":
            return -INF if s.startswith("-") else INF
        return int(s)

    return IntervalModule(Q, int(m.group(1)), ep(m.group(2)), ep(m.group(3)))


def interval(Q: CoveringQuiver, a: Endpoint, b: Endpoint, copy: int = 0) -> IntervalModule:
    return IntervalModule(Q, copy, a, b)


def _same_quiver(M: IntervalModule, N: IntervalModule):
    if M.quiver != N.quiver:
        raise MixedQuiver(f"{M} lives over {M.quiver} but {N} over {N.quiver}")


# ---------------------------------------------------------------- Hom


def hom_dim(M: IntervalModule, N: IntervalModule) -> int:
    """dim Hom(M, N) in Rep(Q), from the boundary rule.

    With K the intersection of the supports, a nonzero map exists (and is then
    unique up to scalar) iff K is nonempty, no arrow enters K from the part of
    M's support outside K (so K is a quotient of M), and no arrow leaves K into
    the part of N's support outside K (so K is a submodule of N).  Only the two
    boundary edges of K need checking.
    """
    _same_quiver(M, N)
    if M.copy != N.copy:
        return 0
    Q = M.quiver
    lo = max(M.b, N.b)
    up = min(M.a, N.a)  # K = [lo, up - 1]
    if not lo < up:
        return 0
    if lo != -INF:
        lo = int(lo)
        up_edge = Q.arrow_up(lo - 1)  # edge between lo-1 and lo
        if M.b < lo and up_edge:  # M continues below K and lo-1 -> lo enters K
            return 0
        if N.b < lo and not up_edge:  # N continues below K and lo -> lo-1 leaves K
            return 0
    if up != INF:
        top = int(up) - 1
        up_edge = Q.arrow_up(top)  # edge between top and top+1
        if M.a > up and not up_edge:  # top+1 -> top enters K from M
            return 0
        if N.a > up and up_edge:  # top -> top+1 leaves K into N
            return 0
    return 1


# ---------------------------------------------------------------- projectives and presentations


def projective_support(Q: CoveringQuiver, v: int) -> Tuple[Endpoint, Endpoint]:
    """(a, b) of the indecomposable projective at v: everything reachable from v."""
    if Q.linear:
        return INF, v
    hi = v
    while Q.arrow_up(hi):
        hi += 1
    lo = v
    while not Q.arrow_up(lo - 1):
        lo -= 1
    return hi + 1, lo


def injective_support(Q: CoveringQuiver, v: int) -> Tuple[Endpoint, Endpoint]:
    """(a, b) of the indecomposable injective at v: everything with a path to v."""
    if Q.linear:
        return v + 1, -INF
    hi = v
    while not Q.arrow_up(hi):
        hi += 1
    lo = v
    while Q.arrow_up(lo - 1):
        lo -= 1
    return hi + 1, lo


def projective_module(Q: CoveringQuiver, v: int, copy: int = 0) -> IntervalModule:
    a, b = projective_support(Q, v)
    return IntervalModule(Q, copy, a, b)


def injective_module(Q: CoveringQuiver, v: int, copy: int = 0) -> IntervalModule:
    a, b = injective_support(Q, v)
    return IntervalModule(Q, copy, a, b)


def _tops(M: IntervalModule) -> List[int]:
    """Vertices of the support receiving no arrow from inside the support."""
    Q = M.quiver
    out = []
    for v in range(int(M.b), int(M.a)):
        from_below = v - 1 >= M.b and Q.arrow_up(v - 1)
        from_above = v + 1 < M.a and not Q.arrow_up(v)
        if not from_below and not from_above:
            out.append(v)
    return out


def projective_presentation(M: IntervalModule) -> Tuple[List[int], List[int]]:
    """Tops of P0 and P1 in a minimal presentation 0 -> P1 -> P0 -> M -> 0.

    P0 covers the local sources of the support.  The kernel is generated at
    the interior local sinks (where two projective summands overlap) and just
    outside each end of the support if the boundary arrow points outward.
    """
    if not M.finite:
        raise InfiniteDimensionalFirstArgument(f"{M} is infinite dimensional")
    Q = M.quiver
    a, b = int(M.a), int(M.b)
    p0 = _tops(M)
    p1 = []
    for v in range(b + 1, a - 1):
        if Q.arrow_up(v - 1) and not Q.arrow_up(v):
            p1.append(v)
    if Q.arrow_up(a - 1):
        p1.append(a)
    if not Q.arrow_up(b - 1):
        p1.append(b - 1)
    return p0, sorted(p1)


def ext1_dim(M: IntervalModule, N: IntervalModule) -> int:
    """dim Ext^1(M, N) = dim coker(Hom(P0, N) -> Hom(P1, N)), with Hom(P(v), N) = N(v)."""
    _same_quiver(M, N)
    if not M.finite:
        raise InfiniteDimensionalFirstArgument(f"{M} is infinite dimensional")
    if M.copy != N.copy:
        return 0
    p0, p1 = projective_presentation(M)
    d1 = sum(1 for v in p1 if N.contains(v))
    d0 = sum(1 for v in p0 if N.contains(v))
    return d1 - d0 + hom_dim(M, N)


def is_projective(M: IntervalModule) -> bool:
    if not M.finite and not M.quiver.linear:
        return False
    tops = _tops(M) if M.finite else ([int(M.b)] if M.a == INF else [])
    return len(tops) == 1 and projective_support(M.quiver, tops[0]) == (M.a, M.b)


def is_injective(M: IntervalModule) -> bool:
    Q = M.quiver
    if Q.linear:
        return M.b == -INF and M.a != INF
    if not M.finite:
        return False
    return any(injective_support(Q, v) == (M.a, M.b) for v in range(int(M.b), int(M.a)))


# ---------------------------------------------------------------- AR translate


def window_margin(Q: CoveringQuiver) -> int:
    # Every projective or injective summand met by DTr sits within distance
    # max(p, q) + 1 of the support, so this margin keeps the window exact.
    return Q.n + 2


def _window_algebra(Q: CoveringQuiver, lo: int, hi: int, opposite: bool) -> Algebra:
    arrows = []
    for i in range(lo, hi):
        s, t = (i, i + 1) if Q.arrow_up(i) else (i + 1, i)
        if opposite:
            s, t = t, s
        arrows.append((i, s, t))
    return Algebra(range(lo, hi + 1), arrows)


def _interval_rep(A: Algebra, b: int, a: int) -> Rep:
    dims = {v: 1 for v in range(b, a)}
    maps = {aid: [[1]] for aid, (s, t) in A.arrows.items() if s in dims and t in dims}
    return Rep(dims, maps)


def _identify_interval(A: Algebra, R: Rep, lo: int, hi: int) -> Optional[Tuple[int, int]]:
    """(a, b) if R is an interval module strictly inside the window, None if zero."""
    supp = R.support()
    if not supp:
        return None
    b, top = supp[0], supp[-1]
    if supp != list(range(b, top + 1)) or any(R.dim(v) != 1 for v in supp):
        raise ComputationFailed(f"DTr result is not an interval module: dims {R.dims}")
    for aid, (s, t) in A.arrows.items():
        if s in supp and t in supp and not R.map(A, aid)[0][0]:
            raise ComputationFailed("DTr result has a zero map inside its support")
    if b <= lo or top >= hi:
        raise ComputationFailed("DTr result touches the window boundary; enlarge the margin")
    return top + 1, b


@lru_cache(maxsize=None)
def _dtr_offset(p: int, q: int, length: int, b_res: int, inverse: bool) -> Optional[Tuple[int, int]]:
    """Endpoint offsets (da, db) of tau (or tau^-1) for M_{b+length, b}, b = b_res.

    The orientation is invariant under translation by the period, so results
    are cached by the residue of b.
    """
    Q = CoveringQuiver(p, q, 1)
    margin = window_margin(Q)
    b, a = b_res, b_res + length
    lo, hi = b - margin, a - 1 + margin
    A = _window_algebra(Q, lo, hi, opposite=inverse)
    res = auslander_reiten_translate(A, _interval_rep(A, b, a))
    ab = _identify_interval(A, res, lo, hi)
    if ab is None:
        return None
    return ab[0] - a, ab[1] - b


def dtr_window(M: IntervalModule, inverse: bool = False) -> Optional[IntervalModule]:
    """tau M (or tau^-1 M) by generic DTr on a finite window; None if M is projective (injective)."""
    if not M.finite:
        raise InfiniteDimensionalInput(f"{M} is infinite dimensional")
    Q = M.quiver
    per = Q.period
    b = int(M.b)
    res = b % per
    off = _dtr_offset(Q.p, Q.q, int(M.a) - b, res, inverse)
    if off is None:
        return None
    return M.moved(off[0], off[1])


def ar_translate(M: IntervalModule) -> IntervalModule:
    """Auslander-Reiten translate in rep(Q)."""
    if not M.finite:
        raise InfiniteDimensionalInput(f"{M} is infinite dimensional")
    if M.quiver.linear:
        return M.moved(1, 1)
    out = dtr_window(M)
    if out is None:
        raise ProjectiveInput(f"{M} is projective")
    return out


def ar_translate_inverse(M: IntervalModule) -> IntervalModule:
    if not M.finite:
        raise InfiniteDimensionalInput(f"{M} is infinite dimensional")
    if M.quiver.linear:
        return M.moved(-1, -1)
    out = dtr_window(M, inverse=True)
    if out is None:
        raise ProjectiveInput(f"{M} is injective (no inverse translate)")
    return out


# ---------------------------------------------------------------- degree shift


def apply_degree_shift(M: IntervalModule, k: int) -> IntervalModule:
    """sigma_*^k M: the module moved along the automorphism sigma^k."""
    Q = M.quiver
    c = Q.copies
    jj = M.copy - k
    wraps = -(jj // c)
    t = wraps * Q.wrap
    return IntervalModule(Q, jj % c, M.a + t, M.b + t)


def s_push(M: IntervalModule, k: int = 1) -> IntervalModule:
    """s_*^k M within the same copy."""
    t = k * M.quiver.shift
    return IntervalModule(M.quiver, M.copy, M.a + t, M.b + t)


@dataclass(frozen=True)
class GradedModuleDescriptor:
    """A finite interval module together with the (vertex of Gamma, internal degree)
    pairs of its one-dimensional pieces."""

    module: IntervalModule
    pieces: Tuple[Tuple[int, int], ...]

    def shifted(self, k: int) -> Tuple[Tuple[int, int], ...]:
        return tuple((x, d - k) for x, d in self.pieces)


def covering_vertex(Q: CoveringQuiver, j: int, i: int) -> Tuple[int, int]:
    """Image of covering vertex (j, i) as (vertex of Gamma(p,q,r), degree).

    Normalized so that moving along sigma lowers the degree by one.
    """
    if Q.linear:
        return (-i) % Q.q + 1, ((i - 1) // Q.q) * Q.r + j
    return (i - 1) % Q.n + 1, -((i - 1) // Q.n) * Q.r + j


def descriptor(M: IntervalModule) -> GradedModuleDescriptor:
    if not M.finite:
        raise InfiniteDimensionalInput(f"{M} is infinite dimensional")
    return GradedModuleDescriptor(M, tuple(covering_vertex(M.quiver, M.copy, i) for i in range(int(M.b), int(M.a))))


# ---------------------------------------------------------------- components


def x1_mouth(Q: CoveringQuiver) -> List[IntervalModule]:
    """Quasi-simple generators of the first regular family (zigzag):
    M_{p+2,1}, M_{1,0}, M_{0,-1}, ..., M_{-q+3,-q+2}."""
    p, q = Q.p, Q.q
    out = [IntervalModule(Q, 0, p + 2, 1)]
    for k in range(q - 1):
        out.append(IntervalModule(Q, 0, 1 - k, -k))
    return out


def x2_mouth(Q: CoveringQuiver) -> List[IntervalModule]:
    """Quasi-simple generators of the second regular family (zigzag):
    M_{2,-q+1}, M_{3,2}, ..., M_{p+1,p}."""
    p, q = Q.p, Q.q
    out = [IntervalModule(Q, 0, 2, -q + 1)]
    for v in range(2, p + 1):
        out.append(IntervalModule(Q, 0, v + 1, v))
    return out


def tile_residues(mouth: Sequence[IntervalModule]) -> frozenset:
    """The quasi-simples tile the line; their left endpoints mod the period."""
    Q = mouth[0].quiver
    return frozenset(int(m.b) % Q.n for m in mouth)


SHAPES = {
    "P": "ZA_inf_inf",
    "I": "ZA_inf_inf",
    "X": "ZA_inf",
    "X1": "ZA_inf",
    "X2": "ZA_inf",
    "Y": "linear-A_inf_inf",
    "Y1": "linear-A_inf_inf",
    "Y2": "linear-A_inf_inf",
    "Z": "linear-A_inf_inf",
    "Z1": "linear-A_inf_inf",
    "Z2": "linear-A_inf_inf",
    "A": "A1",
}


@dataclass(frozen=True)
class ComponentTag:
    family: str
    copy: int
    shape: str

    def __str__(self) -> str:
        return f"{self.family}[{self.copy}] ({self.shape})"


def _tau_steps_to_projective(M: IntervalModule, bound: int) -> Optional[int]:
    cur = M
    for k in range(bound + 1):
        if is_projective(cur):
            return k
        cur = ar_translate(cur)
    return None


def _tau_steps_to_injective(M: IntervalModule, bound: int) -> Optional[int]:
    cur = M
    for k in range(bound + 1):
        if is_injective(cur):
            return k
        cur = ar_translate_inverse(cur)
    return None


def iteration_bound(M: IntervalModule) -> int:
    return int(M.a - M.b) + 2 * M.quiver.n


def classify_component(M: IntervalModule) -> ComponentTag:
    """Module-level component of M in Rep(Q).

    Infinite intervals go by the residue of their finite endpoint.  A finite
    interval is preprojective if iterating tau reaches a projective,
    preinjective if iterating tau^-1 reaches an injective, and otherwise
    regular, in which case its endpoints are boundaries of the tiling by the
    quasi-simples of exactly one regular family.
    """
    Q = M.quiver
    j = M.copy

    def tag(f):
        return ComponentTag(f, j, SHAPES[f])

    if M.a == INF and M.b == -INF:
        return tag("A")
    if Q.linear:
        if M.a == INF:
            return tag("Y")
        if M.b == -INF:
            return tag("Z")
        return tag("X")
    n, p = Q.n, Q.p
    r1 = tile_residues(x1_mouth(Q))
    r2 = tile_residues(x2_mouth(Q))
    if M.a == INF:
        return tag("Y1" if int(M.b) % n in r1 else "Y2")
    if M.b == -INF:
        return tag("Z1" if 1 <= (int(M.a) - 1) % n + 1 <= p else "Z2")
    bound = iteration_bound(M)
    if _tau_steps_to_projective(M, bound) is not None:
        return tag("P")
    if _tau_steps_to_injective(M, bound) is not None:
        return tag("I")
    ra, rb = int(M.a) % n, int(M.b) % n
    if ra in r1 and rb in r1:
        return tag("X1")
    if ra in r2 and rb in r2:
        return tag("X2")
    raise ComputationFailed(f"{M} is neither preprojective, preinjective, nor on a regular tiling")


def residue_family(M: IntervalModule) -> str:
    """Closed-form family of a finite zigzag interval from endpoint residues alone."""
    Q = M.quiver
    r1 = tile_residues(x1_mouth(Q))
    ra, rb = int(M.a) % Q.n, int(M.b) % Q.n
    a1, b1 = ra in r1, rb in r1
    if a1 and b1:
        return "X1"
    if not a1 and not b1:
        return "X2"
    return "P" if a1 else "I"


# ---------------------------------------------------------------- enumeration


def enumerate_window(Q: CoveringQuiver, lo: int, hi: int, copy: int = 0) -> List[IntervalModule]:
    """Finite intervals supported in [lo, hi] and infinite ones with a finite endpoint there."""
    if hi < lo:
        return []
    out = []
    for b in range(lo, hi + 1):
        for a in range(b + 1, hi + 2):
            out.append(IntervalModule(Q, copy, a, b))
    for b in range(lo, hi + 1):
        out.append(IntervalModule(Q, copy, INF, b))
    for top in range(lo, hi + 1):
        out.append(IntervalModule(Q, copy, top + 1, -INF))
    return out


# ---------------------------------------------------------------- oracles


def oracle_slack(Q: CoveringQuiver, slack: Optional[int] = None) -> int:
    if slack is not None:
        return slack
    env = os.environ.get("GENTLE_ORACLE_SLACK")
    if env:
        return int(env)
    return Q.n


def _oracle_window(M: IntervalModule, N: IntervalModule, slack: int) -> Tuple[int, int]:
    pts = [x for x in (M.b, M.a - 1, N.b, N.a - 1) if x not in (INF, -INF)]
    if not pts:
        return -slack, slack
    return int(min(pts)) - slack, int(max(pts)) + slack


def _oracle_system(M: IntervalModule, N: IntervalModule, slack: Optional[int]):
    """Sparse matrix of delta: (+)_v Hom(M_v, N_v) -> (+)_{x->y} Hom(M_x, N_y) on a window."""
    Q = M.quiver
    lo, hi = _oracle_window(M, N, oracle_slack(Q, slack))
    var = {}
    for v in range(lo, hi + 1):
        if M.contains(v) and N.contains(v):
            var[v] = len(var)
    rows = []
    targets = 0
    for i in range(lo, hi):
        x, y = (i, i + 1) if Q.arrow_up(i) else (i + 1, i)
        if not (M.contains(x) and N.contains(y)):
            continue
        targets += 1
        row = {}
        # (N(alpha) f_x - f_y M(alpha)) for the arrow x -> y
        if x in var and N.contains(x):
            row[var[x]] = row.get(var[x], 0) + 1
        if y in var and M.contains(y):
            row[var[y]] = row.get(var[y], 0) - 1
        rows.append(row)
    return len(var), targets, sparse_rank(rows)


def window_oracle_hom(M: IntervalModule, N: IntervalModule, slack: Optional[int] = None) -> int:
    """dim Hom(M, N) by solving the commutativity equations on a finite window."""
    _same_quiver(M, N)
    if M.copy != N.copy:
        return 0
    nvars, _, rk = _oracle_system(M, N, slack)
    return nvars - rk


def window_oracle_ext(M: IntervalModule, N: IntervalModule, slack: Optional[int] = None) -> int:
    """dim Ext^1(M, N) as the cokernel of the standard two-term complex on a window."""
    _same_quiver(M, N)
    if not M.finite:
        raise InfiniteDimensionalFirstArgument(f"{M} is infinite dimensional")
    if M.copy != N.copy:
        return 0
    _, targets, rk = _oracle_system(M, N, slack)
    return targets - rk
