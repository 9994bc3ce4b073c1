"""The orbit category D^b(grmod_0 Gamma) / (Sigma o <-1>) for Gamma = Gamma(p,q,r), r != 0.

Gamma(p,q,r) is graded hereditary, so every indecomposable of the bounded
derived category of graded modules is a shifted stalk Sigma^s M of an
indecomposable graded module, and graded modules are interval modules over the
covering quiver.  The degree shift <1> acts on interval modules as sigma_*.

Since Phi = Sigma o <-1> is inverted in the orbit category, Sigma^s M is
isomorphic to M<s> = sigma_*^s M placed in degree 0.  Canonical representatives
are therefore plain interval modules, and Sigma acts on them as sigma_*.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .covering import (
    INF,
    ComponentTag,
    CoveringQuiver,
    IntervalModule,
    SHAPES,
    apply_degree_shift,
    ar_translate,
    ar_translate_inverse,
    classify_component,
    ext1_dim,
    hom_dim,
    injective_support,
    is_injective,
    is_projective,
    projective_support,
    tile_residues,
    window_oracle_ext,
    window_oracle_hom,
    x1_mouth,
    x2_mouth,
)
from .errors import InfiniteDimensional, MixedQuiver, ParameterOutOfRange, RZero


@dataclass(frozen=True)
class DerivedObject:
    """The stalk complex Sigma^shift M in D^b of graded modules."""

    module: IntervalModule
    shift: int = 0


@dataclass(frozen=True)
class OrbitObject:
    """An indecomposable of the orbit category, stored by its canonical module (shift 0)."""

    module: IntervalModule

    @property
    def quiver(self) -> CoveringQuiver:
        return self.module.quiver

    def __str__(self) -> str:
        return f"[{self.module.compact()}]"


def to_orbit(X) -> OrbitObject:
    """Canonical representative: Sigma^s M ~ sigma_*^s M in degree 0."""
    if isinstance(X, OrbitObject):
        return X
    if isinstance(X, IntervalModule):
        return OrbitObject(X)
    return OrbitObject(apply_degree_shift(X.module, X.shift))


def suspend(X: OrbitObject, k: int = 1) -> OrbitObject:
    return OrbitObject(apply_degree_shift(X.module, k))


def orbit_isomorphic(X, Y) -> bool:
    return to_orbit(X) == to_orbit(Y)


def orbit_isomorphic_search(X: DerivedObject, Y: DerivedObject, bound: int) -> bool:
    """Brute force: is X = Phi^p Y = Sigma^p Y<-p> in D^b for some |p| <= bound?"""
    for p in range(-bound, bound + 1):
        if X.shift == Y.shift + p and X.module == apply_degree_shift(Y.module, -p):
            return True
    return False


# ---------------------------------------------------------------- Hom


def _require_fd(*objs: OrbitObject):
    for X in objs:
        if X.quiver.r == 0:
            raise RZero("orbit calculus needs r != 0")
        if not X.module.finite:
            raise InfiniteDimensional(f"{X} is not in D_fd")
    if len({X.quiver for X in objs}) > 1:
        raise MixedQuiver("objects live over different covering quivers")


def orbit_hom_dim(X: OrbitObject, Y: OrbitObject, n: int = 0) -> int:
    """dim Hom(X, Sigma^n Y) in the orbit category.

    The sum over p of Hom_{D^b}(X, Sigma^{n+p} Y<-p>) keeps only the terms
    with n + p in {0, 1} because graded modules have projective dimension <= 1.
    """
    X, Y = to_orbit(X), to_orbit(Y)
    _require_fd(X, Y)
    return hom_dim(X.module, apply_degree_shift(Y.module, n)) + ext1_dim(
        X.module, apply_degree_shift(Y.module, n - 1)
    )


def truncation_bound(X: OrbitObject, Y: OrbitObject, n: int) -> int:
    """A |p| range large enough to contain every nonzero summand.

    Nonzero summands need n + p in {0, 1}; the extra copies-worth of slack
    makes the stability check below meaningful rather than vacuous.
    """
    return abs(n) + 1 + X.quiver.copies


def orbit_hom_dim_summation(X: OrbitObject, Y: OrbitObject, n: int, bound: Optional[int] = None) -> int:
    """Direct summation over |p| <= bound using the brute-force window oracles.

    Degree k = n + p summands: k = 0 is Hom, k = 1 is Ext^1, and all other
    degrees vanish over the covering quiver (a hereditary path category).
    """
    X, Y = to_orbit(X), to_orbit(Y)
    _require_fd(X, Y)
    if bound is None:
        bound = truncation_bound(X, Y, n)
    total = 0
    for p in range(-bound, bound + 1):
        k = n + p
        Z = apply_degree_shift(Y.module, -p)
        if k == 0:
            total += window_oracle_hom(X.module, Z)
        elif k == 1:
            total += window_oracle_ext(X.module, Z)
    return total


# ---------------------------------------------------------------- derived tau and components


def _interval_or_none(Q: CoveringQuiver, copy: int, a, b) -> Optional[IntervalModule]:
    if a > b:
        return IntervalModule(Q, copy, a, b)
    return None


def radical_summands(Q: CoveringQuiver, v: int, copy: int) -> List[IntervalModule]:
    """Summands of rad P(v): the projective with its top v removed."""
    a, b = projective_support(Q, v)
    return [m for m in (_interval_or_none(Q, copy, v, b), _interval_or_none(Q, copy, a, v + 1)) if m]


def socle_quotient_summands(Q: CoveringQuiver, v: int, copy: int) -> List[IntervalModule]:
    """Summands of I(v)/S(v)."""
    a, b = injective_support(Q, v)
    return [m for m in (_interval_or_none(Q, copy, v, b), _interval_or_none(Q, copy, a, v + 1)) if m]


def _projective_vertex(M: IntervalModule) -> Optional[int]:
    if not M.finite or not is_projective(M):
        return None
    for v in range(int(M.b), int(M.a)):
        if projective_support(M.quiver, v) == (M.a, M.b):
            return v
    return None


def _injective_vertex(M: IntervalModule) -> Optional[int]:
    if not M.finite or not is_injective(M):
        return None
    for v in range(int(M.b), int(M.a)):
        if injective_support(M.quiver, v) == (M.a, M.b):
            return v
    return None


def derived_tau(X: OrbitObject) -> OrbitObject:
    """AR translate in D_fd: tau P(v) = Sigma^-1 I(v), otherwise the module translate."""
    X = to_orbit(X)
    _require_fd(X)
    M = X.module
    v = _projective_vertex(M)
    if v is not None:
        a, b = injective_support(M.quiver, v)
        return OrbitObject(apply_degree_shift(IntervalModule(M.quiver, M.copy, a, b), -1))
    return OrbitObject(ar_translate(M))


def derived_tau_inverse(X: OrbitObject) -> OrbitObject:
    X = to_orbit(X)
    _require_fd(X)
    M = X.module
    v = _injective_vertex(M)
    if v is not None:
        a, b = projective_support(M.quiver, v)
        return OrbitObject(apply_degree_shift(IntervalModule(M.quiver, M.copy, a, b), 1))
    return OrbitObject(ar_translate_inverse(M))


def derived_component(X) -> ComponentTag:
    """Component of the orbit category containing X.

    Preprojective modules of copy j and preinjective modules of copy j+1 are
    glued into one ZA_inf_inf component P_j by tau P(v) = Sigma^-1 I(v).
    """
    X = to_orbit(X)
    t = classify_component(X.module)
    if t.family == "I":
        return ComponentTag("P", (t.copy - 1) % X.quiver.copies, SHAPES["P"])
    return t


def ar_middle(X: OrbitObject) -> List[OrbitObject]:
    """Middle term of the AR triangle ending at X, as a list of indecomposables.

    For a module X with module translate T the middle term is the sum of the
    nonzero intervals among M_{a_X, b_T} and M_{a_T, b_X}; at a projective
    P(v) it is rad P(v) plus Sigma^-1 (I(v)/S(v)).
    """
    X = to_orbit(X)
    _require_fd(X)
    M = X.module
    Q = M.quiver
    v = _projective_vertex(M)
    if v is not None:
        out = [OrbitObject(m) for m in radical_summands(Q, v, M.copy)]
        out += [OrbitObject(apply_degree_shift(m, -1)) for m in socle_quotient_summands(Q, v, M.copy)]
        return sorted(out, key=_order_key)
    T = ar_translate(M)
    cands = [_interval_or_none(Q, M.copy, M.a, T.b), _interval_or_none(Q, M.copy, T.a, M.b)]
    return sorted((OrbitObject(m) for m in cands if m), key=_order_key)


def ar_successors(X: OrbitObject) -> List[OrbitObject]:
    return ar_middle(derived_tau_inverse(X))


def _order_key(X: OrbitObject):
    M = X.module
    return (M.copy, M.b, M.a)


# ---------------------------------------------------------------- sampling


REGULAR_FAMILIES = ("X1", "X2", "X")


def _family_residues(Q: CoveringQuiver, family: str) -> Tuple[frozenset, frozenset]:
    """Allowed residues (of a, of b) mod the period for finite intervals in a module family."""
    if Q.linear:
        if family != "X":
            raise ParameterOutOfRange(f"the linear covering has finite family X only, not {family}")
        every = frozenset([0])
        return every, every
    r1 = tile_residues(x1_mouth(Q))
    r2 = tile_residues(x2_mouth(Q))
    table = {"X1": (r1, r1), "X2": (r2, r2), "P": (r1, r2), "I": (r2, r1)}
    if family not in table:
        raise ParameterOutOfRange(f"no finite intervals in family {family}")
    return table[family]


def sample_family(Q: CoveringQuiver, family: str, count: int, rng: random.Random, span: int = 3) -> List[IntervalModule]:
    """Random finite intervals of a module family, endpoints within span periods of 0."""
    ra, rb = _family_residues(Q, family)
    per = Q.period
    lo, hi = -span * max(per, 2), span * max(per, 2)
    bs = [b for b in range(lo, hi) if b % per in rb]
    out = []
    while len(out) < count:
        b = rng.choice(bs)
        a_choices = [a for a in range(b + 1, b + 1 + 3 * max(per, 2)) if a % per in ra]
        a = rng.choice(a_choices)
        out.append(IntervalModule(Q, rng.randrange(Q.copies), a, b))
    return out


# ---------------------------------------------------------------- tau-Sigma relations


@dataclass
class TauSigmaReport:
    params: Tuple[int, int, int]
    family: str
    samples: int
    seed: int
    relation: Optional[Tuple[int, int]]  # (k, e) with tau^k = Sigma^e, minimal k
    max_k: int
    max_e: int
    witnesses: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "params": list(self.params),
            "family": self.family,
            "samples": self.samples,
            "seed": self.seed,
            "relation": None if self.relation is None else {"tau_power": self.relation[0], "sigma_power": self.relation[1]},
            "search": {"max_k": self.max_k, "max_e": self.max_e},
            "witnesses": self.witnesses,
        }

    def __str__(self) -> str:
        rel = "absent" if self.relation is None else f"tau^{self.relation[0]} = Sigma^{self.relation[1]}"
        return f"{self.family} over Gamma{self.params}: {rel} ({self.samples} samples, seed {self.seed})"


def verify_tau_sigma(
    Q: CoveringQuiver,
    family: str,
    samples: int,
    seed: int = 0,
    max_k: Optional[int] = None,
    max_e: Optional[int] = None,
) -> TauSigmaReport:
    """Search for the smallest k such that tau^k X = Sigma^e X for one e shared by all samples.

    ``family`` names a module family ("X1", "X2", "P" for zigzag; "X" for
    linear).  tau is the derived translate; candidate exponents are
    |k| <= max_k (default 2(p+q)) and |e| <= max_e (default 2|r|(p+q)).
    """
    if Q.r == 0:
        raise RZero("orbit calculus needs r != 0")
    rng = random.Random(seed)
    mods = sample_family(Q, family, samples, rng)
    if max_k is None:
        max_k = 2 * Q.n
    if max_e is None:
        max_e = 2 * Q.copies * Q.n
    objs = [OrbitObject(M) for M in mods]
    iterates = list(objs)
    relation = None
    for k in range(1, max_k + 1):
        iterates = [derived_tau(T) for T in iterates]
        common = None
        for X, T in zip(objs, iterates):
            es = {e for e in range(-max_e, max_e + 1) if suspend(X, e) == T}
            common = es if common is None else common & es
            if not common:
                break
        if common:
            relation = (k, min(common, key=abs))
            break
    rep = TauSigmaReport((Q.p, Q.q, Q.r), family, samples, seed, relation, max_k, max_e)
    rep.witnesses = [str(X) for X in objs[:3]]
    return rep


# ---------------------------------------------------------------- suspension action


@dataclass
class SuspensionReport:
    params: Tuple[int, int, int]
    family: str
    samples: int
    order: Optional[int]
    shifts_copy_down: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__, params=list(self.params))


def suspension_order(X: OrbitObject, limit: int) -> Optional[int]:
    """Smallest k >= 1 with Sigma^k X in the component of X."""
    X = to_orbit(X)
    t0 = derived_component(X)
    for k in range(1, limit + 1):
        if derived_component(suspend(X, k)) == t0:
            return k
    return None


def verify_suspension(Q: CoveringQuiver, family: str, samples: int, seed: int = 0) -> SuspensionReport:
    """Sigma sends component index j to j-1 mod |r| and has order |r| on the family."""
    rng = random.Random(seed)
    c = Q.copies
    orders = set()
    down = True
    for M in sample_family(Q, family, samples, rng):
        X = OrbitObject(M)
        t = derived_component(X)
        s = derived_component(suspend(X))
        if s.family != t.family or s.copy != (t.copy - 1) % c:
            down = False
        orders.add(suspension_order(X, 2 * c))
    order = orders.pop() if len(orders) == 1 else None
    return SuspensionReport((Q.p, Q.q, Q.r), family, samples, order, down)


def derived_families(Q: CoveringQuiver) -> List[str]:
    return ["X"] if Q.linear else ["P", "X1", "X2"]


def seed_object(Q: CoveringQuiver, family: str) -> IntervalModule:
    """A fixed copy-0 member of each module family."""
    if family == "X":
        return IntervalModule(Q, 0, 1, 0)
    if family == "X1":
        return x1_mouth(Q)[0]
    if family == "X2":
        return x2_mouth(Q)[0]
    if family == "P":
        a, b = projective_support(Q, 1)
        return IntervalModule(Q, 0, a, b)
    if family in ("Y", "Y1", "Y2"):
        b = {"Y": 0, "Y1": 1, "Y2": 2}[family]
        return IntervalModule(Q, 0, INF, b)
    if family in ("Z", "Z1", "Z2"):
        a = {"Z": 1, "Z1": 1, "Z2": Q.p + 1}[family]
        return IntervalModule(Q, 0, a, -INF)
    if family == "A":
        return IntervalModule(Q, 0, INF, -INF)
    raise ParameterOutOfRange(f"unknown family {family}")


def sigma_orbit_tags(M: IntervalModule) -> List[ComponentTag]:
    """Component tags along M, Sigma M, Sigma^2 M, ... until the first repeat."""
    seen: List[ComponentTag] = []
    X = OrbitObject(M)
    while True:
        t = derived_component(X) if M.finite else classify_component(X.module)
        if t in seen:
            return seen
        seen.append(t)
        X = suspend(X)


def copy_permutation(Q: CoveringQuiver) -> Dict[int, int]:
    """Action of Sigma on component indices."""
    return {j: (j - 1) % Q.copies for j in range(Q.copies)}
