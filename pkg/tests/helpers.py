"""Shared fixtures and random transformations for the test suite."""

import random

from gentle_derived.dsl import gamma, gamma_prime, lambda_family

R_VALUES = (-3, -2, -1, 1, 2, 3)


def omega(max_n=5, max_m=3):
    """Parameter triples (r, n, m) with n >= r >= 1 and m >= 0."""
    for n in range(1, max_n + 1):
        for r in range(1, n + 1):
            for m in range(max_m + 1):
                yield r, n, m


def gamma_grid(max_pq=3, rs=range(-3, 4)):
    for p in range(1, max_pq + 1):
        for q in range(1, max_pq + 1):
            for r in rs:
                yield p, q, r


def builtin_fixtures():
    """Every presentation family member used by the grid-based checks."""
    out = []
    for p, q, r in gamma_grid():
        out.append((f"Gamma({p},{q},{r})", gamma(p, q, r)))
    for q in range(1, 4):
        for r in range(-3, 4):
            out.append((f"GammaPrime({q},{r})", gamma_prime(q, r)))
    for r, n, m in omega(max_n=4, max_m=2):
        for d in (-2, 0, 3):
            out.append((f"Lambda({r},{n},{m},{d})", lambda_family(r, n, m, d)))
    return out


def random_transform(P, rng: random.Random):
    """A random relabeling of vertices and arrows followed by a random regrading."""
    new_vs = rng.sample(range(-50, 50), len(P.vertices))
    vmap = dict(zip(P.vertices, new_vs))
    ids = [a.id for a in P.arrows]
    amap = dict(zip(ids, rng.sample(range(100, 200), len(ids))))
    Q = P.relabel(vmap, amap)
    weights = {v: rng.randint(-4, 4) for v in Q.vertices}
    return Q.regrade(weights)
