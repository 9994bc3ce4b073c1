"""Exact linear algebra over the prime field GF(2**31 - 1).

Every representation handled by this package is defined over an arbitrary
field and its structure maps have entries in {0, 1, -1}, so dimension counts
are field independent.  Working modulo a large prime keeps arithmetic exact
and cheap; rationals would give the same numbers more slowly.

Matrices are plain lists of rows.  Sparse systems (lists of ``{col: value}``
rows) are used by the Hom/Ext oracles, where almost every row has at most two
entries.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

PRIME = 2_147_483_647

Matrix = List[List[int]]
SparseRow = Dict[int, int]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def matmul(a: Matrix, b: Matrix, inner: int | None = None, cols: int | None = None) -> Matrix:
    """Product ``a @ b``.  Shapes cannot be read off empty lists, so pass
    ``inner`` and ``cols`` whenever a factor may have no rows."""
    if inner is None:
        inner = len(a[0]) if a else len(b)
    if cols is None:
        cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        orow = out[i]
        for k in range(inner):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(cols):
                    if brow[j]:
                        orow[j] = (orow[j] + x * brow[j]) % PRIME
    return out


def _inv(x: int) -> int:
    return pow(x % PRIME, PRIME - 2, PRIME)


def rref(a: Matrix, ncols: int) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form (a copy) and the pivot columns."""
    m = [[x % PRIME for x in row] for row in a]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _inv(m[r][c])
        m[r] = [(x * inv) % PRIME for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                ri = m[i]
                rr = m[r]
                m[i] = [(ri[j] - f * rr[j]) % PRIME for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a: Matrix, ncols: int | None = None) -> int:
    if not a:
        return 0
    if ncols is None:
        ncols = len(a[0])
    return len(rref(a, ncols)[1])


def nullspace(a: Matrix, ncols: int) -> Matrix:
    """Basis of ``{x : a x = 0}`` as a list of column vectors (each a list)."""
    if not a:
        return identity(ncols)
    red, pivots = rref(a, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = (-row[f]) % PRIME
        basis.append(v)
    return basis


def solve(a: Matrix, b: Sequence[int], ncols: int) -> List[int]:
    """One solution of ``a x = b``; raises ``ValueError`` if inconsistent."""
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    x = [0] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def solve_many(a: Matrix, rhs_cols: Sequence[Sequence[int]], ncols: int) -> List[List[int]]:
    """Solve ``a x = y`` for each column ``y``; returns the solutions as column lists."""
    if not rhs_cols:
        return []
    nrows = len(a)
    aug = [list(a[i]) + [c[i] for c in rhs_cols] for i in range(nrows)]
    red, pivots = rref(aug, ncols + len(rhs_cols))
    if any(pc >= ncols for pc in pivots):
        raise ValueError("inconsistent linear system")
    sols = []
    for k in range(len(rhs_cols)):
        x = [0] * ncols
        for row, pc in zip(red, pivots):
            x[pc] = row[ncols + k]
        sols.append(x)
    return sols


def columns_to_matrix(cols: Sequence[Sequence[int]], nrows: int) -> Matrix:
    return [[col[i] for col in cols] for i in range(nrows)]


def sparse_rank(rows: List[SparseRow]) -> int:
    """Rank of a sparse matrix given as a list of ``{col: value}`` rows."""
    pivot_rows: Dict[int, SparseRow] = {}
    rk = 0
    for row in rows:
        row = {c: v % PRIME for c, v in row.items() if v % PRIME}
        while row:
            c = min(row)
            if c not in pivot_rows:
                inv = _inv(row[c])
                pivot_rows[c] = {k: (v * inv) % PRIME for k, v in row.items()}
                rk += 1
                break
            f = row[c]
            for k, v in pivot_rows[c].items():
                nv = (row.get(k, 0) - f * v) % PRIME
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return rk
