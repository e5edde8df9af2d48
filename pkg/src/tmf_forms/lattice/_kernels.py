"""Integer-only Fincke-Pohst enumeration kernels.

Coordinates are fixed from the last index down to the first.  At level i the
remaining form, minimised over x_0..x_{i-1}, is a Schur complement of the Gram
matrix.  Scaling by the leading principal minor D_i makes it integral: the
scaled complements are exactly the Bareiss elimination matrices ``M[i]``.

With N_{i+1} = D_{i+1} * (minimum of the form given x_{i+1..}) and
B = sum_{j>i} M[i][i, j] x_j, the admissible x_i satisfy

    (D_{i+1} x_i + B)^2 <= D_i (D_{i+1} T - N_{i+1})

and the next state is N_i = ((D_{i+1} x_i + B)^2 + D_i N_{i+1}) / D_{i+1}
(an exact division).  At the leaf N_0 is the exact norm.  Only one vector
of each +-pair is produced: the one whose last nonzero coordinate is positive.
"""

from __future__ import annotations

import math

import numpy as np

from .._accel import njit

_INT64_SAFE = 1 << 62


def bareiss_data(gram):
    """Leading minors D_0..D_n and the scaled Schur complements M[i] (Python ints)."""
    n = len(gram)
    a = [list(map(int, row)) for row in gram]
    minors = [1]
    mats = []
    prev = 1
    for k in range(n):
        mats.append([row[:] for row in a])
        piv = a[k][k]
        minors.append(piv)
        if k == n - 1:
            break
        nxt = [row[:] for row in a]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * a[i][j] - a[i][k] * a[k][j]
                q, r = divmod(num, prev)
                assert r == 0
                nxt[i][j] = q
        a = nxt
        prev = piv
    return minors, mats


def coordinate_bounds(gram, max_norm):
    """|x_j| <= isqrt(T * (G^-1)_jj) for every vector of norm <= T."""
    from fractions import Fraction

    n = len(gram)
    # inverse diagonal by exact Gauss-Jordan
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(gram)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        pv = m[c][c]
        m[c] = [v / pv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    out = []
    for j in range(n):
        v = m[j][n + j] * max_norm
        out.append(math.isqrt(v.numerator // v.denominator))
    return out


def fits_int64(gram, max_norm) -> bool:
    minors, mats = bareiss_data(gram)
    n = len(gram)
    xb = coordinate_bounds(gram, max_norm)
    T = max_norm
    for i in range(n):
        bmax = sum(abs(mats[i][i][j]) * xb[j] for j in range(i + 1, n))
        lin = minors[i + 1] * xb[i] + bmax
        worst = max(lin * lin + minors[i] * minors[i + 1] * T,
                    minors[i] * minors[i + 1] * T + minors[i] * bmax)
        if worst >= _INT64_SAFE or minors[i] * minors[i + 1] * T * 4 >= _INT64_SAFE:
            return False
    return True


def _as_arrays(gram, dtype):
    minors, mats = bareiss_data(gram)
    n = len(gram)
    rows = np.zeros((n, n), dtype=dtype)
    for i in range(n):
        for j in range(n):
            rows[i, j] = mats[i][i][j] if j > i else 0
    return np.array(minors, dtype=dtype), rows


def _sort_rows(vecs: np.ndarray) -> np.ndarray:
    if len(vecs) == 0:
        return vecs
    order = np.lexsort(vecs.T[::-1])
    return vecs[order]


# ---------------------------------------------------------------------------
# numba kernel


@njit(cache=True)
def _isqrt64(v):
    s = np.int64(math.sqrt(np.float64(v)))
    while s * s > v:
        s -= 1
    while (s + 1) * (s + 1) <= v:
        s += 1
    return s


@njit(cache=True)
def _dfs_kernel(minors, rows, T, out, budget):
    """Depth-first enumeration.  ``out`` is None-like (0 rows) on the counting
    pass; returns the number of half-vectors, or -1 when ``budget`` is hit."""
    n = rows.shape[0]
    x = np.zeros(n, dtype=np.int64)
    N = np.zeros(n + 1, dtype=np.int64)
    B = np.zeros(n, dtype=np.int64)
    cur = np.zeros(n, dtype=np.int64)
    hi = np.zeros(n, dtype=np.int64)
    zero_above = np.zeros(n + 1, dtype=np.bool_)
    zero_above[n] = True
    fill = out.shape[0] > 0
    count = 0

    i = n - 1
    # open level i
    b = 0
    disc = minors[i] * (minors[i + 1] * T - N[i + 1])
    B[i] = b
    if disc < 0:
        return 0
    s = _isqrt64(disc)
    d1 = minors[i + 1]
    lo = -((b + s) // d1)
    cur[i] = 0 if zero_above[i + 1] and lo < 0 else lo
    hi[i] = (s - b) // d1

    while True:
        if cur[i] > hi[i]:
            i += 1
            if i == n:
                break
            cur[i] += 1
            continue
        xi = cur[i]
        x[i] = xi
        d1 = minors[i + 1]
        t = d1 * xi + B[i]
        N[i] = (t * t + minors[i] * N[i + 1]) // d1
        zero_above[i] = zero_above[i + 1] and xi == 0
        if i == 0:
            if not zero_above[0]:
                if fill:
                    for j in range(n):
                        out[count, j] = x[j]
                count += 1
                if count > budget:
                    return -1
            cur[0] += 1
            continue
        i -= 1
        b = 0
        for j in range(i + 1, n):
            b += rows[i, j] * x[j]
        B[i] = b
        disc = minors[i] * (minors[i + 1] * T - N[i + 1])
        if disc < 0:
            cur[i] = 1
            hi[i] = 0
            continue
        s = _isqrt64(disc)
        d1 = minors[i + 1]
        lo = -((b + s) // d1)
        if zero_above[i + 1] and lo < 0:
            lo = 0
        cur[i] = lo
        hi[i] = (s - b) // d1
    return count


def enumerate_numba(gram, max_norm: int, budget: int) -> np.ndarray:
    minors, rows = _as_arrays(gram, np.int64)
    empty = np.zeros((0, len(gram)), dtype=np.int64)
    count = _dfs_kernel(minors, rows, np.int64(max_norm), empty, np.int64(budget))
    if count < 0:
        return None
    out = np.zeros((count, len(gram)), dtype=np.int64)
    _dfs_kernel(minors, rows, np.int64(max_norm), out, np.int64(budget))
    return _sort_rows(out)


# ---------------------------------------------------------------------------
# numpy kernel

_CHUNK = 1 << 16


def _isqrt_vec(v: np.ndarray) -> np.ndarray:
    if v.dtype == object:
        return np.array([math.isqrt(int(t)) for t in v], dtype=object)
    s = np.sqrt(v.astype(np.float64)).astype(np.int64)
    for _ in range(3):
        s = np.where(s * s > v, s - 1, s)
        s = np.where((s + 1) * (s + 1) <= v, s + 1, s)
    return s


class _Budget(Exception):
    pass


def enumerate_numpy(gram, max_norm: int, budget: int, dtype=np.int64) -> np.ndarray:
    """Level-by-level expansion of the same recursion, vectorised over states.
    The frontier is processed in chunks to keep memory bounded.  ``dtype=object``
    gives unbounded Python integers."""
    n = len(gram)
    minors, rows = _as_arrays(gram, dtype)
    T = dtype(max_norm) if dtype is not object else max_norm
    found = []
    total = [0]

    def expand(i, X, Nn, Z):
        if i < 0:
            keep = ~Z
            if keep.any():
                total[0] += int(keep.sum())
                if total[0] > budget:
                    raise _Budget
                found.append(X[keep].astype(np.int64))
            return
        d0, d1 = minors[i], minors[i + 1]
        if i + 1 < n:
            B = X[:, i + 1:].dot(rows[i, i + 1:])
        else:
            B = np.zeros(len(X), dtype=dtype)
        disc = d0 * (d1 * T - Nn)
        ok = disc >= 0
        disc = np.where(ok, disc, 0)
        s = _isqrt_vec(disc)
        lo = -((B + s) // d1)
        lo = np.where(Z & (lo < 0), 0, lo)
        hi = (s - B) // d1
        cnt = np.where(ok, hi - lo + 1, 0)
        cnt = np.maximum(cnt, 0).astype(np.int64)
        m = int(cnt.sum())
        if m == 0:
            return
        parent = np.repeat(np.arange(len(X)), cnt)
        start = np.cumsum(cnt) - cnt
        offs = np.arange(m) - np.repeat(start, cnt)
        xi = lo[parent] + offs
        if dtype is object:
            xi = xi.astype(object)
        t = d1 * xi + B[parent]
        newN = (t * t + d0 * Nn[parent]) // d1
        newX = X[parent]
        newX[:, i] = xi
        newZ = Z[parent] & (xi == 0)
        for a in range(0, m, _CHUNK):
            sl = slice(a, a + _CHUNK)
            expand(i - 1, newX[sl], newN[sl], newZ[sl])

    X0 = np.zeros((1, n), dtype=dtype)
    N0 = np.zeros(1, dtype=dtype)
    Z0 = np.ones(1, dtype=bool)
    try:
        expand(n - 1, X0, N0, Z0)
    except _Budget:
        return None
    if not found:
        return np.zeros((0, n), dtype=np.int64)
    return _sort_rows(np.concatenate(found))
