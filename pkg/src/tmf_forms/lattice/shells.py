"""Shell enumeration: every lattice vector up to a norm bound, grouped by norm."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .._accel import HAVE_NUMBA, default_backend
from ..errors import BudgetExceeded
from . import _kernels
from .gram import GramLattice

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class ShellTable:
    """Vectors of norm <= max_norm.

    ``shells[2n]`` holds one representative of each +-pair (the one whose last
    nonzero coordinate is positive), sorted lexicographically; ``counts[2n]`` is
    the full count L_n, i.e. twice the representatives, and ``counts[0] == 1``.
    """

    max_norm: int
    shells: dict
    counts: dict

    def representatives(self) -> np.ndarray:
        arrs = [self.shells[k] for k in sorted(self.shells) if k > 0]
        if not arrs:
            return np.zeros((0, 0), dtype=np.int64)
        return np.concatenate(arrs)

    def theta_coeffs(self) -> list[int]:
        return [self.counts[2 * n] for n in range(self.max_norm // 2 + 1)]


def enumerate_shells(
    g: GramLattice,
    max_norm: int,
    budget: int = DEFAULT_BUDGET,
    backend: str | None = None,
) -> ShellTable:
    """All vectors with norm <= max_norm, exact integer arithmetic throughout.

    ``budget`` caps the number of vectors (counting both members of a pair);
    ``backend`` is "numba", "numpy" or "python" (numpy over Python ints).
    """
    if max_norm < 0 or max_norm % 2:
        raise ValueError("max_norm must be a non-negative even integer")
    backend = backend or default_backend()
    half_budget = budget // 2
    n = g.dim
    G = g.gram
    if max_norm == 0:
        vecs = np.zeros((0, n), dtype=np.int64)
    else:
        safe = _kernels.fits_int64(G, max_norm)
        if backend == "numba" and HAVE_NUMBA and safe:
            vecs = _kernels.enumerate_numba(G, max_norm, half_budget)
        elif backend in ("numba", "numpy") and safe:
            vecs = _kernels.enumerate_numpy(G, max_norm, half_budget)
        else:
            vecs = _kernels.enumerate_numpy(G, max_norm, half_budget, dtype=object)
        if vecs is None:
            raise BudgetExceeded(
                f"more than {budget} vectors of norm <= {max_norm}; raise the budget"
            )
    norms = _norms(vecs, G, max_norm)
    shells = {}
    counts = {0: 1}
    for k in range(2, max_norm + 1, 2):
        sel = vecs[norms == k]
        shells[k] = sel
        counts[k] = 2 * len(sel)
    return ShellTable(max_norm, shells, counts)


def _norms(vecs: np.ndarray, G, max_norm: int) -> np.ndarray:
    if len(vecs) == 0:
        return np.zeros(0, dtype=np.int64)
    if _kernels.fits_int64(G, max_norm):
        M = np.array(G, dtype=np.int64)
        return ((vecs @ M) * vecs).sum(axis=1)
    V = vecs.astype(object)
    M = np.array(G, dtype=object)
    return np.array([int(t) for t in (V.dot(M) * V).sum(axis=1)], dtype=np.int64)
