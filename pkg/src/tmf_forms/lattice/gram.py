"""Gram matrices of positive definite even unimodular lattices."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from ..errors import NotEven, NotPositiveDefinite, NotSymmetric, NotUnimodular
from . import _gram_data


def leading_minors(gram) -> list[int]:
    """det of the leading k x k blocks, k = 1..n, by fraction-free elimination.

    Stops early (returning the minors found so far) at the first zero pivot.
    """
    a = [list(map(int, row)) for row in gram]
    n = len(a)
    prev = 1
    out = []
    for k in range(n):
        piv = a[k][k]
        out.append(piv)
        if piv == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (piv * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = piv
    return out


def determinant(gram) -> int:
    """Exact integer determinant (Bareiss with row pivoting)."""
    a = [list(map(int, row)) for row in gram]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n):
        p = next((r for r in range(k, n) if a[r][k] != 0), None)
        if p is None:
            return 0
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class GramLattice:
    """A lattice given by its integer Gram matrix in some basis."""

    dim: int
    gram: tuple

    def __init__(self, gram, dim: int | None = None):
        rows = tuple(tuple(int(v) for v in row) for row in gram)
        if dim is None:
            dim = len(rows)
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise ValueError(f"Gram matrix must be {dim} x {dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "gram", rows)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64)

    def inner(self, u, v) -> int:
        return int(sum(u[i] * self.gram[i][j] * v[j]
                       for i in range(self.dim) for j in range(self.dim)
                       if u[i] and v[j]))

    def norm(self, v) -> int:
        return self.inner(v, v)

    def validate(self) -> "GramLattice":
        validate(self)
        return self

    def direct_sum(self, other: "GramLattice") -> "GramLattice":
        n, m = self.dim, other.dim
        rows = [list(r) + [0] * m for r in self.gram]
        rows += [[0] * n + list(r) for r in other.gram]
        return GramLattice(rows)

    def transformed(self, U) -> "GramLattice":
        """Gram matrix U G U^T in the basis given by the rows of U."""
        U = np.array(U, dtype=object)
        G = np.array(self.gram, dtype=object)
        return GramLattice((U.dot(G).dot(U.T)).tolist())

    def to_json(self) -> dict:
        return {"dim": self.dim, "gram": [list(r) for r in self.gram]}

    @classmethod
    def from_json(cls, obj) -> "GramLattice":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["gram"], int(obj.get("dim", len(obj["gram"]))))


def validate(g: GramLattice) -> None:
    """Raise unless g is symmetric, even, unimodular and positive definite."""
    n = g.dim
    G = g.gram
    for i in range(n):
        for j in range(i + 1, n):
            if G[i][j] != G[j][i]:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ", witness=(i, j))
    for i in range(n):
        if G[i][i] % 2:
            raise NotEven(f"diagonal entry {i} is {G[i][i]}", witness=i)
    det = determinant(G)
    if det != 1:
        raise NotUnimodular(f"determinant is {det}", witness=det)
    for k, m in enumerate(leading_minors(G), start=1):
        if m <= 0:
            raise NotPositiveDefinite(f"leading {k}x{k} minor is {m}", witness=k)


BUILTIN_NAMES = ("e8", "d16plus", "e8cubed", "leech")


def builtin(name: str) -> GramLattice:
    """One of the shipped lattices; validated before it is returned."""
    key = name.lower().replace("-", "").replace("_", "")
    if key == "e8":
        g = GramLattice(_gram_data.E8)
    elif key == "d16plus":
        g = GramLattice(_gram_data.D16PLUS)
    elif key == "e8cubed":
        e8 = GramLattice(_gram_data.E8)
        g = e8.direct_sum(e8).direct_sum(e8)
    elif key == "leech":
        g = GramLattice(_gram_data.LEECH)
    else:
        raise ValueError(f"unknown lattice {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    validate(g)
    return g
