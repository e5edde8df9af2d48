"""The image of the homotopy of tmf in modular forms, and reference tables of
low-dimensional homotopy groups."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lattice.gram import GramLattice, validate
from .lattice.shells import DEFAULT_BUDGET
from .lattice.theta import theta
from .modforms import ModularForm, decompose, weight_basis
from .series import rational_str


@dataclass(frozen=True)
class ImageBasisElement:
    i: int
    j: int
    k: int
    scale: int

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "k": self.k, "a": self.scale}


def image_scale(i: int, j: int, k: int) -> int:
    """a_{i,j,k}: 1 if i > 0 and j = 0, 2 if j = 1, 24/gcd(24, k) if i = j = 0.

    At i = j = k = 0 the last case gives 24/gcd(24, 0) = 1, the unit.
    """
    if j not in (0, 1) or i < 0 or k < 0:
        raise ValueError(f"({i},{j},{k}) is not a basis monomial")
    if j == 1:
        return 2
    if i > 0:
        return 1
    return 24 // math.gcd(24, k)


def image_basis(weight: int) -> list[ImageBasisElement]:
    return [ImageBasisElement(i, j, k, image_scale(i, j, k)) for i, j, k in weight_basis(weight)]


@dataclass(frozen=True)
class MembershipCertificate:
    weight: int
    rows: tuple  # (i, j, k, coordinate, scale, divisible)

    @property
    def verdict(self) -> str:
        return "PASS" if all(r[5] for r in self.rows) else "FAIL"

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "verdict": self.verdict,
            "certificate": [
                {"i": i, "j": j, "k": k, "c": rational_str(c), "a": a, "divisible": ok}
                for i, j, k, c, a, ok in self.rows
            ],
        }


def in_image(f: ModularForm) -> MembershipCertificate:
    """Every coordinate of f must be an integer multiple of its scale."""
    coords = decompose(f).coords
    rows = []
    for e in image_basis(f.weight):
        c = coords.get((e.i, e.j, e.k), Fraction(0))
        q = c / e.scale
        rows.append((e.i, e.j, e.k, c, e.scale, q.denominator == 1))
    return MembershipCertificate(f.weight, tuple(rows))


def theta_image_check(g: GramLattice, prec: int | None = None,
                      budget: int = DEFAULT_BUDGET, backend: str | None = None) -> MembershipCertificate:
    """theta_L lies in the image; the precision defaults to one past the top Delta power."""
    validate(g)
    weight = g.dim // 2
    kmax = max((k for _, _, k in weight_basis(weight)), default=0)
    prec = max(prec or 0, kmax + 1)
    return in_image(theta(g, prec, budget, backend))


# ---------------------------------------------------------------------------
# reference tables


@dataclass(frozen=True)
class Group:
    """Finitely generated abelian group Z^rank + sum Z/n."""

    rank: int = 0
    torsion: tuple = ()
    label: str | None = None  # notation as written in the table, if it differs

    def __str__(self) -> str:
        if self.label:
            return self.label
        parts = ["Z"] * self.rank
        counts = {}
        for n in self.torsion:
            counts[n] = counts.get(n, 0) + 1
        for n in sorted(counts, key=self.torsion.index):
            parts.append(f"(Z/{n})^{counts[n]}" if counts[n] > 1 else f"Z/{n}")
        return " + ".join(parts) if parts else "0"

    @property
    def order(self):
        """Order of the group, or None if it is infinite."""
        return None if self.rank else math.prod(self.torsion)


def _g(rank=0, *torsion, label=None) -> Group:
    return Group(rank, tuple(torsion), label)


STABLE_STEMS = (
    _g(1), _g(0, 2), _g(0, 2), _g(0, 24), _g(), _g(), _g(0, 2), _g(0, 240),
    _g(0, 2, 2, label="Z/2 + Z/2"), _g(0, 2, 2, 2), _g(0, 6), _g(0, 504), _g(), _g(0, 3), _g(0, 2, 2),
    _g(0, 2, 480),
)

TMF_HOMOTOPY = (
    _g(1), _g(0, 2), _g(0, 2), _g(0, 24), _g(), _g(), _g(0, 2), _g(),
    _g(1, 2), _g(0, 2, 2), _g(0, 6), _g(), _g(1), _g(0, 3), _g(0, 2),
    _g(0, 2),
)

DEGREE_NOTE = "The tmf-degree pi_*S^0 -> pi_*tmf is an isomorphism in dimensions <= 6."


@dataclass(frozen=True)
class HomotopyTable:
    stems: tuple
    tmf: tuple
    note: str

    def to_json(self, which: str = "both") -> dict:
        out = {}
        if which in ("stems", "both"):
            out["stems"] = [{"k": k, "group": str(g)} for k, g in enumerate(self.stems)]
        if which in ("tmf", "both"):
            out["tmf"] = [{"k": k, "group": str(g)} for k, g in enumerate(self.tmf)]
        out["note"] = self.note
        return out


def reference_tables() -> HomotopyTable:
    """pi_{n+k} S^n for n large and pi_k tmf, 0 <= k <= 15."""
    return HomotopyTable(STABLE_STEMS, TMF_HOMOTOPY, DEGREE_NOTE)
