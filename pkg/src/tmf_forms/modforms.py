"""Level-one modular forms as exact q-expansions.

The ring of modular forms over Z is generated by c4, c6 and Delta subject to
c4^3 - c6^2 = 1728 Delta.  In each weight the monomials c4^i c6^j Delta^k with
j in {0, 1} form a basis, and the monomial carrying Delta^k starts at q^k with
leading coefficient 1, so decomposition is plain forward elimination.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import InsufficientPrecision, NotInRing
from .series import QSeries, as_rational, invert_unit, rational_mod, rational_str

# ---------------------------------------------------------------------------
# Bernoulli numbers

_bernoulli_lock = threading.Lock()
_bernoulli_cache: list = []


@dataclass(frozen=True)
class BernoulliTable:
    values: tuple

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self):
        return len(self.values)


def _extend_bernoulli(nmax: int) -> None:
    # x/(e^x - 1) = 1 / sum_k x^k/(k+1)!, so B_n/n! solves a triangular system
    vals = _bernoulli_cache
    fact = [1]
    for k in range(1, nmax + 2):
        fact.append(fact[-1] * k)
    scaled = [v / fact[n] for n, v in enumerate(vals)]  # B_n / n!
    for n in range(len(vals), nmax + 1):
        if n == 0:
            scaled.append(Fraction(1))
        else:
            s = sum(scaled[m] * Fraction(1, fact[n - m + 1]) for m in range(n))
            scaled.append(-s)
        vals.append(scaled[n] * fact[n])


def bernoulli(nmax: int) -> BernoulliTable:
    """B_0 .. B_nmax from the generating function x/(e^x - 1), so B_1 = -1/2."""
    if nmax < 0:
        raise ValueError("nmax must be non-negative")
    with _bernoulli_lock:
        if len(_bernoulli_cache) <= nmax:
            _extend_bernoulli(nmax)
        return BernoulliTable(tuple(_bernoulli_cache[: nmax + 1]))


def bernoulli_number(n: int) -> Fraction:
    return bernoulli(n)[n]


# ---------------------------------------------------------------------------
# divisor sums and Eisenstein series


def divisor_sums(k: int, n_max: int, coprime_to: int | None = None) -> list[int]:
    """sigma_k(n) for 0 <= n <= n_max (entry 0 is 0).  With ``coprime_to=p``
    only divisors prime to p are summed."""
    out = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        if coprime_to is not None and d % coprime_to == 0:
            continue
        dk = d ** k
        for m in range(d, n_max + 1, d):
            out[m] += dk
    return out


@dataclass(frozen=True)
class ModularForm:
    weight: int
    series: QSeries

    def __post_init__(self):
        if self.weight % 2 or self.weight < 0:
            raise ValueError(f"weight must be even and non-negative, got {self.weight}")

    @property
    def prec(self) -> int:
        return self.series.prec

    def __mul__(self, other):
        if isinstance(other, ModularForm):
            return ModularForm(self.weight + other.weight, self.series * other.series)
        if isinstance(other, (int, Fraction)):
            return ModularForm(self.weight, self.series.scale(other))
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, ModularForm) or other.weight != self.weight:
            return NotImplemented
        return ModularForm(self.weight, self.series + other.series)

    def __sub__(self, other):
        if not isinstance(other, ModularForm) or other.weight != self.weight:
            return NotImplemented
        return ModularForm(self.weight, self.series - other.series)

    def __pow__(self, e: int):
        return ModularForm(self.weight * e, self.series ** e)


def eisenstein(weight: int, prec: int) -> ModularForm:
    """Un-normalized Eisenstein series G_w = -B_w/(2w) + sum sigma_{w-1}(n) q^n."""
    if weight < 2 or weight % 2:
        raise ValueError("Eisenstein weight must be even and >= 2")
    sig = divisor_sums(weight - 1, max(prec - 1, 0))
    const = -bernoulli_number(weight) / (2 * weight)
    coeffs = [const] + sig[1:prec]
    return ModularForm(weight, QSeries(coeffs, prec))


# ---------------------------------------------------------------------------
# generators c4, c6, Delta


def euler_product(prec: int) -> QSeries:
    """prod_{n>=1} (1 - q^n) by the pentagonal number theorem."""
    cs = [0] * prec
    k = 0
    while True:
        sign = -1 if k % 2 else 1
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 >= prec:
            break
        cs[g1] += sign
        if k and g2 < prec:
            cs[g2] += sign
        k += 1
    return QSeries(cs, prec)


@lru_cache(maxsize=32)
def _delta(prec: int) -> QSeries:
    if prec <= 0:
        return QSeries.zero(0)
    p1 = euler_product(prec - 1)
    p2 = p1 * p1
    p4 = p2 * p2
    p8 = p4 * p4
    p16 = p8 * p8
    return (p16 * p8).shift(1)


def generator_q(which: str, prec: int) -> ModularForm:
    """q-expansion of c4, c6 or delta with integer coefficients."""
    if prec < 1:
        raise ValueError("precision must be at least 1")
    if which == "c4":
        s = divisor_sums(3, prec - 1)
        return ModularForm(4, QSeries([1] + [240 * v for v in s[1:]], prec))
    if which == "c6":
        s = divisor_sums(5, prec - 1)
        return ModularForm(6, QSeries([1] + [-504 * v for v in s[1:]], prec))
    if which == "delta":
        return ModularForm(12, _delta(prec))
    raise ValueError(f"unknown generator {which!r}; expected c4, c6 or delta")


def tau(n_max: int) -> list[int]:
    """Ramanujan tau(0..n_max) read off Delta (tau(0) = 0)."""
    d = _delta(n_max + 1)
    return [int(c) for c in d.coeffs]


# ---------------------------------------------------------------------------
# monomial basis and decomposition


def weight_basis(weight: int) -> list[tuple[int, int, int]]:
    """Exponents (i, j, k) with 4i + 6j + 12k = weight, j in {0,1}, by ascending k."""
    if weight < 0 or weight % 2:
        return []
    out = []
    for k in range(weight // 12 + 1):
        rest = weight - 12 * k
        for j in (0, 1):
            r = rest - 6 * j
            if r >= 0 and r % 4 == 0:
                out.append((r // 4, j, k))
                break
    return out


@lru_cache(maxsize=256)
def monomial(i: int, j: int, k: int, prec: int) -> QSeries:
    c4 = generator_q("c4", prec).series
    c6 = generator_q("c6", prec).series
    d = generator_q("delta", prec).series
    return (c4 ** i) * (c6 ** j) * (d ** k)


@dataclass(frozen=True)
class ModularFormDecomposition:
    weight: int
    coords: dict = field(default_factory=dict)

    def reconstruct(self, prec: int) -> QSeries:
        out = QSeries.zero(prec)
        for (i, j, k), c in self.coords.items():
            out = out + monomial(i, j, k, prec).scale(c)
        return out

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "coords": [
                {"i": i, "j": j, "k": k, "c": rational_str(c)}
                for (i, j, k), c in sorted(self.coords.items(), key=lambda t: t[0][2])
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ModularFormDecomposition":
        coords = {
            (int(e["i"]), int(e["j"]), int(e["k"])): as_rational(str(e["c"]))
            for e in obj["coords"]
        }
        return cls(int(obj["weight"]), coords)


def decompose(f: ModularForm) -> ModularFormDecomposition:
    """Coordinates of f in the monomial basis, checked against every known coefficient."""
    basis = weight_basis(f.weight)
    prec = f.series.prec
    kmax = max((k for _, _, k in basis), default=-1)
    if prec <= kmax:
        raise InsufficientPrecision(
            f"weight {f.weight} needs at least {kmax + 1} coefficients, got {prec}"
        )
    residual = f.series
    coords = {}
    for i, j, k in basis:
        c = residual[k]
        coords[(i, j, k)] = c
        if c:
            residual = residual - monomial(i, j, k, prec).scale(c)
    bad = residual.valuation_q()
    if bad is not None:
        raise NotInRing(
            f"not a modular form of weight {f.weight}: "
            f"reconstruction differs at q^{bad} by {rational_str(residual[bad])}",
            index=bad,
        )
    return ModularFormDecomposition(f.weight, coords)


def residue_delta(f: ModularForm | QSeries, k: int) -> Fraction:
    """Constant term of f / Delta^k, i.e. res_{q=0} f/Delta^k dq/q."""
    series = f.series if isinstance(f, ModularForm) else f
    if k < 0:
        raise ValueError("k must be non-negative")
    if series.prec < k + 1:
        raise InsufficientPrecision(f"residue at order {k} needs {k + 1} coefficients")
    if k == 0:
        return series[0]
    d_over_q = _delta(k + 2).divide_qpow(1)  # Delta/q to precision k+1
    inv = invert_unit(d_over_q) ** k
    s = series.truncate(k + 1)
    return sum(s[i] * inv[k - i] for i in range(k + 1))


@dataclass(frozen=True)
class ResidueEquivalenceReport:
    k: int
    x_k: Fraction
    residue: Fraction
    x_k_mod24: int
    residue_mod24: int
    verdict: str

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "x_k": rational_str(self.x_k),
            "residue": rational_str(self.residue),
            "x_k_mod24": self.x_k_mod24,
            "residue_mod24": self.residue_mod24,
            "verdict": self.verdict,
        }


def residue_congruence_equiv(f: ModularForm, k: int) -> ResidueEquivalenceReport:
    """Check that the Delta^k coordinate and res_{q=0} f/Delta^k dq/q agree mod 24."""
    if f.weight != 12 * k:
        raise ValueError(f"weight {f.weight} is not 12*{k}")
    coords = decompose(f).coords
    xk = coords.get((0, 0, k), Fraction(0))
    r = residue_delta(f, k)
    xm = rational_mod(xk, 24)
    rm = rational_mod(r, 24)
    verdict = "PASS" if xm == rm else "FAIL"
    return ResidueEquivalenceReport(k, xk, r, xm, rm, verdict)
