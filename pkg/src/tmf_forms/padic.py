"""p-adic operators on q-expansions and the congruence tests for characteristic
sequences of multiplicative genera into KO and tmf."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BadNormalization, MissingEntry, PairNotCongruent
from .modforms import bernoulli_number, divisor_sums, eisenstein, tau
from .series import (
    INFINITY,
    BiSeries,
    QSeries,
    as_rational,
    bi_log,
    check_prime,
    exp_zcoeffs,
    is_prime,
    log,
    rational_str,
    valuation,
)

# ---------------------------------------------------------------------------
# U, V and star


def atkin_U(f: QSeries, p: int) -> QSeries:
    """sum a_{pn} q^n.  Known output indices are those n with pn < f.prec."""
    check_prime(p)
    prec = -(-f.prec // p)
    return QSeries([f[p * n] for n in range(prec)], prec)


def versch_V(f: QSeries, p: int) -> QSeries:
    """sum a_n q^{pn}; the result is known through q^(p*prec - 1)."""
    check_prime(p)
    prec = p * f.prec
    coeffs = [Fraction(0)] * prec
    for n, c in enumerate(f.coeffs):
        coeffs[p * n] = c
    return QSeries(coeffs, prec)


def star(f: QSeries, weight: int, p: int) -> QSeries:
    """f* = f - p^(weight-1) f|V."""
    check_prime(p)
    if weight < 1:
        raise ValueError("weight must be at least 1")
    return f - versch_V(f, p).truncate(f.prec).scale(p ** (weight - 1))


def eisenstein_star(weight: int, p: int, prec: int) -> QSeries:
    """G*_w = -(1 - p^(w-1)) B_w / 2w + sum sigma*_{w-1}(n) q^n, with the
    divisor sum restricted to divisors prime to p."""
    check_prime(p)
    if weight < 2 or weight % 2:
        raise ValueError("weight must be even and >= 2")
    sig = divisor_sums(weight - 1, max(prec - 1, 0), coprime_to=p)
    const = -(1 - Fraction(p) ** (weight - 1)) * bernoulli_number(weight) / (2 * weight)
    return QSeries([const] + sig[1:prec], prec)


# ---------------------------------------------------------------------------
# characteristic sequences and congruence reports


@dataclass(frozen=True)
class CharSequence:
    """Entries indexed by even n: rationals b_n, or q-series g_n."""

    entries: dict

    def __getitem__(self, n):
        try:
            return self.entries[n]
        except KeyError:
            raise MissingEntry(f"no entry for index {n}") from None

    @property
    def is_series(self) -> bool:
        return any(isinstance(v, QSeries) for v in self.entries.values())

    def replace(self, n, value) -> "CharSequence":
        d = dict(self.entries)
        d[n] = value
        return CharSequence(d)

    def to_json(self) -> dict:
        out = {}
        for n in sorted(self.entries):
            v = self.entries[n]
            out[str(n)] = v.to_json() if isinstance(v, QSeries) else rational_str(v)
        return {"entries": out}

    @classmethod
    def from_json(cls, obj: dict) -> "CharSequence":
        ent = {}
        for n, v in obj["entries"].items():
            ent[int(n)] = QSeries.from_json(v) if isinstance(v, dict) else as_rational(v)
        return cls(ent)


def canonical_ko_sequence(nmax: int) -> CharSequence:
    """b_n = B_n / 2n for even 2 <= n <= nmax."""
    return CharSequence({n: bernoulli_number(n) / (2 * n) for n in range(2, nmax + 1, 2)})


def eisenstein_sequence(nmax: int, prec: int) -> CharSequence:
    """(G_4, G_6, ..., G_nmax) as q-series."""
    return CharSequence({n: eisenstein(n, prec).series for n in range(4, nmax + 1, 2)})


@dataclass(frozen=True)
class CongruenceReport:
    condition: str
    params: dict
    lhs: object
    rhs: object
    valuation: object  # int, INFINITY, or None when not a valuation test
    required: object
    verdict: str
    note: str = ""

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, QSeries):
                return v.to_json()
            if isinstance(v, Fraction):
                return rational_str(v)
            if isinstance(v, float) and math.isinf(v):
                return "inf"
            return v

        return {
            "condition": self.condition,
            "params": self.params,
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "valuation": enc(self.valuation),
            "required": self.required,
            "verdict": self.verdict,
            "note": self.note,
        }


def _series_valuation(f: QSeries, p: int):
    vals = [valuation(c, p).value for c in f.coeffs]
    return min(vals, default=INFINITY)


def _required(p: int, k: int) -> int:
    return k + 2 if p == 2 else k + 1


def _modulus(p: int, k: int) -> int:
    return 2 ** k if p == 2 else p ** k * (p - 1)


def default_units(p: int, count: int = 2) -> list[int]:
    """The smallest integers > 1 prime to p."""
    out, c = [], 2
    while len(out) < count:
        if c % p:
            out.append(c)
        c += 1
    return out


def valid_pairs(p: int, k: int, indices) -> list[tuple[int, int]]:
    """All pairs m < n from ``indices`` with m = n mod p^k(p-1) (mod 2^k for p = 2)."""
    idx = sorted(indices)
    mod = _modulus(p, k)
    return [(m, n) for a, m in enumerate(idx) for n in idx[a + 1:] if (n - m) % mod == 0]


def _check_pair_args(p, c, k, pairs):
    check_prime(p)
    if c % p == 0:
        raise ValueError(f"c = {c} is not a {p}-adic unit")
    if k < 0:
        raise ValueError("k must be non-negative")
    mod = _modulus(p, k)
    for m, n in pairs:
        if (m - n) % mod:
            raise PairNotCongruent(f"{m} and {n} are not congruent mod {mod}")


def kummer_check_ko(b: CharSequence, p: int, c: int, k: int, pairs,
                    indices=None) -> list[CongruenceReport]:
    """Condition (i) b_n = B_n/2n mod Z at each index, and the congruence
    (1-c^n)(1-p^(n-1)) b_n = (1-c^m)(1-p^(m-1)) b_m mod p^(k+1)
    (mod 2^(k+2) when p = 2) for each pair."""
    pairs = [tuple(pr) for pr in pairs]
    _check_pair_args(p, c, k, pairs)
    if indices is None:
        indices = sorted({n for pr in pairs for n in pr} or b.entries)
    reports = []
    for n in indices:
        bn = as_rational(b[n])
        target = bernoulli_number(n) / (2 * n)
        defect = bn - target
        ok = defect.denominator == 1
        reports.append(CongruenceReport(
            "i", {"n": n}, bn, target, None, None, "PASS" if ok else "FAIL",
            "" if ok else f"defect {rational_str(defect)} is not an integer"))
    need = _required(p, k)
    cond = "iii" if p == 2 else "ii"

    def side(n):
        return (1 - Fraction(c) ** n) * (1 - Fraction(p) ** (n - 1)) * as_rational(b[n])

    for m, n in pairs:
        lhs, rhs = side(n), side(m)
        v = valuation(lhs - rhs, p).value
        reports.append(CongruenceReport(
            cond, {"p": p, "c": c, "k": k, "m": m, "n": n}, lhs, rhs, v, need,
            "PASS" if v >= need else "FAIL"))
    return reports


def kummer_check_tmf(g: CharSequence, p: int, c: int, k: int, pairs,
                     weightmap: dict | None = None, indices=None) -> list[CongruenceReport]:
    """The four conditions on a sequence of q-series, coefficient by coefficient:
    (i) g_n - G_n integral, (ii)/(iii) the pair congruences on
    (1-c^n) g*_n, (iv) g*_n|U = g*_n.  ``weightmap`` gives the weight used for
    the star operator of each entry (default: the index)."""
    pairs = [tuple(pr) for pr in pairs]
    _check_pair_args(p, c, k, pairs)
    weightmap = weightmap or {}
    if indices is None:
        indices = sorted({n for pr in pairs for n in pr} or g.entries)
    stars = {}

    def gstar(n):
        if n not in stars:
            stars[n] = star(g[n], weightmap.get(n, n), p)
        return stars[n]

    reports = []
    for n in indices:
        gn = g[n]
        diff = gn - eisenstein(n, gn.prec).series
        bad = next((i for i, x in enumerate(diff.coeffs) if x.denominator != 1), None)
        reports.append(CongruenceReport(
            "i", {"n": n}, gn, None, None, None, "PASS" if bad is None else "FAIL",
            "" if bad is None else f"q^{bad} coefficient of g_n - G_n is {rational_str(diff[bad])}"))
    need = _required(p, k)
    cond = "iii" if p == 2 else "ii"
    for m, n in pairs:
        lhs = gstar(n).scale(1 - Fraction(c) ** n)
        rhs = gstar(m).scale(1 - Fraction(c) ** m)
        v = _series_valuation(lhs - rhs, p)
        reports.append(CongruenceReport(
            cond, {"p": p, "c": c, "k": k, "m": m, "n": n}, lhs, rhs, v, need,
            "PASS" if v >= need else "FAIL"))
    for n in indices:
        s = gstar(n)
        u = atkin_U(s, p)
        ok = u == s.truncate(u.prec)
        reports.append(CongruenceReport(
            "iv", {"p": p, "n": n, "weight": weightmap.get(n, n)}, u, s.truncate(u.prec),
            None, None, "PASS" if ok else "FAIL"))
    return reports


# ---------------------------------------------------------------------------
# characteristic series


def ko_series(zorder: int) -> list[Fraction]:
    """Taylor coefficients of (z/2)/sinh(z/2)."""
    # sinh(z/2)/(z/2) = sum (z/2)^(2j) / (2j+1)!
    s = [Fraction(0)] * zorder
    for j in range(0, zorder, 2):
        s[j] = Fraction(1, 2 ** j * math.factorial(j + 1))
    out = [Fraction(0)] * zorder
    out[0] = Fraction(1)
    for n in range(1, zorder):
        out[n] = -sum(s[i] * out[n - i] for i in range(1, n + 1))
    return out


def witten_series(qprec: int, zorder: int) -> BiSeries:
    """(z/2)/sinh(z/2) * prod_n (1-q^n)^2 / ((1-q^n e^z)(1-q^n e^-z)).

    Each factor is expanded directly: 1/((1-q^n e^z)(1-q^n e^-z)) is
    sum_{a,b >= 0} q^{n(a+b)} e^{(a-b) z}.
    """
    if qprec < 1 or zorder < 1:
        raise ValueError("need qprec >= 1 and zorder >= 1")
    result = BiSeries.from_zseries(ko_series(zorder), qprec)
    for n in range(1, qprec):
        rows = [[Fraction(0)] * qprec for _ in range(zorder)]
        top = (qprec - 1) // n
        for a in range(top + 1):
            for b in range(top + 1 - a):
                e = exp_zcoeffs(a - b, zorder)
                for j in range(zorder):
                    rows[j][n * (a + b)] += e[j]
        geo = BiSeries([QSeries(r, qprec) for r in rows], qprec)
        one_minus = QSeries.monomial(0, qprec) - QSeries.monomial(n, qprec)
        result = result * geo.scale(one_minus * one_minus)
    return result


def extract_char_sequence(K, nmax: int) -> CharSequence:
    """Entries -(n!/2) [z^n] log K for even 2 <= n <= nmax.

    ``K`` is a BiSeries (series-valued entries) or a list of rationals giving
    a power series in z (rational entries).
    """
    if isinstance(K, BiSeries):
        if K.zorder == 0 or K.qprec == 0 or K.coeff(0, 0) != 1:
            raise BadNormalization("characteristic series must start with 1")
        if K.zorder <= nmax:
            raise ValueError(f"need zorder > {nmax}")
        L = bi_log(K)
        return CharSequence({
            n: L[n].scale(Fraction(-math.factorial(n), 2)) for n in range(2, nmax + 1, 2)
        })
    coeffs = [as_rational(c) for c in K]
    if not coeffs or coeffs[0] != 1:
        raise BadNormalization("characteristic series must start with 1")
    if len(coeffs) <= nmax:
        raise ValueError(f"need more than {nmax} coefficients")
    L = log(QSeries(coeffs))
    return CharSequence({n: L[n] * Fraction(-math.factorial(n), 2) for n in range(2, nmax + 1, 2)})


# ---------------------------------------------------------------------------
# tau(p) = 1 mod p


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i in range(n + 1) if sieve[i]]


def tau_search(bound: int) -> list[int]:
    """Primes p <= bound with tau(p) = 1 mod p."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    t = tau(bound)
    return [p for p in _primes_upto(bound) if (t[p] - 1) % p == 0]


@dataclass(frozen=True)
class Pi23Description:
    p: int
    tau_p: int
    valuation: int
    torsion_order: int
    groups: str
    notes: list = field(default_factory=list)

    @property
    def torsion_trivial(self) -> bool:
        return self.torsion_order == 1

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "tau_p": str(self.tau_p),
            "valuation": self.valuation,
            "torsion_order": str(self.torsion_order),
            "group": self.groups,
            "torsion_trivial": self.torsion_trivial,
            "notes": list(self.notes),
        }


def pi23_torsion(p: int) -> Pi23Description:
    """Rank one free part plus Z_p/(tau(p) - 1) for p != 691; Z_p at 691."""
    check_prime(p)
    tp = tau(p)[p]
    v = valuation(tp - 1, p).value
    if p == 691:
        return Pi23Description(p, tp, v, 1, "Z_p",
                               [f"v_p(tau(p) - 1) = {v}, but this prime is a separate case"])
    order = p ** v
    groups = "Z_p" if v == 0 else f"Z_p + Z_p/{p}^{v}"
    return Pi23Description(p, tp, v, order, groups)


__all__ = [
    "atkin_U", "versch_V", "star", "eisenstein_star", "CharSequence", "CongruenceReport",
    "canonical_ko_sequence", "eisenstein_sequence", "default_units", "valid_pairs",
    "kummer_check_ko", "kummer_check_tmf", "ko_series", "witten_series",
    "extract_char_sequence", "tau_search", "Pi23Description", "pi23_torsion", "is_prime",
]
