"""Exact truncated power series over Q.

``QSeries`` holds the coefficients of q^0 .. q^(prec-1); everything past the
precision is unknown, never zero.  ``BiSeries`` is a truncated series in a
second variable (called z or x) whose coefficients are ``QSeries`` sharing a
common q-precision.

Coefficients are ``fractions.Fraction`` throughout, so values are always in
lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import (
    BadConstantTerm,
    DenominatorNotInvertible,
    NotPrime,
    ZeroConstantTerm,
)

Rational = Fraction

# Below this length schoolbook convolution beats Kronecker packing.
_KRONECKER_MIN = 40


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rational_str(x: Fraction) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p!r} is not a prime")
    return p


# ---------------------------------------------------------------------------
# p-adic valuation


INFINITY = math.inf


@dataclass(frozen=True)
class PadicValuation:
    prime: int
    value: int | float  # INFINITY exactly when the valuated number is 0

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITY

    def __int__(self):
        if self.is_infinite:
            raise OverflowError("valuation of 0 is infinite")
        return int(self.value)


def _vp_int(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x, p: int) -> PadicValuation:
    """v_p(x) = v_p(numerator) - v_p(denominator); +infinity for x = 0."""
    check_prime(p)
    x = as_rational(x)
    if x == 0:
        return PadicValuation(p, INFINITY)
    return PadicValuation(p, _vp_int(x.numerator, p) - _vp_int(x.denominator, p))


# ---------------------------------------------------------------------------
# integer convolution


def _schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: n - i]):
            out[i + j] += ai * bj
    return out


def _pack(coeffs: Sequence[int], width: int) -> int:
    nbytes = width // 8
    return int.from_bytes(
        b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little"
    )


def _unpack(value: int, width: int, count: int) -> list[int]:
    nbytes = width // 8
    raw = value.to_bytes(nbytes * count, "little")
    return [
        int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little")
        for i in range(count)
    ]


def int_convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """First ``n`` coefficients of the product of two integer polynomials.

    Long inputs go through Kronecker substitution: each operand is split into
    its positive and negative parts, packed into one big integer, and the four
    partial products are unpacked chunk by chunk.
    """
    a = list(a[:n])
    b = list(b[:n])
    if not a or not b or n <= 0:
        return [0] * max(n, 0)
    if min(len(a), len(b)) < _KRONECKER_MIN:
        return _schoolbook(a, b, n)
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    if ma == 0 or mb == 0:
        return [0] * n
    bits = ma.bit_length() + mb.bit_length() + min(len(a), len(b)).bit_length() + 1
    width = -(-bits // 8) * 8
    ap = [c if c > 0 else 0 for c in a]
    an = [-c if c < 0 else 0 for c in a]
    bp = [c if c > 0 else 0 for c in b]
    bn = [-c if c < 0 else 0 for c in b]
    Ap, An, Bp, Bn = (_pack(x, width) for x in (ap, an, bp, bn))
    count = len(a) + len(b) - 1
    plus = _unpack(Ap * Bp + An * Bn, width, count + 1)
    minus = _unpack(Ap * Bn + An * Bp, width, count + 1)
    out = [plus[i] - minus[i] for i in range(min(n, count))]
    return out + [0] * (n - len(out))


def _common_denominator(coeffs: Iterable[Fraction]) -> int:
    return reduce(math.lcm, (c.denominator for c in coeffs), 1)


# ---------------------------------------------------------------------------
# QSeries


class QSeries:
    """Truncated power series sum_{n < prec} c_n q^n with exact coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = (), prec: int | None = None):
        cs = tuple(as_rational(c) for c in coeffs)
        if prec is not None:
            if prec < 0:
                raise ValueError("precision must be non-negative")
            cs = cs[:prec] + (Fraction(0),) * (prec - len(cs))
        self._coeffs = cs

    # construction helpers
    @classmethod
    def zero(cls, prec: int) -> "QSeries":
        return cls((), prec)

    @classmethod
    def one(cls, prec: int) -> "QSeries":
        return cls.constant(1, prec)

    @classmethod
    def constant(cls, c, prec: int) -> "QSeries":
        return cls((c,) if prec > 0 else (), prec)

    @classmethod
    def monomial(cls, n: int, prec: int, c=1) -> "QSeries":
        cs = [0] * prec
        if n < prec:
            cs[n] = c
        return cls(cs, prec)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "QSeries":
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        return obj

    # basic protocol
    @property
    def prec(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, n):
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        shown = " + ".join(
            f"{rational_str(c)}*q^{i}" for i, c in enumerate(self._coeffs[:6]) if c
        )
        return f"QSeries({shown or '0'} + O(q^{self.prec}))"

    def truncate(self, prec: int) -> "QSeries":
        if prec > self.prec:
            raise ValueError(f"cannot extend precision {self.prec} to {prec}")
        return QSeries._raw(self._coeffs[:prec])

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def valuation_q(self):
        """Index of the first nonzero coefficient, or None if all known ones vanish."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    # ring operations
    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        return QSeries.constant(as_rational(other), self.prec)

    def __add__(self, other):
        if not isinstance(other, (QSeries, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        n = min(self.prec, other.prec)
        return QSeries._raw(tuple(a + b for a, b in zip(self._coeffs[:n], other._coeffs[:n])))

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        if not isinstance(other, (QSeries, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QSeries":
        c = as_rational(c)
        return QSeries._raw(tuple(c * a for a in self._coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, QSeries):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return invert_unit(self) ** (-e)
        result = QSeries.one(self.prec)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # shifts
    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k (k >= 0); precision grows by k."""
        return QSeries._raw((Fraction(0),) * k + self._coeffs)

    def divide_qpow(self, k: int) -> "QSeries":
        """Divide by q^k; the first k coefficients must vanish and precision drops by k."""
        if any(self._coeffs[:k]):
            raise ZeroConstantTerm(f"series is not divisible by q^{k}")
        return QSeries._raw(self._coeffs[k:])

    def integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    # serialization
    def to_json(self) -> dict:
        return {"prec": self.prec, "coeffs": [rational_str(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "QSeries":
        coeffs = obj["coeffs"]
        prec = int(obj.get("prec", len(coeffs)))
        if prec != len(coeffs):
            raise ValueError(f"prec {prec} does not match {len(coeffs)} coefficients")
        return cls((as_rational(str(c)) for c in coeffs), prec)


def mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated to min(a.prec, b.prec)."""
    n = min(a.prec, b.prec)
    if n == 0:
        return QSeries._raw(())
    da = _common_denominator(a.coeffs[:n])
    db = _common_denominator(b.coeffs[:n])
    ia = [c.numerator * (da // c.denominator) for c in a.coeffs[:n]]
    ib = [c.numerator * (db // c.denominator) for c in b.coeffs[:n]]
    prod = int_convolve(ia, ib, n)
    d = da * db
    return QSeries._raw(tuple(Fraction(c, d) for c in prod))


def invert_unit(a: QSeries) -> QSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    n = a.prec
    if n == 0:
        return a
    a0 = a[0]
    if a0 == 0:
        raise ZeroConstantTerm("cannot invert a series with zero constant term")
    inv0 = 1 / a0
    b = [inv0]
    cs = a.coeffs
    for k in range(1, n):
        s = sum(cs[i] * b[k - i] for i in range(1, k + 1) if cs[i])
        b.append(-inv0 * s)
    return QSeries._raw(tuple(b))


def derivative_scaled(a: QSeries) -> list:
    """Coefficients n*a_n (the operator q d/dq), same precision."""
    return [n * c for n, c in enumerate(a.coeffs)]


def exp(a: QSeries) -> QSeries:
    """Formal exponential; needs a zero constant term."""
    n = a.prec
    if n == 0:
        return a
    if a[0] != 0:
        raise BadConstantTerm("exp needs constant term 0")
    da = derivative_scaled(a)
    b = [Fraction(1)]
    # k b_k = sum_{j=1}^k j a_j b_{k-j}
    for k in range(1, n):
        s = sum((da[j] * b[k - j] for j in range(1, k + 1) if da[j]), Fraction(0))
        b.append(s / k)
    return QSeries._raw(tuple(b))


def log(a: QSeries) -> QSeries:
    """Formal logarithm; needs constant term 1."""
    n = a.prec
    if n == 0:
        return a
    if a[0] != 1:
        raise BadConstantTerm("log needs constant term 1")
    # q (log a)' = q a' / a
    num = QSeries._raw(tuple(derivative_scaled(a)))
    quot = mul(num, invert_unit(a))
    return QSeries._raw((Fraction(0),) + tuple(quot[k] / k for k in range(1, n)))


def reduce_mod(a: QSeries, m: int) -> list[int]:
    """Coefficients reduced into [0, m); denominators must be units mod m."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    out = []
    for i, c in enumerate(a.coeffs):
        if math.gcd(c.denominator, m) != 1:
            raise DenominatorNotInvertible(i, c.denominator, m)
        out.append(c.numerator * pow(c.denominator, -1, m) % m if m > 1 else 0)
    return out


def rational_mod(x, m: int) -> int:
    x = as_rational(x)
    if math.gcd(x.denominator, m) != 1:
        raise DenominatorNotInvertible(0, x.denominator, m)
    return x.numerator * pow(x.denominator, -1, m) % m if m > 1 else 0


# ---------------------------------------------------------------------------
# BiSeries


class BiSeries:
    """Truncated series sum_{j < zorder} c_j(q) z^j with QSeries coefficients."""

    __slots__ = ("_terms", "_qprec")

    def __init__(self, terms: Iterable[QSeries], qprec: int | None = None):
        ts = tuple(terms)
        if qprec is None:
            qprec = min((t.prec for t in ts), default=0)
        self._qprec = qprec
        self._terms = tuple(t.truncate(qprec) for t in ts)

    @classmethod
    def zero(cls, zorder: int, qprec: int) -> "BiSeries":
        return cls([QSeries.zero(qprec)] * zorder, qprec)

    @classmethod
    def one(cls, zorder: int, qprec: int) -> "BiSeries":
        terms = [QSeries.zero(qprec)] * zorder
        if zorder:
            terms[0] = QSeries.one(qprec)
        return cls(terms, qprec)

    @classmethod
    def from_zseries(cls, coeffs: Sequence, qprec: int) -> "BiSeries":
        """Series in z with constant (q-independent) rational coefficients."""
        return cls([QSeries.constant(c, qprec) for c in coeffs], qprec)

    @property
    def zorder(self) -> int:
        return len(self._terms)

    @property
    def qprec(self) -> int:
        return self._qprec

    @property
    def terms(self) -> tuple:
        return self._terms

    def __getitem__(self, j) -> QSeries:
        return self._terms[j]

    def coeff(self, j: int, n: int) -> Fraction:
        """Coefficient of z^j q^n."""
        return self._terms[j][n]

    def __eq__(self, other):
        if isinstance(other, BiSeries):
            return self._qprec == other._qprec and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self._qprec, self._terms))

    def __repr__(self):
        return f"BiSeries(zorder={self.zorder}, qprec={self.qprec})"

    def truncate(self, zorder: int | None = None, qprec: int | None = None) -> "BiSeries":
        zorder = self.zorder if zorder is None else zorder
        qprec = self.qprec if qprec is None else qprec
        if zorder > self.zorder or qprec > self.qprec:
            raise ValueError("cannot extend a truncated series")
        return BiSeries(self._terms[:zorder], qprec)

    def _match(self, other: "BiSeries"):
        z = min(self.zorder, other.zorder)
        q = min(self.qprec, other.qprec)
        return z, q

    def __add__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        z, q = self._match(other)
        return BiSeries([self[j].truncate(q) + other[j].truncate(q) for j in range(z)], q)

    def __neg__(self):
        return BiSeries([-t for t in self._terms], self.qprec)

    def __sub__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "BiSeries":
        if isinstance(c, QSeries):
            q = min(self.qprec, c.prec)
            return BiSeries([t.truncate(q) * c.truncate(q) for t in self._terms], q)
        return BiSeries([t.scale(c) for t in self._terms], self.qprec)

    def __mul__(self, other):
        if isinstance(other, BiSeries):
            return bimul(self, other)
        if isinstance(other, (int, Fraction, QSeries)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QSeries)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return bi_invert_unit(self) ** (-e)
        result = BiSeries.one(self.zorder, self.qprec)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_even(self) -> bool:
        return all(self._terms[j].is_zero() for j in range(1, self.zorder, 2))

    def is_odd(self) -> bool:
        return all(self._terms[j].is_zero() for j in range(0, self.zorder, 2))

    def q_slice(self, n: int) -> list:
        """Coefficients of q^n as a list indexed by the z-power."""
        return [t[n] for t in self._terms]

    def shift_z(self, k: int) -> "BiSeries":
        """Divide by z^k; the first k z-coefficients must vanish."""
        if any(not t.is_zero() for t in self._terms[:k]):
            raise ZeroConstantTerm(f"series is not divisible by z^{k}")
        return BiSeries(self._terms[k:], self.qprec)


def bimul(a: BiSeries, b: BiSeries) -> BiSeries:
    z, q = a._match(b)
    at = [t.truncate(q) for t in a.terms[:z]]
    bt = [t.truncate(q) for t in b.terms[:z]]
    out = []
    for n in range(z):
        acc = QSeries.zero(q)
        for i in range(n + 1):
            if at[i].is_zero() or bt[n - i].is_zero():
                continue
            acc = acc + at[i] * bt[n - i]
        out.append(acc)
    return BiSeries(out, q)


def bi_invert_unit(a: BiSeries) -> BiSeries:
    """Inverse in z; the z^0 coefficient must be a unit q-series."""
    if a.zorder == 0:
        return a
    inv0 = invert_unit(a[0])
    b = [inv0]
    for n in range(1, a.zorder):
        acc = QSeries.zero(a.qprec)
        for i in range(1, n + 1):
            if not a[i].is_zero():
                acc = acc + a[i] * b[n - i]
        b.append(-(acc * inv0))
    return BiSeries(b, a.qprec)


def bi_exp(a: BiSeries) -> BiSeries:
    """exp in z; the z^0 coefficient must vanish identically."""
    if a.zorder == 0:
        return a
    if not a[0].is_zero():
        raise BadConstantTerm("exp needs a vanishing z^0 coefficient")
    b = [QSeries.one(a.qprec)]
    for n in range(1, a.zorder):
        acc = QSeries.zero(a.qprec)
        for j in range(1, n + 1):
            if not a[j].is_zero():
                acc = acc + a[j] * b[n - j] * j
        b.append(acc.scale(Fraction(1, n)))
    return BiSeries(b, a.qprec)


def bi_log(a: BiSeries) -> BiSeries:
    """log in z.  The z^0 coefficient must be a q-series with constant term 1;
    its own q-logarithm becomes the z^0 coefficient of the result."""
    if a.zorder == 0:
        return a
    head = a[0]
    if head.prec and head[0] != 1:
        raise BadConstantTerm("log needs z^0 q^0 coefficient 1")
    normalized = a.scale(invert_unit(head))
    # z (log f)' = z f' / f
    deriv = BiSeries([normalized[j].scale(j) for j in range(a.zorder)], a.qprec)
    quot = deriv * bi_invert_unit(normalized)
    terms = [log(head)] + [quot[j].scale(Fraction(1, j)) for j in range(1, a.zorder)]
    return BiSeries(terms, a.qprec)


def exp_zcoeffs(c, zorder: int) -> list:
    """Taylor coefficients of e^{c z} up to z^(zorder-1)."""
    c = as_rational(c)
    out = []
    term = Fraction(1)
    for j in range(zorder):
        out.append(term)
        term = term * c / (j + 1)
    return out
