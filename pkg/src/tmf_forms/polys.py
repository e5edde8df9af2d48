"""Sparse multivariate polynomials over Q and truncated multivariate series.

``Poly`` is the coefficient ring of the universal Weierstrass curve
Q[a1, a2, a3, a4, a6]; ``MSeries`` is a power series in a few formal
variables truncated at a total degree, with coefficients in any ring that
supports + - * (Fraction or Poly).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

_SCALARS = (int, Fraction)


class Poly:
    """Polynomial stored as {exponent tuple: Fraction}."""

    __slots__ = ("nvars", "terms", "names")

    def __init__(self, terms=None, nvars=5, names=None):
        self.nvars = nvars
        self.names = names
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, c, nvars=5, names=None):
        return cls({(0,) * nvars: c}, nvars, names)

    @classmethod
    def variable(cls, i, nvars=5, names=None):
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars, names)

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, _SCALARS):
            return Poly.constant(other, self.nvars, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out, self.nvars, self.names)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()}, self.nvars, self.names)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return Poly({e: c * other for e, c in self.terms.items()}, self.nvars, self.names)
        if not isinstance(other, Poly):
            return NotImplemented
        out = {}
        for (e1, c1), (e2, c2) in product(self.terms.items(), other.terms.items()):
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
        return Poly(out, self.nvars, self.names)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        out = Poly.constant(1, self.nvars, self.names)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.names or [f"v{i}" for i in range(self.nvars)]
        out = ""
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = (mono if mag == 1 else f"{mag}*{mono}") if mono else str(mag)
            out += (sign if sign == "-" else "") + body if not out else f" {sign} {body}"
        return out


def weierstrass_symbols():
    """The indeterminates a1, a2, a3, a4, a6 as Poly objects."""
    names = ("a1", "a2", "a3", "a4", "a6")
    return tuple(Poly.variable(i, 5, names) for i in range(5))


def _is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, Poly) else c == 0


class MSeries:
    """Power series in ``nvars`` variables, truncated above total degree ``degree``."""

    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars: int, degree: int, terms=None):
        self.nvars = nvars
        self.degree = degree
        self.terms = {
            e: c for e, c in (terms or {}).items() if sum(e) <= degree and not _is_zero(c)
        }

    @classmethod
    def variable(cls, i, nvars, degree):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, degree, {tuple(e): Fraction(1)})

    @classmethod
    def constant(cls, c, nvars, degree):
        return cls(nvars, degree, {(0,) * nvars: c})

    def _lift(self, other):
        if isinstance(other, MSeries):
            return other
        return MSeries.constant(other, self.nvars, self.degree)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MSeries(self.nvars, min(self.degree, other.degree), out)

    __radd__ = __add__

    def __neg__(self):
        return MSeries(self.nvars, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MSeries):
            return MSeries(self.nvars, self.degree, {e: c * other for e, c in self.terms.items()})
        deg = min(self.degree, other.degree)
        out = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > deg:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return MSeries(self.nvars, deg, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        out = MSeries.constant(Fraction(1), self.nvars, self.degree)
        for _ in range(k):
            out = out * self
        return out

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def inverse_of_one_plus(self) -> "MSeries":
        """1/(1 + self) for a series without constant term."""
        if not _is_zero(self.constant_term()):
            raise ValueError("series must have zero constant term")
        out = MSeries.constant(Fraction(1), self.nvars, self.degree)
        power = out
        for _ in range(self.degree):
            power = power * (-self)
            out = out + power
        return out

    def __getitem__(self, e):
        return self.terms.get(tuple(e), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, MSeries):
            return NotImplemented
        deg = min(self.degree, other.degree)
        a = {e: c for e, c in self.terms.items() if sum(e) <= deg}
        b = {e: c for e, c in other.terms.items() if sum(e) <= deg}
        keys = set(a) | set(b)
        return all(_is_zero(a.get(k, 0) - b.get(k, 0)) for k in keys)

    def substitute(self, values: list) -> "MSeries":
        """Replace variable i by values[i] (series without constant terms)."""
        nv = values[0].nvars
        deg = min(v.degree for v in values)
        deg = min(deg, self.degree) if all(
            _is_zero(v.constant_term()) for v in values) else deg
        powers = [[MSeries.constant(Fraction(1), nv, deg)] for _ in values]
        out = MSeries(nv, deg)
        for e, c in self.terms.items():
            term = MSeries.constant(c, nv, deg)
            for i, k in enumerate(e):
                while len(powers[i]) <= k:
                    powers[i].append(powers[i][-1] * values[i])
                if k:
                    term = term * powers[i][k]
            out = out + term
        return out

    def __repr__(self):
        return f"MSeries(nvars={self.nvars}, degree={self.degree}, terms={len(self.terms)})"


def compose_univariate(coeffs, x: MSeries) -> MSeries:
    """sum_n coeffs[n] x^n by Horner's rule; x must have zero constant term."""
    out = MSeries(x.nvars, x.degree)
    for c in reversed(coeffs):
        out = out * x + MSeries.constant(c, x.nvars, x.degree)
    return out
