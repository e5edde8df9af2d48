"""The Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

Curve coefficients may be rationals or ``Poly`` indeterminates (the universal
curve).  Invariants and the coordinate-change action are polynomial, so the
same code serves both.  The module also provides the formal group law of the
curve and the two-variable q-expansions of the Weierstrass wp- and sigma-
functions in the variable x (with u = e^x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonConvergence
from .polys import MSeries, Poly, compose_univariate, weierstrass_symbols
from .series import BiSeries, QSeries, as_rational, bi_exp, exp_zcoeffs, log


def _coerce(c):
    return c if isinstance(c, Poly) else as_rational(c)


def _is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, Poly) else c == 0


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: object = Fraction(0)
    a2: object = Fraction(0)
    a3: object = Fraction(0)
    a4: object = Fraction(0)
    a6: object = Fraction(0)

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, _coerce(getattr(self, name)))

    @classmethod
    def universal(cls) -> "WeierstrassCurve":
        return cls(*weierstrass_symbols())

    @property
    def coeffs(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def symbolic(self) -> bool:
        return any(isinstance(c, Poly) for c in self.coeffs)

    def is_smooth(self) -> bool:
        return not _is_zero(invariants(self).delta)


@dataclass(frozen=True)
class CurveInvariants:
    b2: object
    b4: object
    b6: object
    b8: object
    c4: object
    c6: object
    delta: object
    j: object = None  # None when delta == 0 or the curve is symbolic


def invariants(c: WeierstrassCurve) -> CurveInvariants:
    a1, a2, a3, a4, a6 = c.coeffs
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6
    delta = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    j = None
    if not c.symbolic and delta != 0:
        j = c4 ** 3 / delta
    return CurveInvariants(b2, b4, b6, b8, c4, c6, delta, j)


@dataclass(frozen=True)
class CurveTransformation:
    """Coordinate change old_x = lam^2 x + r, old_y = lam^3 y + s x + t.

    The substitution is made for the *old* coordinates and the resulting
    equation is divided by lam^6.  With this convention c4 scales by
    lam^-4, c6 by lam^-6 and Delta by lam^-12.
    """

    lam: Fraction = Fraction(1)
    r: Fraction = Fraction(0)
    s: Fraction = Fraction(0)
    t: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("lam", "r", "s", "t"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.lam == 0:
            raise ValueError("lambda must be nonzero")

    def then(self, other: "CurveTransformation") -> "CurveTransformation":
        """The transformation equal to applying ``self`` and then ``other``."""
        l1, r1, s1, t1 = self.lam, self.r, self.s, self.t
        l2, r2, s2, t2 = other.lam, other.r, other.s, other.t
        return CurveTransformation(
            l1 * l2,
            r1 + l1 ** 2 * r2,
            l1 ** 3 * s2 + l2 ** 2 * s1,
            t1 + l1 ** 3 * t2 + s1 * r2,
        )


IDENTITY = CurveTransformation()


def transform(c: WeierstrassCurve, g: CurveTransformation) -> WeierstrassCurve:
    a1, a2, a3, a4, a6 = c.coeffs
    lam, r, s, t = g.lam, g.r, g.s, g.t
    l2, l3, l4, l6 = lam ** 2, lam ** 3, lam ** 4, lam ** 6
    # coefficients of (LHS - RHS) after substitution, before dividing by lam^6
    xy = a1 * lam ** 5 + 2 * l3 * s
    y = (a3 + a1 * r + 2 * t) * l3
    x2 = s * s + a1 * l2 * s - 3 * l4 * r - a2 * l4
    x1 = (2 * s * t + a1 * l2 * t + a1 * r * s + a3 * s
          - 3 * l2 * r * r - 2 * a2 * l2 * r - a4 * l2)
    x0 = t * t + a1 * r * t + a3 * t - r ** 3 - a2 * r * r - a4 * r - a6
    inv = 1 / l6
    return WeierstrassCurve(xy * inv, -x2 * inv, y * inv, -x1 * inv, -x0 * inv)


# ---------------------------------------------------------------------------
# formal group law


@dataclass(frozen=True)
class FormalGroupLaw:
    """F(s, t) = sum F[i, j] s^i t^j through total degree ``degree``."""

    degree: int
    coeffs: dict
    coordinate: str = "-x/y"

    def __getitem__(self, ij):
        return self.coeffs.get(tuple(ij), Fraction(0))

    def as_series(self) -> MSeries:
        return MSeries(2, self.degree, dict(self.coeffs))


def _w_of_z(curve: WeierstrassCurve, degree: int) -> list:
    """Coefficients of w(z) with w = -1/y, z = -x/y, solving
    w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3 by iteration."""
    a1, a2, a3, a4, a6 = curve.coeffs
    z = MSeries.variable(0, 1, degree)
    w = MSeries(1, degree)
    for _ in range(degree + 2):
        w2 = w * w
        nxt = z ** 3 + z * w * a1 + z * z * w * a2 + w2 * a3 + z * w2 * a4 + w2 * w * a6
        if nxt == w:
            return [nxt[(n,)] for n in range(degree + 1)]
        w = nxt
    raise NonConvergence("series for w(z) did not stabilise")


def formal_group_law(c: WeierstrassCurve, degree: int, coordinate: str = "-x/y") -> FormalGroupLaw:
    """Group law of the curve expanded at the point at infinity.

    The chord construction: for points with parameters s, t the line through
    them meets the curve in a third point; its parameter z3 comes from the sum
    of the roots of the cubic, and the sum is the inverse of that third point.
    ``coordinate`` is "-x/y" (the classical choice, st-coefficient -a1) or
    "x/y" (F becomes -F(-s, -t)).
    """
    if degree < 2:
        raise ValueError("degree must be at least 2")
    if coordinate not in ("-x/y", "x/y"):
        raise ValueError("coordinate must be '-x/y' or 'x/y'")
    a1, a2, a3, a4, a6 = c.coeffs
    D = degree
    A = _w_of_z(c, D + 2)
    s = MSeries.variable(0, 2, D)
    t = MSeries.variable(1, 2, D)
    one = Fraction(1)
    # slope (w(t) - w(s)) / (t - s) = sum_n A_n sum_{i+j=n-1} s^i t^j;
    # with w = lam z + nu the cubic's z^2/z^3 coefficient ratio gives z1 + z2 + z3
    lam = MSeries(2, D)
    for n, an in enumerate(A):
        if n < 1 or _is_zero(an):
            continue
        h = MSeries(2, D, {(i, n - 1 - i): one for i in range(n)})
        lam = lam + h * an
    w_s = compose_univariate(A, s)
    nu = w_s - lam * s
    num = lam * a1 + nu * a2 + lam * lam * a3 + lam * nu * (2 * a4) + lam * lam * nu * (3 * a6)
    den_minus_one = lam * a2 + lam * lam * a4 + lam * lam * lam * a6
    z3 = -s - t - num * den_minus_one.inverse_of_one_plus()
    w3 = compose_univariate(A, z3)
    # inverse point: z -> z / (-1 + a1 z + a3 w)
    den = z3 * a1 + w3 * a3  # -1 + den
    F = -(z3 * (-den).inverse_of_one_plus())
    coeffs = dict(F.terms)
    if coordinate == "x/y":
        coeffs = {e: (c if (sum(e) % 2) else -c) for e, c in coeffs.items()}
        # -F(-s,-t): degree-n terms pick up (-1)^(n+1)
    return FormalGroupLaw(D, coeffs, coordinate)


# ---------------------------------------------------------------------------
# wp and sigma as two-variable expansions


@dataclass(frozen=True)
class FourierGrid:
    """Coefficients a[n, k] of q^n u^k for 0 <= n < qprec and |k| <= umax."""

    qprec: int
    umax: int
    coeffs: dict

    def __getitem__(self, nk):
        return self.coeffs.get(tuple(nk), Fraction(0))


def p_fourier(qprec: int, umax: int) -> FourierGrid:
    """Fourier coefficients of the wp bracket

        sum_{n in Z} q^n u/(1 - q^n u)^2 + 1/12 - 2 sum_{n>=1} q^n/(1 - q^n)^2

    expanded in the annulus |q| < |u| < 1.  Each geometric term is summed as
    sum_k k w^k, so every coefficient is an integer except the 1/12.
    """
    out: dict = {}

    def add(n, k, v):
        if n < qprec and abs(k) <= umax:
            out[(n, k)] = out.get((n, k), Fraction(0)) + v

    add(0, 0, Fraction(1, 12))
    for k in range(1, umax + 1):  # n = 0: u/(1-u)^2
        add(0, k, k)
    for n in range(1, qprec):
        for k in range(1, (qprec - 1) // n + 1):
            add(n * k, k, k)  # q^n u / (1 - q^n u)^2
            add(n * k, -k, k)  # q^-n u, rewritten as q^n u^-1 / (1 - q^n u^-1)^2
            add(n * k, 0, -2 * k)
    return FourierGrid(qprec, umax, {k: v for k, v in out.items() if v})


def p_expansion(qprec: int, zorder: int) -> BiSeries:
    """The wp bracket without its n = 0 term, as a series in x with u = e^x.

    The n = 0 term u/(1-u)^2 = 1/x^2 - 1/12 + ... carries the pole and is left
    out; what remains is 1/12 + sum_{n != 0} ... - 2 sum ..., a power series in
    x and q.  Its x^0 q^0 coefficient is 1/12, and coefficients against the
    divided powers x^j/j! are integers elsewhere.
    """
    if qprec < 1 or zorder < 0:
        raise ValueError("need qprec >= 1 and zorder >= 0")
    grid = [[Fraction(0)] * qprec for _ in range(zorder)]
    if zorder:
        grid[0][0] += Fraction(1, 12)
    for n in range(1, qprec):
        for k in range(1, (qprec - 1) // n + 1):
            N = n * k
            ep = exp_zcoeffs(k, zorder)
            em = exp_zcoeffs(-k, zorder)
            for j in range(zorder):
                grid[j][N] += k * (ep[j] + em[j])
            if zorder:
                grid[0][N] -= 2 * k
    return BiSeries([QSeries(row, qprec) for row in grid], qprec)


def _sinh_half_over_half(zorder: int) -> list:
    """Coefficients of sinh(x/2)/(x/2) = sum x^{2m} / (4^m (2m+1)!)."""
    out = [Fraction(0)] * zorder
    fact = 1
    for m in range(0, zorder, 2):
        if m:
            fact *= m * (m + 1)
        out[m] = Fraction(1, 2 ** m * fact)
    return out


def sigma_expansion(qprec: int, zorder: int) -> BiSeries:
    """sigma(q, u) = u^(1/2)(1 - u^-1) prod (1 - q^n u)(1 - q^n/u)/(1 - q^n)^2 in x.

    Computed as x * exp(log(sigma/x)), where the logarithm of each product
    factor is expanded as -sum_m q^{nm}(u^m + u^-m - 2)/m.
    """
    if zorder < 1 or qprec < 1:
        raise ValueError("need zorder >= 1 and qprec >= 1")
    order = max(zorder - 1, 1)
    head = log(QSeries(_sinh_half_over_half(order), order))  # log(2 sinh(x/2)/x)
    rows = [[Fraction(0)] * qprec for _ in range(order)]
    for j in range(order):
        rows[j][0] = head[j]
    for n in range(1, qprec):
        for m in range(1, (qprec - 1) // n + 1):
            ep = exp_zcoeffs(m, order)
            em = exp_zcoeffs(-m, order)
            for j in range(1, order):
                rows[j][n * m] -= (ep[j] + em[j]) / m
    L = BiSeries([QSeries(r, qprec) for r in rows], qprec)
    body = bi_exp(L)  # sigma / x
    terms = [QSeries.zero(qprec)] + list(body.terms)
    return BiSeries(terms[:zorder], qprec)
