from fractions import Fraction as F
from math import factorial

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from tmf_forms.modforms import divisor_sums
from tmf_forms.polys import MSeries, Poly
from tmf_forms.series import QSeries, BiSeries, bi_log
from tmf_forms.weierstrass import (
    IDENTITY,
    CurveTransformation,
    WeierstrassCurve,
    formal_group_law,
    invariants,
    p_expansion,
    p_fourier,
    sigma_expansion,
    transform,
)

small = st.fractions(min_value=-6, max_value=6, max_denominator=4)
nonzero = small.filter(bool)


@st.composite
def smooth_curves(draw):
    c = WeierstrassCurve(*[draw(small) for _ in range(5)])
    assume(invariants(c).delta != 0)
    return c


@st.composite
def transformations(draw):
    return CurveTransformation(draw(nonzero), draw(small), draw(small), draw(small))


# --- invariants -------------------------------------------------------------


def test_invariants_examples():
    inv = invariants(WeierstrassCurve())
    assert (inv.c4, inv.c6, inv.delta, inv.j) == (0, 0, 0, None)
    inv = invariants(WeierstrassCurve(0, 0, 0, -1, 0))
    assert (inv.b2, inv.b4, inv.c4, inv.c6, inv.delta) == (0, -2, 48, 0, 64)
    assert inv.c4 ** 3 == 1728 * inv.delta == 110592
    assert inv.j == 1728


def test_universal_identities():
    inv = invariants(WeierstrassCurve.universal())
    assert (inv.c4 ** 3 - inv.c6 ** 2 - inv.delta * 1728).is_zero()
    assert (inv.b8 * 4 - (inv.b2 * inv.b6 - inv.b4 * inv.b4)).is_zero()


@given(smooth_curves())
@settings(max_examples=50, deadline=None)
def test_defining_relation_numeric(c):
    inv = invariants(c)
    assert inv.c4 ** 3 - inv.c6 ** 2 == 1728 * inv.delta
    assert c.is_smooth()


# --- transformations --------------------------------------------------------


def _transform_oracle(c, g):
    """Substitute into the equation with sympy and divide by lambda^6."""
    x, y = sympy.symbols("x y")
    a1, a2, a3, a4, a6 = [sympy.Rational(v.numerator, v.denominator) for v in c.coeffs]
    lam, r, s, t = [sympy.Rational(v.numerator, v.denominator) for v in (g.lam, g.r, g.s, g.t)]
    X, Y = lam**2 * x + r, lam**3 * y + s * x + t
    eq = sympy.expand((Y**2 + a1 * X * Y + a3 * Y - X**3 - a2 * X**2 - a4 * X - a6) / lam**6)
    P = sympy.Poly(eq, x, y)
    get = lambda m: P.coeff_monomial(m)
    assert get(y**2) == 1 and get(x**3) == -1
    out = [get(x * y), -get(x**2), get(y), -get(x), -get(1)]
    return tuple(F(int(v.p), int(v.q)) for v in out)


def test_identity_transformation():
    c = WeierstrassCurve(1, -1, 0, 2, F(1, 3))
    assert transform(c, IDENTITY) == c


def test_transform_shift_s():
    # with this substitution direction a1' = a1 + 2s
    c = WeierstrassCurve(F(5, 2), 0, 0, 0, 0)
    assert transform(c, CurveTransformation(1, 0, 3, 0)).a1 == F(5, 2) + 6


@given(smooth_curves(), transformations())
@settings(max_examples=30, deadline=None)
def test_transform_matches_substitution_oracle(c, g):
    assert transform(c, g).coeffs == _transform_oracle(c, g)


@given(smooth_curves(), transformations(), transformations())
@settings(max_examples=50, deadline=None)
def test_transform_composes(c, g1, g2):
    assert transform(transform(c, g1), g2) == transform(c, g1.then(g2))


@given(smooth_curves(), transformations())
@settings(max_examples=80, deadline=None)
def test_j_invariant(c, g):
    d = transform(c, g)
    assert invariants(d).j == invariants(c).j
    assert invariants(d).c4 == invariants(c).c4 / g.lam ** 4
    assert invariants(d).delta == invariants(c).delta / g.lam ** 12


def test_zero_lambda_rejected():
    with pytest.raises(ValueError):
        CurveTransformation(0, 0, 0, 0)


# --- formal group law -------------------------------------------------------


def _to_sympy(c, syms):
    if isinstance(c, Poly):
        return sum(sympy.Rational(v.numerator, v.denominator)
                   * sympy.prod([s**e for s, e in zip(syms, ex)]) for ex, v in c.terms.items())
    return sympy.Rational(c.numerator, c.denominator)


def _fgl_oracle(coeffs, D):
    """F(s, t) = exp(log s + log t) via the invariant differential."""
    a1, a2, a3, a4, a6 = coeffs
    z, e, s, t = sympy.symbols("z e s t")
    w = sympy.Integer(0)
    for _ in range(D + 3):
        w = sympy.expand(z**3 + a1 * z * w + a2 * z**2 * w + a3 * w**2 + a4 * z * w**2 + a6 * w**3)
        w = sum(w.coeff(z, k) * z**k for k in range(D + 4))
    x = z / w
    y = -1 / w
    omega = sympy.series(sympy.diff(x, z) / (2 * y + a1 * x + a3), z, 0, D).removeO()
    log = sympy.integrate(sympy.expand(omega), z)

    def trunc(expr, var, n):
        expr = sympy.expand(expr)
        return sum(expr.coeff(var, k) * var**k for k in range(n + 1))

    # series reversion: exp(log(z)) = z
    E = z
    for _ in range(D + 1):
        E = trunc(z - (log.subs(z, E) - E), z, D)
    arg = trunc(log.subs(z, e * s) + log.subs(z, e * t), e, D)
    Fst = trunc(E.subs(z, arg), e, D)
    return sympy.expand(Fst.subs(e, 1)), s, t


@pytest.mark.parametrize("coeffs", [
    (1, -1, 0, 2, 3),
    (F(1, 2), 0, F(-2, 3), 1, 0),
    (0, 0, 1, -1, 0),
])
def test_fgl_matches_formal_logarithm_oracle(coeffs):
    D = 6
    c = WeierstrassCurve(*coeffs)
    ours = formal_group_law(c, D)
    ref, s, t = _fgl_oracle([sympy.Rational(F(v).numerator, F(v).denominator) for v in coeffs], D)
    P = sympy.Poly(ref, s, t)
    for i in range(D + 1):
        for j in range(D + 1 - i):
            got = ours[(i, j)]
            want = P.coeff_monomial(s**i * t**j)
            assert got == F(int(want.p), int(want.q)), (i, j)


def test_fgl_universal_matches_oracle_low_degree():
    D = 4
    syms = sympy.symbols("a1 a2 a3 a4 a6")
    ours = formal_group_law(WeierstrassCurve.universal(), D)
    ref, s, t = _fgl_oracle(list(syms), D)
    P = sympy.Poly(ref, s, t)
    for i in range(D + 1):
        for j in range(D + 1 - i):
            assert sympy.expand(_to_sympy(ours[(i, j)], syms) - P.coeff_monomial(s**i * t**j)) == 0


def test_fgl_classical_terms():
    F_ = formal_group_law(WeierstrassCurve.universal(), 4)
    a1, a2, a3, a4, a6 = WeierstrassCurve.universal().coeffs
    assert F_[(1, 0)] == 1 and F_[(0, 1)] == 1
    assert F_[(1, 1)] == -a1
    assert F_[(2, 1)] == -a2 and F_[(1, 2)] == -a2
    assert F_[(3, 1)] == a3 * -2 and F_[(2, 2)] == a1 * a2 - a3 * 3


def test_fgl_additive_curve():
    F_ = formal_group_law(WeierstrassCurve(), 6)
    assert F_.coeffs == {(1, 0): 1, (0, 1): 1}


def test_fgl_universal_axioms_degree_6():
    D = 6
    F_ = formal_group_law(WeierstrassCurve.universal(), D)
    for (i, j), c in F_.coeffs.items():
        assert F_[(j, i)] == c
        if j == 0:
            assert (i, c) == (1, 1)
        if i == 0:
            assert (j, c) == (1, 1)
    S = F_.as_series()
    x, y, z = (MSeries.variable(k, 3, D) for k in range(3))
    assert S.substitute([S.substitute([x, y]), z]) == S.substitute([x, S.substitute([y, z])])


def test_fgl_other_coordinate():
    c = WeierstrassCurve(2, 1, 0, 0, 0)
    a = formal_group_law(c, 5)
    b = formal_group_law(c, 5, coordinate="x/y")
    for (i, j), v in a.coeffs.items():
        assert b[(i, j)] == (v if (i + j) % 2 else -v)
    assert b[(1, 1)] == 2  # +a1 in the t = x/y coordinate


def test_fgl_degree_validation():
    with pytest.raises(ValueError):
        formal_group_law(WeierstrassCurve(), 1)


# --- wp and sigma -----------------------------------------------------------


def test_p_constant_term_and_fourier_integrality():
    grid = p_fourier(12, 15)
    assert grid[(0, 0)] == F(1, 12)
    for key, v in grid.coeffs.items():
        if key != (0, 0):
            assert v.denominator == 1, key


def test_p_expansion_divided_power_integrality():
    P = p_expansion(10, 12)
    assert P.coeff(0, 0) == F(1, 12)
    assert P.is_even()
    for j in range(12):
        for n in range(10):
            if (j, n) != (0, 0):
                assert (P.coeff(j, n) * factorial(j)).denominator == 1
    # q^1 slice: u + u^-1 - 2 = x^2 + x^4/12 + ...
    assert P.q_slice(1)[:5] == [0, 0, 1, 0, F(1, 12)]


def test_p_expansion_from_sigma():
    """wp = -(log sigma)'' + 1/12 - 2 sum sigma_1(n) q^n, with the q^0 part of
    log sigma removed (that part is the omitted n = 0 pole term)."""
    qprec, zorder = 7, 10
    sig = sigma_expansion(qprec, zorder + 3).shift_z(1)
    L = bi_log(sig)
    stripped = [QSeries([0] + list(L[j].coeffs[1:]), qprec) for j in range(L.zorder)]
    e1 = divisor_sums(1, qprec - 1)
    want = []
    for j in range(zorder):
        t = stripped[j + 2].scale(-(j + 2) * (j + 1))
        if j == 0:
            t = t + QSeries([F(1, 12)] + [-2 * e1[n] for n in range(1, qprec)], qprec)
        want.append(t)
    assert p_expansion(qprec, zorder) == BiSeries(want, qprec)


def test_sigma_examples():
    s = sigma_expansion(5, 8)
    assert s.coeff(1, 0) == 1
    assert s.coeff(3, 0) == F(1, 24)
    assert s.is_odd()
    assert s.q_slice(1)[:6] == [0, 0, 0, -1, 0, F(-1, 8)]


def test_sigma_matches_product_oracle():
    """Truncated polynomial arithmetic in sympy, with Taylor polynomials for
    e^{+-x} and 1/(1 - q^n)^2 = sum (a + 1) q^{na}."""
    x, q = sympy.symbols("x q")
    qprec, zorder = 4, 8

    def trunc(expr):
        P = sympy.Poly(sympy.expand(expr), x, q)
        return sum(c * x**i * q**j for (i, j), c in P.terms() if i < zorder and j < qprec)

    ep = sum(x**j / sympy.factorial(j) for j in range(zorder))
    em = ep.subs(x, -x)
    expr = trunc(ep.subs(x, x / 2) - em.subs(x, x / 2))
    for n in range(1, qprec):
        inv = sum((a + 1) * q**(n * a) for a in range(qprec // n + 1))
        expr = trunc(expr * (1 - q**n * ep) * (1 - q**n * em))
        expr = trunc(expr * inv)
    ours = sigma_expansion(qprec, zorder)
    P = sympy.Poly(expr, x, q)
    for j in range(zorder):
        for n in range(qprec):
            v = sympy.Rational(P.coeff_monomial(x**j * q**n))
            assert ours.coeff(j, n) == F(int(v.p), int(v.q)), (j, n)
