from fractions import Fraction as F
from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from tmf_forms.errors import InsufficientPrecision, NotInRing
from tmf_forms.modforms import (
    ModularForm,
    ModularFormDecomposition,
    bernoulli,
    bernoulli_number,
    decompose,
    divisor_sums,
    eisenstein,
    generator_q,
    monomial,
    residue_congruence_equiv,
    residue_delta,
    tau,
    weight_basis,
)
from tmf_forms.series import QSeries

q = sympy.symbols("q")


def _frac(x):
    x = sympy.Rational(x)
    return F(int(x.p), int(x.q))


def _delta_oracle(prec):
    """q prod (1 - q^n)^24 by truncated polynomial multiplication in sympy."""
    P, M = sympy.Poly(q, q), sympy.Poly(q**prec, q)
    for n in range(1, prec):
        f = sympy.Poly(1 - q**n, q)
        for _ in range(24):
            P = (P * f).rem(M)
    return [int(P.coeff_monomial(q**i)) for i in range(prec)]


# --- Bernoulli --------------------------------------------------------------


def test_bernoulli_small():
    b = bernoulli(12)
    assert b[0] == 1 and b[1] == F(-1, 2)
    assert b[2] == F(1, 6) and b[4] == F(-1, 30)
    assert b[12] == F(-691, 2730)
    assert all(b[n] == 0 for n in range(3, 13, 2))


def test_bernoulli_matches_sympy():
    b = bernoulli(60)
    for n in range(2, 61, 2):
        assert b[n] == _frac(sympy.bernoulli(n))


def test_bernoulli_generating_function():
    x = sympy.symbols("x")
    ser = sympy.series(x / (sympy.exp(x) - 1), x, 0, 10).removeO()
    for n in range(10):
        assert bernoulli_number(n) == _frac(ser.coeff(x, n) * sympy.factorial(n))


# --- Eisenstein series and generators --------------------------------------


def test_eisenstein_examples():
    g4 = eisenstein(4, 4).series
    assert g4.coeffs == (F(1, 240), 1, 9, 28)
    assert eisenstein(6, 2).series[0] == F(-1, 504)
    for w in range(2, 24, 2):
        assert eisenstein(w, 2).series[1] == 1


def test_divisor_sums_oracle():
    for k in (1, 3, 5, 11):
        s = divisor_sums(k, 40)
        assert s[1:] == [int(sympy.divisor_sigma(n, k)) for n in range(1, 41)]


def test_generators_examples():
    assert generator_q("c4", 4).series.coeffs == (1, 240, 2160, 6720)
    assert generator_q("c6", 3).series.coeffs == (1, -504, -16632)
    assert generator_q("delta", 5).series.coeffs == (0, 1, -24, 252, -1472)


def test_delta_matches_product_oracle():
    assert list(generator_q("delta", 16).series.coeffs) == _delta_oracle(16)


def test_generators_are_eisenstein_multiples():
    prec = 30
    assert generator_q("c4", prec).series == eisenstein(4, prec).series.scale(240)
    assert generator_q("c6", prec).series == eisenstein(6, prec).series.scale(-504)


def test_defining_relation():
    prec = 60
    c4 = generator_q("c4", prec).series
    c6 = generator_q("c6", prec).series
    d = generator_q("delta", prec).series
    assert c4 ** 3 - c6 ** 2 == d.scale(1728)


def test_c4_positive_coefficients_divisible_by_240():
    c4 = generator_q("c4", 40).series
    assert c4[0] == 1 and all(c % 240 == 0 for c in c4.coeffs[1:])


def test_tau_values_and_multiplicativity():
    t = tau(60)
    assert t[1:6] == [1, -24, 252, -1472, 4830]
    for m in range(2, 8):
        for n in range(2, 8):
            if gcd(m, n) == 1:
                assert t[m * n] == t[m] * t[n]
    # Hecke relation at a prime power
    assert t[4] == t[2] ** 2 - 2 ** 11
    assert t[9] == t[3] ** 2 - 3 ** 11


# --- basis and decomposition -----------------------------------------------


def test_weight_basis_examples():
    assert weight_basis(12) == [(3, 0, 0), (0, 0, 1)]
    assert weight_basis(2) == []
    assert weight_basis(10) == [(1, 1, 0)]
    assert weight_basis(0) == [(0, 0, 0)]
    assert weight_basis(24) == [(6, 0, 0), (3, 0, 1), (0, 0, 2)]


def test_weight_basis_dimension_formula():
    for w in range(0, 200, 2):
        dim = w // 12 + (0 if w % 12 == 2 else 1)
        assert len(weight_basis(w)) == dim


def test_decompose_examples():
    c4 = generator_q("c4", 5)
    assert decompose(c4 ** 3).coords == {(3, 0, 0): 1, (0, 0, 1): 0}
    e8cubed = ModularForm(12, QSeries([1, 720], 2))
    assert decompose(e8cubed).coords == {(3, 0, 0): 1, (0, 0, 1): 0}
    leech = ModularForm(12, QSeries([1, 0, 196560], 3))
    assert decompose(leech).coords == {(3, 0, 0): 1, (0, 0, 1): -720}


def test_decompose_matches_linear_solve():
    """Independent oracle: solve the full linear system with sympy."""
    w, prec = 36, 6
    f = (generator_q("c4", prec) ** 9) * 3 - (generator_q("delta", prec) ** 3) * 7
    f = f + (generator_q("c4", prec) ** 3) * (generator_q("delta", prec) ** 2) * F(1, 2)
    basis = weight_basis(w)
    M = sympy.Matrix([[sympy.Rational(monomial(i, j, k, prec)[n].numerator,
                                      monomial(i, j, k, prec)[n].denominator)
                       for (i, j, k) in basis] for n in range(prec)])
    rhs = sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in f.series.coeffs])
    sol, params = M.gauss_jordan_solve(rhs)
    got = decompose(f).coords
    for idx, key in enumerate(basis):
        assert got[key] == _frac(sol[idx])


def test_decompose_rejects_non_forms():
    with pytest.raises(NotInRing) as exc:
        decompose(ModularForm(12, QSeries([1, 0, 5], 3)))
    assert exc.value.index == 2
    with pytest.raises(InsufficientPrecision):
        decompose(ModularForm(24, QSeries([1, 0], 2)))


@given(st.lists(st.integers(-50, 50), min_size=3, max_size=3))
@settings(max_examples=30, deadline=None)
def test_decompose_reconstruct_round_trip(cs):
    w, prec = 24, 6
    basis = weight_basis(w)
    f = QSeries.zero(prec)
    for c, (i, j, k) in zip(cs, basis):
        f = f + monomial(i, j, k, prec).scale(c)
    dec = decompose(ModularForm(w, f))
    assert dec.coords == {b: c for b, c in zip(basis, cs)}
    assert dec.reconstruct(prec) == f
    assert ModularFormDecomposition.from_json(dec.to_json()) == dec


# --- residues ---------------------------------------------------------------


def test_residue_examples():
    assert residue_delta(generator_q("delta", 3), 1) == 1
    assert residue_delta(generator_q("c4", 3) ** 3, 1) == 744
    assert residue_delta(ModularForm(12, QSeries([1, 0, 196560], 3)), 1) == 24


def test_residue_matches_laurent_oracle():
    prec = 4
    c4 = generator_q("c4", prec).series
    # Delta^2 = q^2 D(q); the residue is the q^2 coefficient of c4^6 / D
    d = _delta_oracle(prec + 2)[1:]
    D = sympy.Poly(sum(c * q**i for i, c in enumerate(d)), q)
    D2 = (D * D).rem(sympy.Poly(q**3, q))
    fpoly = sum(int(c) * q**i for i, c in enumerate((c4 ** 6).coeffs))
    ser = sympy.series(fpoly / D2.as_expr(), q, 0, 3).removeO()
    assert residue_delta(c4 ** 6, 2) == _frac(ser.coeff(q, 2))


def test_residue_needs_precision():
    with pytest.raises(InsufficientPrecision):
        residue_delta(QSeries([1], 1), 1)


def test_residue_congruence_equiv_examples():
    leech = ModularForm(12, QSeries([1, 0, 196560], 3))
    r = residue_congruence_equiv(leech, 1)
    assert (r.x_k, r.residue, r.verdict) == (-720, 24, "PASS")
    e8cubed = generator_q("c4", 2) ** 3
    r = residue_congruence_equiv(e8cubed, 1)
    assert r.x_k == 0 and r.residue % 24 == 0 and r.verdict == "PASS"
    assert residue_congruence_equiv(generator_q("c4", 2) ** 3, 1).residue == 744


@given(st.lists(st.integers(-10**4, 10**4), min_size=3, max_size=3))
@settings(max_examples=30, deadline=None)
def test_residue_congruence_never_fails_on_integral_forms(cs):
    prec = 3
    basis = weight_basis(24)
    f = QSeries.zero(prec)
    for c, (i, j, k) in zip(cs, basis):
        f = f + monomial(i, j, k, prec).scale(c)
    assert residue_congruence_equiv(ModularForm(24, f), 2).verdict == "PASS"
