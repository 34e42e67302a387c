from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import b_sym, to_sympy, z_sym
from kummer_asym.errors import NonIntegrableLogTerm, NonzeroConstantTerm, OrderMismatch
from kummer_asym.exact import (
    B,
    ONE,
    Z,
    ZERO,
    BivarPoly,
    FormalSeries,
    LaurentPoly,
    bernoulli,
    bernoulli_poly_in_b,
    poly_arith,
    poly_diff_z,
    poly_integrate_z_from_0,
    series_exp,
    series_log1p,
    series_mul,
)

F = Fraction

small_frac = st.fractions(min_value=-5, max_value=5, max_denominator=12)
monomial = st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 4)), small_frac)
polys = st.lists(monomial, max_size=6).map(BivarPoly)


def test_poly_arith_examples():
    p = BivarPoly({(1, 0): 1, (0, 2): F(1, 2)})  # b + z^2/2
    q = BivarPoly({(1, 0): -1, (0, 0): 3})  # 3 - b
    assert poly_arith(p, q, "add") == BivarPoly({(0, 2): F(1, 2), (0, 0): 3})
    assert poly_arith(p, q, "mul") == 3 * B - B * B + Z * Z * F(3, 2) - B * Z * Z * F(1, 2)
    assert poly_arith(p, p, "sub") == ZERO


def test_zero_coefficients_vanish():
    p = BivarPoly([((0, 1), 1), ((0, 1), -1), ((2, 0), 0)])
    assert p.is_zero() and p == ZERO
    assert p.terms == {}


def test_diff_and_integrate():
    p = Z**3 * F(1, 6) - B * Z
    assert poly_diff_z(p) == Z * Z * F(1, 2) - B
    assert poly_integrate_z_from_0(Z * Z * 3 + B) == Z**3 + B * Z


def test_integrate_accepts_laurent_with_nonnegative_powers():
    lp = (Z**3).shift_z(-1)
    assert isinstance(lp, LaurentPoly)
    assert poly_integrate_z_from_0(lp) == Z**3 * F(1, 3)


def test_integrate_rejects_log_term():
    with pytest.raises(NonIntegrableLogTerm):
        poly_integrate_z_from_0(ONE.shift_z(-1) * B)


def test_bivar_rejects_negative_z():
    with pytest.raises(ValueError):
        BivarPoly({(0, -1): 1})


def test_floats_refused():
    with pytest.raises(TypeError):
        BivarPoly({(0, 0): 0.5})


def test_str_is_graded():
    assert str(Z**6 * F(1, 72) + (B - 2) * Z * Z * F(1, 6)) == "1/72*z^6 + 1/6*b*z^2 - 1/3*z^2"
    assert str(ZERO) == "0"


@given(polys, polys)
def test_canonical_form_ignores_construction_order(p, q):
    assert p + q == q + p
    assert p * q == q * p
    assert hash(p * q) == hash(q * p)
    assert BivarPoly(list(p.terms.items())[::-1]) == p


@given(polys, polys, polys)
@settings(max_examples=40)
def test_ring_laws_against_sympy(p, q, r):
    lhs = (p + q) * r - p * q
    expected = sympy.expand((to_sympy(p) + to_sympy(q)) * to_sympy(r) - to_sympy(p) * to_sympy(q))
    assert sympy.expand(to_sympy(lhs) - expected) == 0


@given(polys)
def test_integrate_then_differentiate(p):
    assert poly_diff_z(poly_integrate_z_from_0(p)) == p
    assert poly_integrate_z_from_0(p).at_z0() == ZERO


@given(polys)
@settings(max_examples=30)
def test_evaluate_matches_sympy(p):
    bv, zv = F(2, 3), F(-5, 4)
    got = p.evaluate(bv, zv)
    ref = to_sympy(p).subs({b_sym: sympy.Rational(2, 3), z_sym: sympy.Rational(-5, 4)})
    assert sympy.Rational(got.numerator, got.denominator) == ref


def test_series_mul_truncates():
    x = FormalSeries([1, 1, 0, 0])
    assert series_mul(x, x) == FormalSeries([1, 2, 1, 0])
    y = FormalSeries([0, 1, 1])
    assert series_mul(y, y) == FormalSeries([0, 0, 1])


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        FormalSeries([1, 2]) + FormalSeries([1, 2, 3])
    with pytest.raises(OrderMismatch):
        series_mul(FormalSeries([1]), FormalSeries([1, 1]))


def test_series_exp_of_s():
    e = series_exp(FormalSeries([0, 1, 0, 0, 0, 0]))
    assert [c.coeff(0, 0) for c in e] == [F(1, sympy.factorial(k)) for k in range(6)]


def test_series_exp_rejects_constant_term():
    with pytest.raises(NonzeroConstantTerm):
        series_exp(FormalSeries([1, 1]))
    with pytest.raises(NonzeroConstantTerm):
        series_log1p(FormalSeries([B, 1]))


def test_series_exp_symbolic_coefficients():
    # exp(b s + z s^2): coefficient of s^2 is b^2/2 + z
    e = series_exp(FormalSeries([ZERO, B, Z]))
    assert e[2] == B * B * F(1, 2) + Z


@given(st.lists(polys, min_size=2, max_size=4))
@settings(max_examples=25, deadline=None)
def test_exp_of_negative_is_inverse(cs):
    x = FormalSeries([ZERO] + cs)
    assert series_mul(series_exp(x), series_exp(-x)) == FormalSeries.one(x.order)


@given(st.lists(polys, min_size=2, max_size=4))
@settings(max_examples=25, deadline=None)
def test_log1p_inverts_exp(cs):
    x = FormalSeries([ZERO] + cs)
    e = series_exp(x)
    assert series_log1p(e - FormalSeries.one(x.order)) == x


def test_bernoulli_known_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == F(-1, 2)
    assert bernoulli(2) == F(1, 6)
    assert bernoulli(12) == F(-691, 2730)
    assert all(bernoulli(n) == 0 for n in range(3, 40, 2))


@pytest.mark.parametrize("n", range(0, 31))
def test_bernoulli_against_sympy(n):
    ref = sympy.bernoulli(n)
    if n == 1:
        ref = sympy.Rational(-1, 2)  # sympy >= 1.12 uses B_1 = +1/2
    assert bernoulli(n) == F(int(ref.p), int(ref.q))


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_bernoulli_polynomial_in_b(n):
    scale, shift = F(-1, 2), F(1)
    p = bernoulli_poly_in_b(n, scale, shift)
    x = sympy.Symbol("x")
    expected = sympy.bernoulli(n, x).subs(x, 1 - b_sym / 2)
    if n == 1:
        expected = 1 - b_sym / 2 - sympy.Rational(1, 2)
    assert sympy.expand(to_sympy(p) - expected) == 0
