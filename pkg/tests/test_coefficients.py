from fractions import Fraction

import mpmath
import pytest
import sympy

import published
from conftest import b_sym, to_sympy, z_sym
from kummer_asym.coefficients import (
    Family,
    Verdict,
    _shift_step,
    clear_cache,
    compare_tables,
    gen_alpha_beta,
    gen_c,
    gen_gamma_ratio_d,
    gen_slater_AB,
    gen_two_bessel,
    lambda_series,
    mu_series,
    product_table,
    series_product_identity,
)
from kummer_asym.errors import ShapeMismatch
from kummer_asym.exact import B, ONE, Z, ZERO, BivarPoly

s_sym = sympy.Symbol("s")


def z_parity(p):
    return {j % 2 for (_, j) in p.terms}


def same(p, text):
    return sympy.expand(to_sympy(p) - published.parse(text)) == 0


@pytest.fixture(scope="module")
def f_closed_form_coeffs():
    mu = 1 / s_sym - sympy.coth(s_sym / 2) / 2
    lam_exp = ((s_sym / 2) / sympy.sinh(s_sym / 2)) ** b_sym
    ser = sympy.series(sympy.exp(z_sym**2 * mu) * lam_exp, s_sym, 0, 7).removeO()
    return [sympy.expand(ser.coeff(s_sym, k)) for k in range(7)]


def test_c_matches_closed_form_series(f_closed_form_coeffs):
    c = gen_c(7)
    for k in range(7):
        assert sympy.expand(to_sympy(c[k]) - f_closed_form_coeffs[k]) == 0, k


@pytest.mark.parametrize("k", range(5))
def test_c_matches_published(k):
    assert same(gen_c(5)[k], published.C[k])


def test_mu_is_derivative_of_lambda():
    lam, mu = lambda_series(9), mu_series(9)
    for k in range(8):
        assert mu[k] == lam[k + 1] * (k + 1)


def test_c_even_in_z():
    assert all(z_parity(c) <= {0} for c in gen_c(10))


def test_alpha_beta_small_cases():
    c = gen_c(8)
    ab = gen_alpha_beta(3)
    z2 = Z * Z
    assert ab[0] == (ONE, c[1])
    assert ab[1][0] == z2 * c[2] * 4
    assert ab[1][1] == z2 * c[3] * 4 + (2 - B) * c[2] * 4
    assert ab[2][0] == z2 * (z2 * c[4] * 4 + (3 - B) * c[3] * 4) * 4


def test_beta2_unrolled():
    c = gen_c(8)
    z2 = Z * Z
    step1 = [z2 * c[k + 2] * 4 if k == 0 else (z2 * c[k + 2] + (1 - B + k) * c[k + 1]) * 4 for k in range(6)]
    beta2 = (z2 * step1[3] + (2 - B) * step1[2]) * 4
    assert gen_alpha_beta(3)[2][1] == beta2


def test_alpha_depends_only_on_middle_coefficients():
    # alpha_n uses c_{n+1} .. c_{2n}; beta_n uses c_{n+1} .. c_{2n+1}
    c = list(gen_c(10).entries)
    junk = B**7 * Z**3 * 11 + 5
    for n in range(1, 4):
        poked = [ci + junk if not n + 1 <= k <= 2 * n + 1 else ci for k, ci in enumerate(c)]
        x, y = tuple(c), tuple(poked)
        for _ in range(n):
            x, y = _shift_step(x), _shift_step(y)
        assert x[0] == y[0] and x[1] == y[1]


@pytest.mark.parametrize("n", range(3))
def test_two_bessel_matches_published(n):
    t = gen_two_bessel(3)
    assert same(t[n][0], published.TWO_BESSEL_A[n])
    assert same(t[n][1], published.TWO_BESSEL_B[n])


def test_two_bessel_b_is_scaled_beta():
    ab, tb = gen_alpha_beta(5), gen_two_bessel(5)
    for n in range(5):
        assert tb[n][1] == Z * ab[n][1] * -2
        if n:
            assert tb[n][0] == ab[n][0] + (1 - B) * ab[n - 1][1] * 4


def test_two_bessel_parity():
    for a, bb in gen_two_bessel(6):
        assert z_parity(a) <= {0}
        assert z_parity(bb) <= {1}


def test_a2_constant_term():
    assert gen_two_bessel(3)[2][0].at_z0() == B * (B - 1) * (B - 2) * Fraction(-2, 3)


def test_slater_matches_published_except_b1_z9():
    t = gen_slater_AB(3)
    for n in range(3):
        assert same(t[n][0], published.SLATER_A[n])
    assert same(t[0][1], published.SLATER_B[0])
    assert same(t[2][1], published.SLATER_B[2])
    diff = sympy.expand(to_sympy(t[1][1]) - published.parse(published.SLATER_B[1]))
    assert diff == -sympy.Rational(5, 1296) * z_sym**9
    assert t[1][1].coeff(0, 9) == Fraction(1, 1296)


def test_slater_constants_make_a_vanish_at_zero():
    t = gen_slater_AB(6)
    assert len(t.constants) == 5
    for s in range(1, 6):
        assert t[s][0].at_z0() == ZERO
    assert t.constants[0] == ZERO
    assert t.constants[1] == B**3 * Fraction(1, 3) - B * B + B * Fraction(2, 3)


def test_slater_parity():
    for a, bb in gen_slater_AB(5):
        assert z_parity(a) <= {0}
        assert z_parity(bb) <= {1}


@pytest.mark.parametrize("m", range(5))
def test_d_matches_published(m):
    assert same(gen_gamma_ratio_d(9)[2 * m], published.D_EVEN[m])


def test_d_odd_vanish():
    d = gen_gamma_ratio_d(11)
    assert all(d[n] == ZERO for n in range(1, 11, 2))


@pytest.mark.parametrize("b", [0.3, -2.7, 3.5])
def test_d_against_gamma_ratio_numerics(b):
    d = gen_gamma_ratio_d(12)
    with mpmath.workdps(80):
        u = mpmath.mpf(150)
        bb = mpmath.mpf(repr(b))
        a = u * u / 4 + bb / 2
        exact = mpmath.gamma(1 + a - bb) / mpmath.gamma(a) / (u / 2) ** (2 - 2 * bb)
        approx = sum(d[n].evaluate(bb, 0, lambda q: mpmath.mpf(q.numerator) / q.denominator) * u ** (-2 * n) for n in range(12))
        assert abs(approx / exact - 1) < mpmath.mpf(10) ** -40


def test_d_terminates_for_integer_b():
    # Gamma(w + 3/2)/Gamma(w - 1/2) = w^2 - 1/4 exactly when b = -1
    d = gen_gamma_ratio_d(9)
    vals = [p.evaluate(Fraction(-1), 0) for p in d]
    assert vals[:3] == [1, 0, -4]
    assert all(v == 0 for v in vals[3:])


def test_compare_tables_discrepancy():
    rep = compare_tables(gen_slater_AB(3), gen_two_bessel(3))
    assert rep.row(0, "A").verdict is Verdict.Match
    assert rep.row(1, "A").verdict is Verdict.Match
    assert rep.row(2, "A").difference == gen_gamma_ratio_d(3)[2]
    assert rep.row(2, "A").difference == B * (B - 1) * (B - 2) * Fraction(2, 3)
    assert rep.row(2, "B").verdict is Verdict.Mismatch
    assert rep.row(2, "B").difference == (B**3 - B * B * 3 + B * 2) * Z**3 * Fraction(1, 9)
    assert not rep.all_match


def test_compare_tables_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        compare_tables(gen_slater_AB(3), gen_two_bessel(4))
    with pytest.raises(ShapeMismatch):
        compare_tables(gen_c(3), gen_two_bessel(3))


def test_compare_same_table_matches():
    assert compare_tables(gen_two_bessel(4), gen_two_bessel(4)).all_match


@pytest.mark.parametrize("N", [1, 3, 5, 6])
def test_product_identity(N):
    rep = series_product_identity(N)
    assert rep.all_match
    assert len(rep.rows) == 2 * N


def test_product_table_shape():
    t = product_table(4)
    assert t.family is Family.SlaterAB and t.order == 4


def test_cache_returns_same_object_and_clears():
    t = gen_two_bessel(4)
    assert gen_two_bessel(4) is t
    clear_cache()
    t2 = gen_two_bessel(4)
    assert t2 is not t and t2.entries == t.entries


def test_truncated_prefix():
    full = gen_slater_AB(5)
    short = full.truncated(3)
    assert short.entries == gen_slater_AB(3).entries
    assert short.constants == gen_slater_AB(3).constants


@pytest.mark.parametrize("gen", [gen_c, gen_alpha_beta, gen_two_bessel, gen_slater_AB, gen_gamma_ratio_d])
def test_depth_must_be_positive(gen):
    with pytest.raises(ValueError):
        gen(0)


def test_table_lead_must_be_one():
    from kummer_asym.coefficients import CoefficientTable, Provenance

    with pytest.raises(ValueError):
        CoefficientTable(Family.C, (BivarPoly.const(2),), Provenance.IntegralRecursion)
