import mpmath
import pytest
from mpmath import mpf

from kummer_asym.errors import DomainError, IntegerBUnsupported, PoleAtNonpositiveIntegerB
from kummer_asym.reference import (
    KummerArgs,
    binomial,
    connection_cancellation,
    f1f1_ref,
    laguerre_ref,
    u_ref,
    u_ref_quad,
)

D = 60


def rel(x, y):
    return abs(x - y) / abs(y)


def tol(digits):
    return mpf(10) ** (-digits)


@pytest.mark.parametrize("x", ["0.5", "-3", "25", "-40"])
def test_f11_exponential(x):
    with mpmath.workdps(D + 20):
        assert rel(f1f1_ref(1, 1, mpf(x), D), mpmath.exp(mpf(x))) < tol(D - 5)


@pytest.mark.parametrize("a,b,x", [("2.5", "0.3", "4"), ("-7.2", "1.7", "9"), ("100.1", "-2.5", "3")])
def test_kummer_transformation(a, b, x):
    with mpmath.workdps(D + 20):
        a, b, x = mpf(a), mpf(b), mpf(x)
        lhs = f1f1_ref(a, b, x, D)
        rhs = mpmath.exp(x) * f1f1_ref(b - a, b, -x, D)
        assert rel(lhs, rhs) < tol(D - 5)


def test_f11_against_mpmath():
    with mpmath.workdps(D + 20):
        a, b, x = mpf("30.25"), mpf("0.3"), mpf("2.25")
        assert rel(f1f1_ref(a, b, x, D), mpmath.hyp1f1(a, b, x)) < tol(D - 5)


def test_terminating_series():
    # 1F1(-2; b; x) = 1 - 2x/b + x^2/(b(b+1))
    with mpmath.workdps(D + 20):
        b, x = mpf("0.5"), mpf(3)
        assert rel(f1f1_ref(-2, b, x, D), 1 - 2 * x / b + x * x / (b * (b + 1))) < tol(D - 5)


def test_regularized_limit_at_negative_integer_b():
    with mpmath.workdps(D + 40):
        a, x = mpf("3.5"), mpf("1.2")
        at_pole = f1f1_ref(a, -1, x, D, regularized=True)
        near = f1f1_ref(a, -1 + mpf(10) ** -30, x, D + 20, regularized=True)
        assert rel(at_pole, near) < tol(25)
    with pytest.raises(PoleAtNonpositiveIntegerB):
        f1f1_ref(a, -1, x, D)


def test_regularized_equals_divided_by_gamma():
    with mpmath.workdps(D + 20):
        a, b, x = mpf(2), mpf("2.5"), mpf(1)
        assert rel(f1f1_ref(a, b, x, D, regularized=True), f1f1_ref(a, b, x, D) / mpmath.gamma(b)) < tol(D - 5)


def test_u_special_case():
    with mpmath.workdps(D + 20):
        a, x = mpf("2.5"), mpf(3)
        assert rel(u_ref(a, a + 1, x, D), x ** (-a)) < tol(D - 5)


def test_u_reflection_in_b():
    with mpmath.workdps(D + 20):
        a, b, x = mpf("12.3"), mpf("0.3"), mpf("2.25")
        lhs = u_ref(a, b, x, D)
        rhs = x ** (1 - b) * u_ref(a - b + 1, 2 - b, x, D)
        assert rel(lhs, rhs) < tol(D - 5)


@pytest.mark.parametrize("a,b,x", [("25.15", "0.3", "2.25"), ("1000.5", "-1.5", "0.5"), ("10", "3.7", "9")])
def test_u_connection_matches_quadrature(a, b, x):
    with mpmath.workdps(D + 20):
        assert rel(u_ref(a, b, x, D), u_ref_quad(a, b, x, D)) < tol(D - 10)


def test_u_decreases_in_x():
    vals = [u_ref(20.5, 0.3, x, D) for x in (0.5, 1, 2, 4)]
    assert all(p > q for p, q in zip(vals, vals[1:]))


def test_u_domain():
    with pytest.raises(IntegerBUnsupported):
        u_ref(3, 2, 1, D)
    with pytest.raises(DomainError):
        u_ref(3, 0.5, -1, D)
    with pytest.raises(DomainError):
        u_ref_quad(-1, 0.5, 1, D)


def test_cancellation_grows_with_a():
    small = connection_cancellation(10, 0.3, 2.25)
    large = connection_cancellation(1000, 0.3, 2.25)
    assert large > small + 10


@pytest.mark.parametrize("n", [0, 1, 2, 7, 40])
def test_laguerre_against_mpmath(n):
    with mpmath.workdps(D + 20):
        al, x = mpf("0.5"), mpf("-2.25")
        assert rel(laguerre_ref(n, al, x, D), mpmath.laguerre(n, al, x)) < tol(D - 5)


def test_laguerre_low_degrees():
    with mpmath.workdps(D + 20):
        al, x = mpf("1.5"), mpf("0.7")
        assert laguerre_ref(0, al, x, D) == 1
        assert rel(laguerre_ref(1, al, x, D), 1 + al - x) < tol(D - 5)
        two = (x * x - 2 * (al + 2) * x + (al + 1) * (al + 2)) / 2
        assert rel(laguerre_ref(2, al, x, D), two) < tol(D - 5)


def test_laguerre_is_binomial_times_kummer():
    with mpmath.workdps(D + 20):
        n, al, x = 30, mpf("0.5"), mpf("-2.25")
        via_f = binomial(n + al, n) * f1f1_ref(-n, al + 1, x, D)
        assert rel(laguerre_ref(n, al, x, D), via_f) < tol(D - 5)


def test_kummer_args_needs_digits():
    with pytest.raises(DomainError):
        KummerArgs(1, 1, 1, dps=20)
    assert KummerArgs(1, 2, 3).dps == 100
