import mpmath
import pytest
from mpmath import mpf

from kummer_asym.errors import QuadratureNonconvergence
from kummer_asym.quadrature import integrate_peaked, tanh_sinh, tanh_sinh_split


def test_polynomial():
    with mpmath.workdps(60):
        assert abs(tanh_sinh(lambda t: t**3 - t, 0, 2, 50) - 2) < mpf(10) ** -48


def test_endpoint_singularity():
    # int_0^1 log t dt = -1
    with mpmath.workdps(60):
        assert abs(tanh_sinh(lambda t: mpmath.log(t), 0, 1, 50) + 1) < mpf(10) ** -45


def test_split_matches_single():
    with mpmath.workdps(60):
        f = mpmath.exp
        whole = tanh_sinh(f, 0, 3, 50)
        parts = tanh_sinh_split(f, [0, 1, mpf("2.5"), 3], 50)
        assert abs(whole - parts) < mpf(10) ** -45
        assert abs(whole - (mpmath.e**3 - 1)) < mpf(10) ** -45


def test_gaussian_on_line():
    with mpmath.workdps(80):
        val, top = integrate_peaked(lambda v: -(v - 3) ** 2, lambda v: -2 * (v - 3), 60)
        assert abs(val * mpmath.exp(top) - mpmath.sqrt(mpmath.pi)) < mpf(10) ** -55


def test_nonconvergence_raises():
    with pytest.raises(QuadratureNonconvergence):
        tanh_sinh(lambda t: mpmath.sin(1 / t) if t else 0, 0, 1, 50)
