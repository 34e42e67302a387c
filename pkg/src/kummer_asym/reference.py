"""High-precision ground truth for 1F1, U and Laguerre polynomials.

These are the oracles every asymptotic expansion is measured against, so they
never use an expansion in the large parameter: 1F1 is summed from its power
series, U comes from the connection formula (non-integer b) or from direct
quadrature of its Laplace-type integral.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from mpmath import mp, mpf

from .bessel import _log10_abs, to_mpf
from .quadrature import integrate_peaked
from .errors import (
    DomainError,
    IntegerBUnsupported,
    PoleAtNonpositiveIntegerB,
)

MAX_RETRIES = 6


@dataclass(frozen=True)
class KummerArgs:
    a: object
    b: object
    z: object
    dps: int = 100

    def __post_init__(self):
        if self.dps < 50:
            raise DomainError("at least 50 digits are required")


def _nonpositive_int(x) -> bool:
    return x <= 0 and x == int(x)


def _f1f1_series(a, b, x, work: int):
    """Kummer series at the current precision; returns (sum, digits lost to cancellation)."""
    term = mpf(1)
    total = mpf(1)
    biggest = mpf(1)
    tol = mpf(10) ** (-work - 10)
    quiet = 0
    k = 0
    while True:
        if a + k == 0:
            break  # terminating series
        term = term * (a + k) * x / ((b + k) * (k + 1))
        k += 1
        total += term
        if abs(term) > biggest:
            biggest = abs(term)
        decreasing = abs((a + k) * x) < abs((b + k) * (k + 1))
        if decreasing and abs(term) < tol * max(biggest, abs(total)):
            quiet += 1
            if quiet >= 30:
                break
        else:
            quiet = 0
    lost = max(0.0, _log10_abs(biggest) - _log10_abs(total)) if total else float(work)
    return total, lost


def f1f1_ref(a, b, x, dps: int = 100, regularized: bool = False):
    """1F1(a; b; x), or 1F1(a; b; x)/Gamma(b) when ``regularized``.

    At b = 0, -1, -2, ... only the regularized value exists; it is taken from
    lim_{b->-m} 1F1/Gamma(b) = (a)_{m+1} x^{m+1}/(m+1)! * 1F1(a+m+1; m+2; x).
    """
    with mp.workdps(dps + 20):
        a, b, x = to_mpf(a), to_mpf(b), to_mpf(x)
    if _nonpositive_int(b):
        if not regularized:
            raise PoleAtNonpositiveIntegerB(f"1F1 has a pole at b = {b}")
        m = int(-b)
        with mp.workdps(dps + 20):
            inner = f1f1_ref(a + m + 1, m + 2, x, dps + 10)
            val = mpmath.rf(a, m + 1) * x ** (m + 1) / mpmath.factorial(m + 1) * inner
        return +val
    extra = int(0.434 * abs(float(x))) + 10
    for _ in range(MAX_RETRIES):
        work = dps + extra
        with mp.workdps(work):
            total, lost = _f1f1_series(a, b, x, work)
            if work - lost >= dps + 5:
                if regularized:
                    total *= mpmath.rgamma(b)
                with mp.workdps(dps + 20):
                    return +total
        extra = int(extra + lost) + 10
    raise ArithmeticError("f1f1_ref could not reach the requested precision")


def u_ref(a, b, x, dps: int = 100):
    """U(a, b, x) from the connection formula, b not an integer, x > 0.

    U = Gamma(1-b)/Gamma(a-b+1) 1F1(a;b;x) + Gamma(b-1)/Gamma(a) x^(1-b) 1F1(a-b+1;2-b;x)
    """
    with mp.workdps(dps + 20):
        a, b, x = to_mpf(a), to_mpf(b), to_mpf(x)
    if b == int(b):
        raise IntegerBUnsupported("u_ref needs non-integer b; perturb b slightly")
    if x <= 0:
        raise DomainError("u_ref needs x > 0")
    # for a x >> 1 the two terms are ~exp(2 sqrt(ax)) while U ~ exp(-2 sqrt(ax))
    extra = 15 + int(4 * math.sqrt(max(float(a * x), 0.0)) / math.log(10))
    for _ in range(MAX_RETRIES):
        work = dps + extra
        with mp.workdps(work + 10):
            f1 = f1f1_ref(a, b, x, work)
            f2 = f1f1_ref(a - b + 1, 2 - b, x, work)
            t1 = mpmath.gamma(1 - b) * mpmath.rgamma(a - b + 1) * f1
            t2 = mpmath.gamma(b - 1) * mpmath.rgamma(a) * x ** (1 - b) * f2
            total = t1 + t2
            lost = max(_log10_abs(t1), _log10_abs(t2)) - _log10_abs(total) if total else work
        if work - lost >= dps + 5:
            with mp.workdps(dps + 20):
                return +total
        extra = int(extra + lost) + 10
    raise ArithmeticError("u_ref could not reach the requested precision")


def connection_cancellation(a, b, x, dps: int = 50) -> float:
    """Decimal digits lost between the two terms of the connection formula."""
    with mp.workdps(dps + 20):
        a, b, x = to_mpf(a), to_mpf(b), to_mpf(x)
        t1 = mpmath.gamma(1 - b) * mpmath.rgamma(a - b + 1) * f1f1_ref(a, b, x, dps)
        t2 = mpmath.gamma(b - 1) * mpmath.rgamma(a) * x ** (1 - b) * f1f1_ref(a - b + 1, 2 - b, x, dps)
        return max(0.0, max(_log10_abs(t1), _log10_abs(t2)) - _log10_abs(t1 + t2))


def u_ref_quad(a, b, x, dps: int = 100):
    """U(a, b, x) = 1/Gamma(a) int_0^inf e^(-xt) t^(a-1) (1+t)^(b-a-1) dt by tanh-sinh.

    With t = e^v the integrand lives on the real line.  It is scaled by its peak
    value, cut where it drops below 10^-(dps+30), and the remaining interval is
    split around the peak before integrating.
    """
    with mp.workdps(dps + 20):
        a, b, x = to_mpf(a), to_mpf(b), to_mpf(x)
    if a <= 0 or x <= 0:
        raise DomainError("u_ref_quad needs a > 0 and x > 0")
    with mp.workdps(dps + 20):

        def logf(v):
            ev = mpmath.exp(v)
            return -x * ev + a * v + (b - a - 1) * mpmath.log1p(ev)

        def dlogf(v):
            ev = mpmath.exp(v)
            return -x * ev + a + (b - a - 1) * ev / (1 + ev)

        val, top = integrate_peaked(logf, dlogf, dps + 5)
        return +(val * mpmath.exp(top) * mpmath.rgamma(a))


def phi_k_quad(k: int, u, b, z, dps: int = 100):
    """Phi_k = int_0^inf exp(-u^2 s/4 - z^2/s) s^(k-b) ds by quadrature (s = e^v)."""
    with mp.workdps(dps + 20):
        u, b, z = to_mpf(u), to_mpf(b), to_mpf(z)
        q, z2, p = u * u / 4, z * z, k - b + 1

        def logf(v):
            return -q * mpmath.exp(v) - z2 * mpmath.exp(-v) + p * v

        def dlogf(v):
            return -q * mpmath.exp(v) + z2 * mpmath.exp(-v) + p

        val, top = integrate_peaked(logf, dlogf, dps + 5)
        return +(val * mpmath.exp(top))


def bessel_k_quad(nu, x, dps: int = 100):
    """K_nu(x) = (x/2)^nu / 2 * int_0^inf exp(-t - x^2/(4t)) t^(-nu-1) dt by quadrature."""
    with mp.workdps(dps + 20):
        nu, x = to_mpf(nu), to_mpf(x)
        c = x * x / 4

        def logf(v):
            return -mpmath.exp(v) - c * mpmath.exp(-v) - nu * v

        def dlogf(v):
            return -mpmath.exp(v) + c * mpmath.exp(-v) - nu

        val, top = integrate_peaked(logf, dlogf, dps + 5)
        return +((x / 2) ** nu / 2 * val * mpmath.exp(top))


def laguerre_ref(n: int, alpha, x, dps: int = 100):
    """L_n^(alpha)(x) by the three-term recurrence, repeated with more digits until stable."""
    if n < 0:
        raise DomainError("degree must be non-negative")
    work = dps + 20
    prev = None
    for _ in range(MAX_RETRIES + 2):
        with mp.workdps(work):
            al, xx = to_mpf(alpha), to_mpf(x)
            l0, l1 = mpf(1), 1 + al - xx
            if n == 0:
                val = l0
            else:
                for k in range(1, n):
                    l0, l1 = l1, ((2 * k + 1 + al - xx) * l1 - (k + al) * l0) / (k + 1)
                val = l1
        if prev is not None:
            with mp.workdps(dps + 5):
                if val == prev or abs(val - prev) <= abs(val) * mpf(10) ** (-dps - 3):
                    return +val
        prev = val
        work += 30
    raise ArithmeticError("laguerre_ref did not stabilize")


def binomial(top, n: int):
    """C(top, n) for real top."""
    return mpmath.binomial(top, n)
