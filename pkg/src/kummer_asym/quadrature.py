"""Tanh-sinh (double-exponential) quadrature at arbitrary precision."""
from __future__ import annotations

from functools import lru_cache

import mpmath
from mpmath import mp, mpf

from .errors import QuadratureNonconvergence

MAX_LEVEL = 12


@lru_cache(maxsize=64)
def _level_nodes(level: int, dps: int):
    """Nodes new at step h = 2^-level on [-1, 1], as (1 - |x|, weight) pairs for t > 0."""
    with mp.workdps(dps + 10):
        h = mpf(2) ** (-level)
        halfpi = mpmath.pi / 2
        tiny = mpf(10) ** (-dps - 5)
        out = []
        k = 1
        step = 1 if level == 0 else 2
        while True:
            t = k * h
            s = halfpi * mpmath.sinh(t)
            c = mpmath.cosh(s)
            w = halfpi * mpmath.cosh(t) / (c * c)
            # 1 - tanh(s), kept apart from x to avoid cancellation near the endpoints
            one_minus = 2 / (mpmath.exp(2 * s) + 1)
            if w < tiny or one_minus < tiny:
                break
            out.append((one_minus, w))
            k += step
    return tuple(out)


def tanh_sinh(f, a, b, dps: int, min_level: int = 3):
    """Integrate f over the finite interval [a, b] to about ``dps`` digits.

    The step is halved (node count doubled) until two successive estimates
    agree to ``dps`` digits.
    """
    work = dps + 10
    with mp.workdps(work):
        a, b = mpf(a), mpf(b)
        half = (b - a) / 2
        total = mpmath.pi / 2 * f((a + b) / 2)
        prev = None
        for level in range(MAX_LEVEL + 1):
            for om, w in _level_nodes(level, work):
                total += w * (f(a + half * om) + f(b - half * om))
            est = total * half * mpf(2) ** (-level)
            if prev is not None and level >= min_level:
                if abs(est - prev) <= abs(est) * mpf(10) ** (-dps):
                    return est
            prev = est
    raise QuadratureNonconvergence(f"tanh-sinh did not reach {dps} digits by level {MAX_LEVEL}")


def tanh_sinh_split(f, points, dps: int):
    """Sum of tanh_sinh over consecutive pairs of ``points``."""
    with mp.workdps(dps + 10):
        return sum(tanh_sinh(f, lo, hi, dps + 3) for lo, hi in zip(points[:-1], points[1:]))


def integrate_peaked(logf, dlogf, dps: int):
    """int_{-inf}^{inf} exp(logf(v)) dv for a log-concave integrand.

    ``dlogf`` must be decreasing with a single zero (the peak).  The integrand
    is scaled by its peak value, cut where it falls below 10^-(dps+30), and the
    interval is split around the peak.  Returns (integral / exp(peak), logf(peak)).
    """
    with mp.workdps(dps + 20):
        lo, hi = mpf(-1), mpf(1)
        while dlogf(lo) < 0:
            lo *= 2
        while dlogf(hi) > 0:
            hi *= 2
        for _ in range(120):
            mid = (lo + hi) / 2
            if dlogf(mid) > 0:
                lo = mid
            else:
                hi = mid
        peak = (lo + hi) / 2
        top = logf(peak)
        h = mpf("1e-10")
        curv = -(dlogf(peak + h) - dlogf(peak - h)) / (2 * h)
        width = 1 / mpmath.sqrt(curv) if curv > 0 else mpf(1)
        floor = -(dps + 30) * mpmath.log(10)

        def edge(direction):
            step = width
            while logf(peak + direction * step) - top > floor:
                step *= 2
            return peak + direction * step

        left, right = edge(-1), edge(1)
        cuts = [peak + s * width for s in (-40, -12, -4, 0, 4, 12, 40)]
        points = [left] + [c for c in cuts if left < c < right] + [right]
        val = tanh_sinh_split(lambda v: mpmath.exp(logf(v) - top), points, dps + 5)
        return val, top
