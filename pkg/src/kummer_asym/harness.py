"""Parameter sweeps: error tables, fitted convergence slopes, the Laguerre check."""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Iterable, Sequence

import mpmath
from mpmath import mp, mpf

from .bessel import to_mpf
from .errors import DomainError
from .expansions import ExpansionFamily, ExpansionSpec, eval_report, f_negative_a
from .reference import f1f1_ref, laguerre_ref

MAX_LAGUERRE_DEGREE = 200


def doubling_grid(start, count: int) -> list:
    return [start * 2**i for i in range(count)]


def check_grid(u_grid: Sequence, minimum: int = 3):
    if len(u_grid) < minimum:
        raise DomainError(f"need at least {minimum} u values, got {len(u_grid)}")
    if any(float(x) >= float(y) for x, y in zip(u_grid, u_grid[1:])):
        raise DomainError("u grid must be strictly increasing")


@dataclass(frozen=True)
class ErrRow:
    family: str
    truncation: int
    u: object
    b: object
    z: object
    rel_error: mpf
    digits_correct: float


def errtable_rows(families: Iterable[ExpansionFamily], truncations: Iterable[int], u_grid, b, z, dps=100):
    """One row per (family, truncation, u), in that nesting order."""
    rows = []
    for fam in families:
        for n in truncations:
            for u in u_grid:
                r = eval_report(ExpansionSpec(fam, n, u, b, z, dps))
                rows.append(ErrRow(fam.value, n, u, b, z, r.rel_error, r.digits_correct))
    return rows


def fit_slope(us, errs) -> float:
    """Least-squares slope of log(err) against log(u)."""
    xs = [math.log(float(u)) for u in us]
    ys = [float(mpmath.log(e)) for e in errs]
    return statistics.linear_regression(xs, ys).slope


@dataclass(frozen=True)
class SlopeFit:
    family: str
    truncation: int
    u: tuple
    rel_errors: tuple
    slope: float


def convergence_slopes(families, truncations, u_grid, b, z, dps=100) -> list[SlopeFit]:
    rows = errtable_rows(families, truncations, u_grid, b, z, dps)
    fits = []
    k = len(u_grid)
    for i in range(0, len(rows), k):
        chunk = rows[i : i + k]
        errs = tuple(r.rel_error for r in chunk)
        fits.append(SlopeFit(chunk[0].family, chunk[0].truncation, tuple(u_grid), errs, fit_slope(u_grid, errs)))
    return fits


@dataclass(frozen=True)
class LaguerreRow:
    n: int
    alpha: object
    z: object
    u: mpf
    expansion: mpf  # C(n+alpha, n) 1F1(-n; alpha+1; -z^2) from the negative-a expansion
    laguerre: mpf  # L_n^(alpha)(-z^2) from the recurrence
    kummer_series: mpf  # the same from the terminating Kummer series
    rel_error: mpf

    @property
    def digits_correct(self) -> float:
        if not self.rel_error:
            return math.inf
        return max(0.0, -float(mpmath.log10(self.rel_error)))


def laguerre_check(degrees: Iterable[int], alpha, z, N: int = 3, dps: int = 100) -> list[LaguerreRow]:
    """Compare the negative-a 1F1 expansion with Laguerre polynomials at argument -z^2.

    With b = alpha + 1 and a = -n = -u^2/4 + b/2, i.e. u = sqrt(4n + 2b),
    L_n^(alpha)(-z^2) = C(n+alpha, n) 1F1(-n; b; -z^2).
    """
    rows = []
    for n in degrees:
        if not 0 <= n <= MAX_LAGUERRE_DEGREE:
            raise DomainError(f"degree {n} outside [0, {MAX_LAGUERRE_DEGREE}]")
        with mp.workdps(dps + 20):
            al, zz = to_mpf(alpha), to_mpf(z)
            b = al + 1
            if b <= 0:
                raise DomainError("alpha must exceed -1")
            u = mpmath.sqrt(4 * n + 2 * b)
            binom = mpmath.binomial(n + al, n)
            lag = laguerre_ref(n, al, -zz * zz, dps)
            series = binom * f1f1_ref(-n, b, -zz * zz, dps)
            approx = binom * f_negative_a(ExpansionSpec(ExpansionFamily.F_NegativeA, N, u, b, zz, dps))
            rel = abs(approx - lag) / abs(lag)
        rows.append(LaguerreRow(n, alpha, z, u, approx, lag, series, rel))
    return rows
