"""Exact generation of every coefficient family of the large-a expansions.

Families
--------
``C``           Maclaurin coefficients c_k of f(s) = exp(z^2 mu(s) + b lambda(s)).
``AlphaBeta``   alpha_n, beta_n from the integration-by-parts recursion.
``TwoBessel``   a_n(z), b_n(z) of the two-Bessel (K_{b-1}, K_b) form.
``SlaterAB``    Slater's A_s(z), B_s(z) from his differential-equation recursion.
``GammaRatioD`` d_n of Gamma(1+a-b)/Gamma(a) ~ (u/2)^(2-2b) sum d_n u^(-2n).

Pair families store ``(first, second)`` tuples per index.
"""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple, Union

from .errors import ShapeMismatch
from .exact import (
    B,
    ONE,
    ZERO,
    Z,
    BivarPoly,
    FormalSeries,
    bernoulli,
    bernoulli_poly_in_b,
    poly_integrate_z_from_0,
    series_exp,
)

DEFAULT_DEPTH = 5


class Family(enum.Enum):
    C = "c"
    AlphaBeta = "alphabeta"
    TwoBessel = "two-bessel"
    SlaterAB = "slater"
    GammaRatioD = "d"

    @property
    def is_pair(self) -> bool:
        return self in (Family.AlphaBeta, Family.TwoBessel, Family.SlaterAB)

    @property
    def part_names(self) -> Tuple[str, ...]:
        return {
            Family.C: ("c",),
            Family.AlphaBeta: ("alpha", "beta"),
            Family.TwoBessel: ("a", "b"),
            Family.SlaterAB: ("A", "B"),
            Family.GammaRatioD: ("d",),
        }[self]


class Provenance(enum.Enum):
    IntegralRecursion = "integral-recursion"
    SlaterRecursion = "slater-recursion"
    GammaRatio = "gamma-ratio"
    SeriesProduct = "series-product"


Entry = Union[BivarPoly, Tuple[BivarPoly, BivarPoly]]


@dataclass(frozen=True)
class CoefficientTable:
    family: Family
    entries: Tuple[Entry, ...]
    provenance: Provenance
    # Slater's integration constants K_s (polynomials in b); empty for other families
    constants: Tuple[BivarPoly, ...] = ()

    def __post_init__(self):
        if not self.entries:
            raise ValueError("empty coefficient table")
        lead = self.entries[0][0] if self.family.is_pair else self.entries[0]
        if self.family is not Family.AlphaBeta and lead != ONE:
            raise ValueError(f"{self.family.name} table must start with 1, got {lead}")

    @property
    def order(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def part(self, which: int) -> Tuple[BivarPoly, ...]:
        """All first (0) or second (1) members of a pair family."""
        if not self.family.is_pair:
            raise ShapeMismatch(f"{self.family.name} is not a pair family")
        return tuple(e[which] for e in self.entries)

    def truncated(self, n: int) -> "CoefficientTable":
        if n > self.order:
            raise ValueError(f"table has only {self.order} entries")
        return CoefficientTable(self.family, self.entries[:n], self.provenance, self.constants[: max(n - 1, 0)])


class Verdict(enum.Enum):
    Match = "Match"
    Mismatch = "Mismatch"


@dataclass(frozen=True)
class DiscrepancyRow:
    index: int
    part: str
    difference: BivarPoly
    verdict: Verdict

    def __post_init__(self):
        if self.difference.is_zero() != (self.verdict is Verdict.Match):
            raise ValueError("verdict inconsistent with difference")


@dataclass(frozen=True)
class DiscrepancyReport:
    left: str
    right: str
    rows: Tuple[DiscrepancyRow, ...] = field(default_factory=tuple)

    @property
    def all_match(self) -> bool:
        return all(r.verdict is Verdict.Match for r in self.rows)

    def row(self, index: int, part: str | None = None) -> DiscrepancyRow:
        for r in self.rows:
            if r.index == index and (part is None or r.part == part):
                return r
        raise KeyError((index, part))

    def mismatches(self):
        return [r for r in self.rows if r.verdict is Verdict.Mismatch]


# ---------------------------------------------------------------------------
# cache

_cache: dict = {}
_cache_lock = threading.Lock()


def _cached(key, build):
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    value = build()
    with _cache_lock:
        _cache.setdefault(key, value)
        return _cache[key]


def clear_cache():
    with _cache_lock:
        _cache.clear()


# ---------------------------------------------------------------------------
# c_k


def mu_series(order: int) -> FormalSeries:
    """mu(s) = 1/s - 1/(e^s - 1) - 1/2 = -sum_k B_2k s^(2k-1) / (2k)!."""
    coeffs = [ZERO] * order
    fact = 1
    for n in range(1, order + 1):
        fact *= n
        if n % 2 == 0 and n - 1 < order:
            coeffs[n - 1] = BivarPoly.const(-bernoulli(n) / fact)
    return FormalSeries(coeffs)


def lambda_series(order: int) -> FormalSeries:
    """lambda(s) = log((s/2)/sinh(s/2)), whose derivative is mu(s)."""
    coeffs = [ZERO] * order
    fact = 1
    for n in range(1, order):
        fact *= n
        if n % 2 == 0:
            coeffs[n] = BivarPoly.const(-bernoulli(n) / (n * fact))
    return FormalSeries(coeffs)


def f_series(order: int) -> FormalSeries:
    """Maclaurin series of f(s) = exp(z^2 mu(s)) * ((s/2)/sinh(s/2))^b."""
    exponent = mu_series(order).scale(Z * Z) + lambda_series(order).scale(B)
    return series_exp(exponent)


def gen_c(K: int) -> CoefficientTable:
    if K < 1:
        raise ValueError("K must be >= 1")
    return _cached(
        (Family.C, K),
        lambda: CoefficientTable(Family.C, f_series(K).coeffs, Provenance.IntegralRecursion),
    )


# ---------------------------------------------------------------------------
# alpha_n, beta_n and the two-Bessel coefficients


def _shift_step(c: Tuple[BivarPoly, ...]) -> Tuple[BivarPoly, ...]:
    """Coefficients of f_{n+1} from those of f_n."""
    z2 = Z * Z
    out = [z2 * c[2] * 4]
    for k in range(1, len(c) - 2):
        out.append((z2 * c[k + 2] + (1 - B + k) * c[k + 1]) * 4)
    return tuple(out)


def gen_alpha_beta(N: int) -> CoefficientTable:
    if N < 1:
        raise ValueError("N must be >= 1")

    def build():
        # each step consumes two coefficients; beta_{N-1} needs c up to 2N - 1
        c = gen_c(2 * N + 2).entries
        entries = []
        for _ in range(N):
            entries.append((c[0], c[1]))
            c = _shift_step(c)
        return CoefficientTable(Family.AlphaBeta, tuple(entries), Provenance.IntegralRecursion)

    return _cached((Family.AlphaBeta, N), build)


def gen_two_bessel(N: int) -> CoefficientTable:
    if N < 1:
        raise ValueError("N must be >= 1")

    def build():
        ab = gen_alpha_beta(N)
        entries = []
        for n, (alpha, beta) in enumerate(ab.entries):
            a_n = ONE if n == 0 else alpha + (1 - B) * ab.entries[n - 1][1] * 4
            entries.append((a_n, Z * beta * -2))
        return CoefficientTable(Family.TwoBessel, tuple(entries), Provenance.IntegralRecursion)

    return _cached((Family.TwoBessel, N), build)


# ---------------------------------------------------------------------------
# Slater's recursion


def _slater_B(A: BivarPoly) -> BivarPoly:
    half = Fraction(1, 2)
    dA = A.diff_z()
    integrand = A.shift_z(2) * half - dA.shift_z(-1) * (B - half)
    return dA * -half + poly_integrate_z_from_0(integrand)


def _slater_next_A(Bs: BivarPoly) -> Tuple[BivarPoly, BivarPoly]:
    """A_{s+1} and the constant K_s that makes A_{s+1}(0) = 0."""
    half = Fraction(1, 2)
    raw = Bs.shift_z(-1) * (B - half) - Bs.diff_z() * half + poly_integrate_z_from_0(Bs.shift_z(2) * half)
    raw = raw.to_poly() if hasattr(raw, "to_poly") else raw
    K = -raw.at_z0()
    return raw + K, K


def gen_slater_AB(N: int) -> CoefficientTable:
    if N < 1:
        raise ValueError("N must be >= 1")

    def build():
        A = ONE
        entries, constants = [], []
        for s in range(N):
            Bs = _slater_B(A)
            entries.append((A, Bs))
            if s + 1 < N:
                A, K = _slater_next_A(Bs)
                constants.append(K)
        return CoefficientTable(
            Family.SlaterAB, tuple(entries), Provenance.SlaterRecursion, tuple(constants)
        )

    return _cached((Family.SlaterAB, N), build)


# ---------------------------------------------------------------------------
# Gamma ratio


def gen_gamma_ratio_d(N: int) -> CoefficientTable:
    """d_n with Gamma(1+a-b)/Gamma(a) ~ (u/2)^(2-2b) sum_n d_n u^(-2n), a = u^2/4 + b/2.

    From the log-gamma expansion with w = u^2/4, h1 = 1 - b/2, h0 = b/2:
    log ratio - (1-b) log w ~ sum_k (-1)^(k+1) (B_{k+1}(h1) - B_{k+1}(h0)) / (k (k+1) w^k),
    and w^-k = 4^k u^(-2k).
    """
    if N < 1:
        raise ValueError("N must be >= 1")

    def build():
        half = Fraction(1, 2)
        exponent = [ZERO] * N
        for k in range(1, N):
            diff = bernoulli_poly_in_b(k + 1, -half, Fraction(1)) - bernoulli_poly_in_b(k + 1, half, Fraction(0))
            sign = 1 if k % 2 else -1
            exponent[k] = diff * Fraction(sign * 4**k, k * (k + 1))
        d = series_exp(FormalSeries(exponent))
        return CoefficientTable(Family.GammaRatioD, d.coeffs, Provenance.GammaRatio)

    return _cached((Family.GammaRatioD, N), build)


# ---------------------------------------------------------------------------
# comparisons


def _parts(table: CoefficientTable):
    if table.family.is_pair:
        return [(name, table.part(i)) for i, name in enumerate(table.family.part_names)]
    return [(table.family.part_names[0], tuple(table.entries))]


def compare_tables(x: CoefficientTable, y: CoefficientTable) -> DiscrepancyReport:
    """Exact per-index differences x - y."""
    if x.family.is_pair != y.family.is_pair or x.order != y.order:
        raise ShapeMismatch(
            f"cannot compare {x.family.name}[{x.order}] with {y.family.name}[{y.order}]"
        )
    rows = []
    for (name, xs), (_, ys) in zip(_parts(x), _parts(y)):
        for i, (p, q) in enumerate(zip(xs, ys)):
            d = p - q
            rows.append(DiscrepancyRow(i, name, d, Verdict.Match if d.is_zero() else Verdict.Mismatch))
    rows.sort(key=lambda r: (r.index, r.part))
    return DiscrepancyReport(x.family.name, y.family.name, tuple(rows))


def product_table(N: int) -> CoefficientTable:
    """(sum d_j u^-2j) * (sum (a_n, b_n) u^-2n), truncated to N terms."""
    d = gen_gamma_ratio_d(N).entries
    ab = gen_two_bessel(N).entries
    entries = []
    for s in range(N):
        A = sum((d[j] * ab[s - j][0] for j in range(s + 1)), ZERO)
        Bs = sum((d[j] * ab[s - j][1] for j in range(s + 1)), ZERO)
        entries.append((A, Bs))
    return CoefficientTable(Family.SlaterAB, tuple(entries), Provenance.SeriesProduct)


def series_product_identity(N: int) -> DiscrepancyReport:
    """Check A_s = sum_{2m+n=s} d_2m a_n and the same for B_s."""
    report = compare_tables(gen_slater_AB(N), product_table(N))
    return DiscrepancyReport("SlaterAB", "GammaRatioD*TwoBessel", report.rows)
