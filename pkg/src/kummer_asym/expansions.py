"""Numerical evaluation of the large-a expansions of 1F1 and U.

Every family is evaluated in u-coordinates: the caller gives u > 0 and the
large parameter follows as a = u^2/4 + b/2 (positive-a families) or
a = -u^2/4 + b/2 (negative-a families).  The argument of the Kummer function
is always z^2.

Remainder integrals are not computed; accuracy is measured against the
reference oracles in :mod:`kummer_asym.reference`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mp, mpf

from . import coefficients as coef
from .bessel import _log10_abs, bessel_k, i_reduced, psi_k, to_mpf
from .errors import DomainError, GammaPole, IntegerBUnsupported, PoleAtNonpositiveIntegerB
from .exact import BivarPoly
from .reference import f1f1_ref, u_ref

# desk-scale box in which the expansions are exercised
Z_RANGE = (1e-3, 4.0)
B_RANGE = (-4.0, 4.0)
U_RANGE = (5.0, 200.0)


class ExpansionFamily(enum.Enum):
    U_BesselSeries = "u_bessel_series"
    U_TwoBessel = "u_two_bessel"
    U_SlaterOriginal = "u_slater_original"
    U_SlaterCorrected = "u_slater_corrected"
    F_BesselSeries = "f_bessel_series"
    F_TwoBessel = "f_two_bessel"
    F_SlaterForm = "f_slater_form"
    F_NegativeA = "f_negative_a"
    U_NegativeA = "u_negative_a"

    @property
    def negative_a(self) -> bool:
        return self in (ExpansionFamily.F_NegativeA, ExpansionFamily.U_NegativeA)

    @property
    def uses_K(self) -> bool:
        """Truncation counts Bessel-series terms K rather than two-Bessel terms N."""
        return self in (ExpansionFamily.U_BesselSeries, ExpansionFamily.F_BesselSeries)

    @classmethod
    def parse(cls, name: str) -> "ExpansionFamily":
        for fam in cls:
            if name in (fam.value, fam.name):
                return fam
        raise ValueError(f"unknown family {name!r}")


def check_box(u, b, z):
    """Raise DomainError outside the documented parameter box."""
    u, b, z = float(u), float(b), float(z)
    if not U_RANGE[0] <= u <= U_RANGE[1]:
        raise DomainError(f"u = {u} outside [{U_RANGE[0]}, {U_RANGE[1]}]")
    if not B_RANGE[0] <= b <= B_RANGE[1]:
        raise DomainError(f"b = {b} outside [{B_RANGE[0]}, {B_RANGE[1]}]")
    if not Z_RANGE[0] <= z <= Z_RANGE[1]:
        raise DomainError(f"z = {z} outside [{Z_RANGE[0]}, {Z_RANGE[1]}]")


@dataclass(frozen=True)
class ExpansionSpec:
    family: ExpansionFamily
    truncation: int
    u: object
    b: object
    z: object
    dps: int = 100

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", ExpansionFamily.parse(self.family))
        if self.truncation < 1:
            raise DomainError("truncation must be >= 1")
        if float(self.u) <= 0:
            raise DomainError("u must be positive")
        if float(self.z) <= 0:
            raise DomainError("z must be positive")
        if self.dps < 50:
            raise DomainError("at least 50 digits are required")

    @property
    def a(self):
        return a_of_u(self.u, self.b, negative=self.family.negative_a, dps=self.dps)


def a_of_u(u, b, negative: bool = False, dps: int = 100):
    with mp.workdps(dps + 20):
        u, b = to_mpf(u), to_mpf(b)
        q = u * u / 4
        return (-q if negative else q) + b / 2


def _q(c: Fraction):
    return mpf(c.numerator) / c.denominator


def _poly_at(p: BivarPoly, b, z):
    return p.evaluate(b, z, convert=_q)


def _poly_at_w(p: BivarPoly, b, w):
    """Evaluate a polynomial even in z at z^2 = w (w may be negative)."""
    total = 0
    for (i, j), c in p.terms.items():
        if j % 2:
            raise ValueError(f"{p} is not even in z")
        total += _q(c) * b**i * w ** (j // 2)
    return total


def _series_sum(polys, b, z, u, at_w=False):
    u2 = u * u
    total = 0
    scale = mpf(1)
    for p in polys:
        total += (_poly_at_w(p, b, z) if at_w else _poly_at(p, b, z)) * scale
        scale /= u2
    return total


def _gamma_ratio(a, b):
    """Gamma(1+a-b)/Gamma(a)."""
    top = 1 + a - b
    if top <= 0 and top == int(top):
        raise GammaPole(f"Gamma(1+a-b) has a pole at 1+a-b = {top}")
    return mpmath.gamma(top) * mpmath.rgamma(a)


# ---------------------------------------------------------------------------
# U, positive a


def _u_two_form(u, b, z, A, Bs, dps, corrected=False):
    """e^{z^2/2} z^-b * prefactor * (z K_{b-1}(uz) sum A/u^2n - (z/u) K_b(uz) sum B/u^2n)."""
    a = u * u / 4 + b / 2
    x = u * z
    kb1 = bessel_k(b - 1, x, dps + 5).value
    kb = bessel_k(b, x, dps + 5).value
    bracket = z * kb1 * _series_sum(A, b, z, u) - z / u * kb * _series_sum(Bs, b, z, u)
    if corrected:
        pref = 2**b * u ** (1 - b) * mpmath.rgamma(1 + a - b)
    else:
        pref = 2 ** (2 - b) * u ** (b - 1) * mpmath.rgamma(a)
    return mpmath.exp(z * z / 2) * z ** (-b) * pref * bracket


def u_bessel_series(spec: ExpansionSpec):
    """(e^{z^2/2}/Gamma(a)) sum_{k<K} c_k Phi_k."""
    with mp.workdps(spec.dps + 10):
        u, b, z = to_mpf(spec.u), to_mpf(spec.b), to_mpf(spec.z)
        a = u * u / 4 + b / 2
        c = coef.gen_c(spec.truncation).entries
        x = u * z
        total = 0
        for k, ck in enumerate(c):
            nu = k - b + 1
            phi = 2 * (2 * z / u) ** nu * bessel_k(nu, x, spec.dps + 5).value
            total += _poly_at(ck, b, z) * phi
        return mpmath.exp(z * z / 2) * mpmath.rgamma(a) * total


def u_two_bessel(spec: ExpansionSpec):
    with mp.workdps(spec.dps + 10):
        u, b, z = to_mpf(spec.u), to_mpf(spec.b), to_mpf(spec.z)
        t = coef.gen_two_bessel(spec.truncation)
        return _u_two_form(u, b, z, t.part(0), t.part(1), spec.dps)


def u_slater_original(spec: ExpansionSpec):
    """Slater's U expansion as printed, with 2^{2-b} u^{b-1}/Gamma(a) in front."""
    with mp.workdps(spec.dps + 10):
        u, b, z = to_mpf(spec.u), to_mpf(spec.b), to_mpf(spec.z)
        t = coef.gen_slater_AB(spec.truncation)
        return _u_two_form(u, b, z, t.part(0), t.part(1), spec.dps)


def u_slater_corrected(spec: ExpansionSpec):
    """Slater's A_s, B_s with the prefactor 2^b u^{1-b}/Gamma(1+a-b)."""
    with mp.workdps(spec.dps + 10):
        u, b, z = to_mpf(spec.u), to_mpf(spec.b), to_mpf(spec.z)
        t = coef.gen_slater_AB(spec.truncation)
        return _u_two_form(u, b, z, t.part(0), t.part(1), spec.dps, corrected=True)


# ---------------------------------------------------------------------------
# 1F1, positive a


def f_bessel_series(spec: ExpansionSpec):
    """1F1(a;b;z^2)/Gamma(b) ~ Gamma(1+a-b) e^{z^2/2}/Gamma(a) sum (-1)^k c_k Psi_k.

    Returns the regularized value, which stays finite at b = 0, -1, -2, ...
    """
    with mp.workdps(spec.dps + 10):
        u, b, z = to_mpf(spec.u), to_mpf(spec.b), to_mpf(spec.z)
        a = u * u / 4 + b / 2
        c = coef.gen_c(spec.truncation).entries
        total = 0
        for k, ck in enumerate(c):
            term = _poly_at(ck, b, z) * psi_k(k, u, b, z, spec.dps + 5)
            total += -term if k % 2 else term
        return _gamma_ratio(a, b) * mpmath.exp(z * z / 2) * total


def _f_two_form_w(u, b, w, A, Bs, dps, slater=False):
    """1F1(u^2/4+b/2; b; w)/Gamma(b) from a two-Bessel I form, for real w of either sign.

    Written with i_reduced so that z enters only through w = z^2:
    z^-b z I_{b-1}(uz) = (u/2)^{b-1} i_reduced(b-1, u^2 w) and
    z^-b (z/u) I_b(uz) = z (u/2)^b / u * i_reduced(b, u^2 w); the odd-in-z
    coefficients B are paired with that extra z.
    """
    a = u * u / 4 + b / 2
    y = u * u * w
    half = u / 2
    i1, _ = i_reduced(b - 1, y, dps + 5)
    i0, _ = i_reduced(b, y, dps + 5)
    zB = [p.shift_z(1) for p in Bs]
    bracket = half ** (b - 1) * i1 * _series_sum(A, b, w, u, at_w=True) + half**b / u * i0 * _series_sum(
        zB, b, w, u, at_w=True
    )
    if slater:
        pref = u ** (1 - b) * 2 ** (b - 1)
    else:
        pref = _gamma_ratio(a, b) * u ** (b - 1) * 2 ** (1 - b)
    return mpmath.exp(w / 2) * pref * bracket


def _times_gamma_b(b, reg):
    if b <= 0 and b == int(b):
        raise PoleAtNonpositiveIntegerB(f"1F1 has a pole at b = {b}; use the regularized value")
    return mpmath.gamma(b) * reg


def f_two_bessel(spec: ExpansionSpec):
    with mp.workdps(spec.dps + 10):
        u, b, z = to_mpf(spec.u), to_mpf(spec.b), to_mpf(spec.z)
        t = coef.gen_two_bessel(spec.truncation)
        reg = _f_two_form_w(u, b, z * z, t.part(0), t.part(1), spec.dps)
        return _times_gamma_b(b, reg)


def f_slater_form(spec: ExpansionSpec):
    with mp.workdps(spec.dps + 10):
        u, b, z = to_mpf(spec.u), to_mpf(spec.b), to_mpf(spec.z)
        t = coef.gen_slater_AB(spec.truncation)
        reg = _f_two_form_w(u, b, z * z, t.part(0), t.part(1), spec.dps, slater=True)
        return _times_gamma_b(b, reg)


def f_two_bessel_signflip(spec: ExpansionSpec):
    """f_two_bessel with the sign of the b_n series reversed (the U-form sign)."""
    with mp.workdps(spec.dps + 10):
        u, b, z = to_mpf(spec.u), to_mpf(spec.b), to_mpf(spec.z)
        t = coef.gen_two_bessel(spec.truncation)
        reg = _f_two_form_w(u, b, z * z, t.part(0), [-p for p in t.part(1)], spec.dps)
        return _times_gamma_b(b, reg)


# ---------------------------------------------------------------------------
# negative a


def f_negative_a(spec: ExpansionSpec):
    """1F1(-u^2/4+b/2; b; -z^2) = e^{-z^2} 1F1(u^2/4+b/2; b; z^2)."""
    with mp.workdps(spec.dps + 10):
        z = to_mpf(spec.z)
        return mpmath.exp(-z * z) * f_two_bessel(spec)


def u_negative_a_terms(spec: ExpansionSpec):
    """The two connection-formula terms of U(-u^2/4+b/2, b, z^2).

    Each 1F1 there has large negative a and positive argument z^2; Kummer's
    transformation turns it into the positive-a two-Bessel form at w = -z^2.
    The second one, 1F1(a-b+1; 2-b; z^2), is the same construction with b
    replaced by 2 - b.
    """
    with mp.workdps(spec.dps + 10):
        u, b, z = to_mpf(spec.u), to_mpf(spec.b), to_mpf(spec.z)
        if b == int(b):
            raise IntegerBUnsupported("the connection formula needs non-integer b")
        x = z * z
        a = -u * u / 4 + b / 2
        t1 = coef.gen_two_bessel(spec.truncation)
        f1 = mpmath.exp(x) * mpmath.gamma(b) * _f_two_form_w(u, b, -x, t1.part(0), t1.part(1), spec.dps)
        f2 = mpmath.exp(x) * mpmath.gamma(2 - b) * _f_two_form_w(u, 2 - b, -x, t1.part(0), t1.part(1), spec.dps)
        term1 = mpmath.gamma(1 - b) * mpmath.rgamma(a - b + 1) * f1
        term2 = mpmath.gamma(b - 1) * mpmath.rgamma(a) * x ** (1 - b) * f2
        return term1, term2


def u_negative_a(spec: ExpansionSpec):
    with mp.workdps(spec.dps + 10):
        t1, t2 = u_negative_a_terms(spec)
        return t1 + t2


def u_negative_a_cancellation(spec: ExpansionSpec) -> float:
    """Decimal digits lost when the two connection terms are added."""
    with mp.workdps(spec.dps + 10):
        t1, t2 = u_negative_a_terms(spec)
        return max(0.0, max(_log10_abs(t1), _log10_abs(t2)) - _log10_abs(t1 + t2))


_DISPATCH = {
    ExpansionFamily.U_BesselSeries: u_bessel_series,
    ExpansionFamily.U_TwoBessel: u_two_bessel,
    ExpansionFamily.U_SlaterOriginal: u_slater_original,
    ExpansionFamily.U_SlaterCorrected: u_slater_corrected,
    ExpansionFamily.F_BesselSeries: f_bessel_series,
    ExpansionFamily.F_TwoBessel: f_two_bessel,
    ExpansionFamily.F_SlaterForm: f_slater_form,
    ExpansionFamily.F_NegativeA: f_negative_a,
    ExpansionFamily.U_NegativeA: u_negative_a,
}


def evaluate(spec: ExpansionSpec):
    return _DISPATCH[spec.family](spec)


# ---------------------------------------------------------------------------
# oracle comparison


@lru_cache(maxsize=512)
def _oracle_cached(kind: str, u, b, z, dps: int):
    with mp.workdps(dps + 20):
        uu, bb, zz = to_mpf(u), to_mpf(b), to_mpf(z)
        x = zz * zz
        if kind == "U":
            return u_ref(a_of_u(uu, bb, dps=dps), bb, x, dps)
        if kind == "Freg":
            return f1f1_ref(a_of_u(uu, bb, dps=dps), bb, x, dps, regularized=True)
        if kind == "F":
            return f1f1_ref(a_of_u(uu, bb, dps=dps), bb, x, dps)
        if kind == "Fneg":
            return f1f1_ref(a_of_u(uu, bb, negative=True, dps=dps), bb, -x, dps)
        if kind == "Uneg":
            return u_ref(a_of_u(uu, bb, negative=True, dps=dps), bb, x, dps)
    raise ValueError(kind)


def _oracle_kind(family: ExpansionFamily) -> str:
    if family is ExpansionFamily.F_BesselSeries:
        return "Freg"
    if family is ExpansionFamily.F_NegativeA:
        return "Fneg"
    if family is ExpansionFamily.U_NegativeA:
        return "Uneg"
    return "F" if family.name.startswith("F_") else "U"


def oracle(spec: ExpansionSpec, dps: int | None = None):
    """Reference value of the function the family approximates (default 2x digits)."""
    return _oracle_cached(_oracle_kind(spec.family), spec.u, spec.b, spec.z, dps or 2 * spec.dps)


@dataclass(frozen=True)
class EvalReport:
    family: ExpansionFamily
    truncation: int
    u: object
    b: object
    z: object
    approx: mpf
    oracle: mpf
    rel_error: mpf

    def __post_init__(self):
        if not self.oracle:
            raise ValueError("oracle value is zero; relative error undefined")

    @property
    def digits_correct(self) -> float:
        if not self.rel_error:
            return math.inf
        return max(0.0, -float(mpmath.log10(self.rel_error)))


def eval_report(spec: ExpansionSpec, oracle_dps: int | None = None) -> EvalReport:
    approx = evaluate(spec)
    ref = oracle(spec, oracle_dps)
    with mp.workdps(spec.dps + 10):
        rel = abs(approx - ref) / abs(ref)
    return EvalReport(spec.family, spec.truncation, spec.u, spec.b, spec.z, approx, ref, rel)
