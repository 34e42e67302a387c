"""Exact rational algebra: polynomials in (b, z) and truncated power series.

Everything here is immutable.  Rational scalars are :class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence, Tuple

from .errors import NonIntegrableLogTerm, NonzeroConstantTerm, OrderMismatch

Rational = Fraction
Exponent = Tuple[int, int]


def _rat(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floats are not exact; pass a Fraction or an int")
    return Fraction(c)


class _Poly:
    """Shared ring machinery for polynomials keyed by (deg_b, deg_z)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | Iterable = ()):
        acc: dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (i, j), c in items:
            c = _rat(c)
            if c:
                key = (int(i), int(j))
                acc[key] = acc.get(key, Fraction(0)) + c
        self._check(acc)
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    def _check(self, terms):
        for i, _ in terms:
            if i < 0:
                raise ValueError("negative power of b")

    # -- construction helpers -------------------------------------------------
    @classmethod
    def const(cls, c=0):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c, deg_b: int = 0, deg_z: int = 0):
        return cls({(deg_b, deg_z): c})

    # -- inspection ----------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def coeff(self, deg_b: int, deg_z: int) -> Fraction:
        return self._terms.get((deg_b, deg_z), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree_b(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    @property
    def degree_z(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    @property
    def min_degree_z(self) -> int:
        return min((j for _, j in self._terms), default=0)

    def sorted_terms(self):
        """Terms in graded-lex order on (b, z), highest total degree first."""
        return sorted(self._terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    # -- ring operations -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, _Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).const(other)
        return NotImplemented

    def _result_type(self, other):
        return LaurentPoly if LaurentPoly in (type(self), type(other)) else BivarPoly

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, Fraction(0)) + v
        return self._result_type(other)(acc)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self)({k: v * other for k, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return self._result_type(other)(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = type(self).const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, _Poly) else other
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus in z -------------------------------------------------------
    def diff_z(self):
        return type(self)({(i, j - 1): c * j for (i, j), c in self._terms.items() if j})

    def shift_z(self, k: int):
        """Multiply by z**k (k may be negative, giving a Laurent polynomial)."""
        cls = LaurentPoly if k < 0 or isinstance(self, LaurentPoly) else BivarPoly
        return cls({(i, j + k): c for (i, j), c in self._terms.items()})

    # -- evaluation ----------------------------------------------------------
    def at_z0(self) -> "BivarPoly":
        """Constant-in-z part, as a polynomial in b."""
        return BivarPoly({(i, 0): c for (i, j), c in self._terms.items() if j == 0})

    def evaluate(self, b, z, convert=None):
        """Numerically evaluate; ``convert`` maps a Fraction into the target number type."""
        if convert is None:
            convert = lambda q: q  # noqa: E731
        total = 0
        bp: dict[int, object] = {0: 1}
        zp: dict[int, object] = {0: 1}
        for (i, j), c in self._terms.items():
            if i not in bp:
                bp[i] = b ** i
            if j not in zp:
                zp[j] = z ** j
            total += convert(c) * bp[i] * zp[j]
        return total

    def __call__(self, b, z):
        return self.evaluate(b, z)

    # -- display -------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = []
            if i:
                mono.append("b" if i == 1 else f"b^{i}")
            if j:
                mono.append("z" if j == 1 else f"z^{j}")
            mag = abs(c)
            if mono:
                body = "*".join(mono) if mag == 1 else f"{mag}*" + "*".join(mono)
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class BivarPoly(_Poly):
    """Exact polynomial in b and z with rational coefficients (no negative powers)."""

    __slots__ = ()

    def _check(self, terms):
        for i, j in terms:
            if i < 0 or j < 0:
                raise ValueError(f"BivarPoly cannot hold b^{i} z^{j}")


class LaurentPoly(_Poly):
    """Polynomial in b, Laurent in z.  Only used transiently inside the Slater recursion."""

    __slots__ = ()

    def to_poly(self) -> BivarPoly:
        if self.min_degree_z < 0:
            raise ValueError(f"negative powers of z survive in {self}")
        return BivarPoly(self._terms)


B = BivarPoly.monomial(1, 1, 0)
Z = BivarPoly.monomial(1, 0, 1)
ONE = BivarPoly.const(1)
ZERO = BivarPoly.const(0)


def poly_arith(p: _Poly, q: _Poly, op: str) -> _Poly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def poly_diff_z(p: _Poly) -> _Poly:
    return p.diff_z()


def poly_integrate_z_from_0(p: _Poly) -> BivarPoly:
    """Antiderivative in z vanishing at z = 0.

    Accepts Laurent input; a surviving z^-1 term would integrate to a logarithm
    and raises :class:`NonIntegrableLogTerm`.
    """
    out = {}
    for (i, j), c in p.terms.items():
        if j == -1:
            raise NonIntegrableLogTerm(f"z^-1 term with coefficient {c}*b^{i} cannot be integrated")
        if j < -1:
            # antiderivative is singular at 0, so the definite integral from 0 diverges
            raise NonIntegrableLogTerm(f"z^{j} term is not integrable at z = 0")
        out[(i, j + 1)] = c / (j + 1)
    return BivarPoly(out)


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2, from sum_{k<=n} C(n+1, k) B_k = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    s = sum(comb(n + 1, k) * bernoulli(k) for k in range(n))
    return -s / (n + 1)


def bernoulli_poly_in_b(n: int, scale: Fraction, shift: Fraction) -> BivarPoly:
    """B_n(x) with x = shift + scale*b, expanded exactly as a polynomial in b."""
    x = BivarPoly({(0, 0): shift, (1, 0): scale})
    out = ZERO
    xp = ONE
    # B_n(x) = sum_k C(n, k) B_{n-k} x^k
    for k in range(n + 1):
        out = out + xp * (comb(n, k) * bernoulli(n - k))
        xp = xp * x
    return out


# ---------------------------------------------------------------------------
# Truncated formal power series with BivarPoly coefficients


class FormalSeries:
    """Power series sum_k coeffs[k] s^k known through s^(order-1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs: Tuple[BivarPoly, ...] = tuple(
            c if isinstance(c, BivarPoly) else BivarPoly.const(c) for c in coeffs
        )

    @classmethod
    def zero(cls, order: int) -> "FormalSeries":
        return cls([ZERO] * order)

    @classmethod
    def one(cls, order: int) -> "FormalSeries":
        return cls([ONE] + [ZERO] * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> BivarPoly:
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _same_order(self, other: "FormalSeries"):
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        self._same_order(other)
        return FormalSeries([x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        self._same_order(other)
        return FormalSeries([x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return FormalSeries([-c for c in self.coeffs])

    def scale(self, p) -> "FormalSeries":
        return FormalSeries([c * p for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FormalSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, FormalSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"FormalSeries([{body}])"


def series_mul(x: FormalSeries, y: FormalSeries) -> FormalSeries:
    x._same_order(y)
    n = x.order
    out = []
    for k in range(n):
        acc = ZERO
        for i in range(k + 1):
            if x.coeffs[i].is_zero() or y.coeffs[k - i].is_zero():
                continue
            acc = acc + x.coeffs[i] * y.coeffs[k - i]
        out.append(acc)
    return FormalSeries(out)


def series_exp(x: FormalSeries) -> FormalSeries:
    """exp of a series with zero constant term, from E' = X' E."""
    if x.order and not x.coeffs[0].is_zero():
        raise NonzeroConstantTerm("series_exp needs a zero constant term")
    n = x.order
    e = [ONE] + [ZERO] * (n - 1)
    for m in range(1, n):
        acc = ZERO
        for k in range(1, m + 1):
            if x.coeffs[k].is_zero():
                continue
            acc = acc + x.coeffs[k] * e[m - k] * k
        e[m] = acc * Fraction(1, m)
    return FormalSeries(e[:n])


def series_log1p(x: FormalSeries) -> FormalSeries:
    """log(1 + x) for x with zero constant term, from L' (1 + x) = x'."""
    if x.order and not x.coeffs[0].is_zero():
        raise NonzeroConstantTerm("series_log1p needs a zero constant term")
    n = x.order
    # m L_m = m x_m - sum_{k=1}^{m-1} k L_k x_{m-k}
    log = [ZERO] * n
    for m in range(1, n):
        acc = x.coeffs[m] * m
        for k in range(1, m):
            acc = acc - log[k] * x.coeffs[m - k] * k
        log[m] = acc * Fraction(1, m)
    return FormalSeries(log)
