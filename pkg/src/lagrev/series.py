"""Truncated formal power series, Lagrange reversion, and the
Moebius-weighted infinite-product representation.

A :class:`TruncSeries` carries complex coefficients c_0..c_N.  Arithmetic
never silently extends the truncation order: binary operations truncate
to the shorter operand.  All values are immutable; every operation is
pure.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    CompositionDomain,
    ConvergenceDomain,
    DegenerateSeries,
    DomainError,
    ZeroAtOrigin,
)

DEFAULT_MAX_ORDER = 64


@dataclass(frozen=True)
class TruncSeries:
    """Power series sum_{n=0}^{N} coeffs[n] * q^n, truncated at order N."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        if not self.coeffs:
            raise DomainError("a TruncSeries needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> complex:
        return self.coeffs[n]

    def truncated(self, order: int) -> "TruncSeries":
        if order >= self.order:
            return self
        return TruncSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        other = _coerce(other, self.order)
        n = min(self.order, other.order)
        return TruncSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)))

    def __sub__(self, other):
        other = _coerce(other, self.order)
        n = min(self.order, other.order)
        return TruncSeries(tuple(self.coeffs[k] - other.coeffs[k] for k in range(n + 1)))

    def __neg__(self):
        return TruncSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return TruncSeries(tuple(c * other for c in self.coeffs))
        n = min(self.order, other.order)
        out = [0j] * (n + 1)
        for j, cj in enumerate(self.coeffs[: n + 1]):
            if cj == 0:
                continue
            for k in range(n + 1 - j):
                out[j + k] += cj * other.coeffs[k]
        return TruncSeries(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return self * (1.0 / other)
        if other.coeffs[0] == 0:
            raise DegenerateSeries("division by a series with zero constant term")
        n = min(self.order, other.order)
        inv0 = 1.0 / other.coeffs[0]
        out = [0j] * (n + 1)
        for k in range(n + 1):
            acc = self.coeffs[k]
            for j in range(1, k + 1):
                acc -= other.coeffs[j] * out[k - j]
            out[k] = acc * inv0
        return TruncSeries(tuple(out))

    def derivative(self) -> "TruncSeries":
        if self.order == 0:
            return TruncSeries((0j,))
        return TruncSeries(tuple((k + 1) * self.coeffs[k + 1] for k in range(self.order)))

    def integral(self) -> "TruncSeries":
        """Term-wise antiderivative with zero constant (order grows by 1)."""
        return TruncSeries((0j,) + tuple(self.coeffs[k] / (k + 1) for k in range(self.order + 1)))


def _coerce(x, order: int) -> TruncSeries:
    if isinstance(x, TruncSeries):
        return x
    return constant(complex(x), order)


def constant(value: complex, order: int) -> TruncSeries:
    return TruncSeries((complex(value),) + (0j,) * order)


def identity(order: int) -> TruncSeries:
    """The series q itself."""
    c = [0j] * (order + 1)
    if order >= 1:
        c[1] = 1.0 + 0j
    return TruncSeries(tuple(c))


def compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """outer(inner(q)) to the common order; inner must vanish at 0."""
    if inner.coeffs[0] != 0:
        raise CompositionDomain("inner series of a composition must have zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncated(n)
    acc = constant(outer.coeffs[n] if n <= outer.order else 0j, n)
    for k in range(n - 1, -1, -1):
        acc = acc * inner + constant(outer.coeffs[k], n)
    return acc


def s_exp(s: TruncSeries) -> TruncSeries:
    n = s.order
    out = [cmath.exp(s.coeffs[0])] + [0j] * n
    for k in range(1, n + 1):
        acc = 0j
        for j in range(1, k + 1):
            acc += j * s.coeffs[j] * out[k - j]
        out[k] = acc / k
    return TruncSeries(tuple(out))


def s_log(s: TruncSeries) -> TruncSeries:
    if s.coeffs[0] == 0:
        raise DegenerateSeries("log of a series with zero constant term")
    n = s.order
    out = [cmath.log(s.coeffs[0])] + [0j] * n
    inv0 = 1.0 / s.coeffs[0]
    for k in range(1, n + 1):
        acc = k * s.coeffs[k]
        for j in range(1, k):
            acc -= j * out[j] * s.coeffs[k - j]
        out[k] = acc * inv0 / k
    return TruncSeries(tuple(out))


def s_pow(s: TruncSeries, k) -> TruncSeries:
    """s**k for integer or rational/real k.

    Non-negative integer exponents work for any series; everything else
    requires a nonzero constant term.
    """
    if isinstance(k, Fraction) and k.denominator == 1:
        k = int(k)
    if isinstance(k, int) and k >= 0:
        acc = constant(1.0, s.order)
        for _ in range(k):
            acc = acc * s
        return acc
    if s.coeffs[0] == 0:
        raise DegenerateSeries("fractional or negative power of a series vanishing at 0")
    return s_exp(s_log(s) * complex(float(k) if isinstance(k, Fraction) else k))


def s_sin(s: TruncSeries) -> TruncSeries:
    e_plus = s_exp(s * 1j)
    e_minus = s_exp(s * -1j)
    return (e_plus - e_minus) * (-0.5j)


def s_cos(s: TruncSeries) -> TruncSeries:
    e_plus = s_exp(s * 1j)
    e_minus = s_exp(s * -1j)
    return (e_plus + e_minus) * 0.5


def lagrange_revert(f: TruncSeries, order: int) -> TruncSeries:
    """Series w(q) with w(q)/f(w(q)) = q + O(q^{order+1}).

    Solved by Newton iteration on the series equation w = q*f(w); the
    attained order doubles per step.  f must not vanish at the origin.
    """
    if f.coeffs[0] == 0:
        raise ZeroAtOrigin("reversion requires f(0) != 0")
    if order < 1:
        raise DomainError("reversion order must be >= 1")
    fN = TruncSeries(f.coeffs[: order + 1] + (0j,) * max(0, order - f.order))
    fprime = TruncSeries(fN.derivative().coeffs + (0j,))
    w = TruncSeries((0j, fN.coeffs[0]) + (0j,) * (order - 1))
    for _ in range(order.bit_length() + 2):
        f_at_w = compose(fN, w)
        residual = w - _shift(f_at_w)
        if all(c == 0 for c in residual.coeffs):
            break
        slope = constant(1.0, order) - _shift(compose(fprime.truncated(order), w))
        w = w - residual / slope
    return w


def _shift(s: TruncSeries) -> TruncSeries:
    """Multiply by q, keeping the truncation order."""
    return TruncSeries((0j,) + s.coeffs[:-1]) if s.order >= 1 else TruncSeries((0j,))


def defining_residual(f: TruncSeries, w: TruncSeries) -> float:
    """max |coefficient| of w(q)/f(w(q)) - q through the common order.

    In double precision the attainable residual is floored near
    eps * max|c_n|, which for fast-growing reversions (f = e^A, N = 24)
    is around 1e-8; use the exact-rational path below when the input
    coefficients are real and a certificate at the 1e-12 level is needed.
    """
    ratio = w / compose(f.truncated(w.order), w)
    diff = ratio - identity(w.order)
    return max(abs(c) for c in diff.coeffs)


def _pmul(a: list, b: list, n: int) -> list:
    out = [Fraction(0)] * (n + 1)
    for j, cj in enumerate(a[: n + 1]):
        if cj == 0:
            continue
        for k in range(min(len(b), n + 1 - j)):
            out[j + k] += cj * b[k]
    return out


def _pdiv(a: list, b: list, n: int) -> list:
    if b[0] == 0:
        raise DegenerateSeries("division by a series with zero constant term")
    out = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        acc = a[k] if k < len(a) else Fraction(0)
        for j in range(1, min(k, len(b) - 1) + 1):
            acc -= b[j] * out[k - j]
        out[k] = acc / b[0]
    return out


def _pcompose(outer: list, inner: list, n: int) -> list:
    if inner[0] != 0:
        raise CompositionDomain("inner series of a composition must have zero constant term")
    acc = [Fraction(0)] * (n + 1)
    for k in range(len(outer) - 1, -1, -1):
        acc = _pmul(acc, inner, n)
        acc[0] += outer[k]
    return acc


def _exact_coeffs(s, order: int) -> list:
    coeffs = s.coeffs if isinstance(s, TruncSeries) else tuple(s)
    out = []
    for c in coeffs[: order + 1]:
        if isinstance(c, (int, Fraction)):
            out.append(Fraction(c))
            continue
        c = complex(c)
        if c.imag != 0:
            raise DomainError("exact reversion requires real coefficients")
        out.append(Fraction(c.real))
    out += [Fraction(0)] * (order + 1 - len(out))
    return out


def revert_exact(f, order: int) -> list:
    """Exact-rational reversion of w/f(w) = q.

    f may be a TruncSeries or coefficient sequence with real entries
    (floats are dyadic, hence exact).  Returns Fraction coefficients
    c_0..c_order of w; w/f(w) - q vanishes identically through the order.
    """
    fx = _exact_coeffs(f, order)
    if fx[0] == 0:
        raise ZeroAtOrigin("reversion requires f(0) != 0")
    fprime = [k * fx[k] for k in range(1, len(fx))] + [Fraction(0)]
    w = [Fraction(0), fx[0]] + [Fraction(0)] * (order - 1)
    for _ in range(order.bit_length() + 2):
        f_at_w = _pcompose(fx, w, order)
        residual = [w[k] - (f_at_w[k - 1] if k else Fraction(0)) for k in range(order + 1)]
        if all(c == 0 for c in residual):
            break
        slope = [Fraction(1)] + [-c for c in _pcompose(fprime, w, order)[:order]]
        w = [w[k] - c for k, c in enumerate(_pdiv(residual, slope, order))]
    return w


def defining_residual_exact(f, w: list) -> Fraction:
    """max |coefficient| of w/f(w) - q, all arithmetic exact."""
    order = len(w) - 1
    fx = _exact_coeffs(f, order)
    ratio = _pdiv(w, _pcompose(fx, w, order), order)
    ratio[1] -= 1
    return max(abs(c) for c in ratio)


def eval_series(s: TruncSeries, q: complex) -> tuple[complex, float]:
    """Horner evaluation plus a crude geometric tail estimate."""
    acc = 0j
    for c in reversed(s.coeffs):
        acc = acc * q + c
    aq = abs(q)
    tail = abs(s.coeffs[-1]) * aq ** (s.order + 1) / (1 - aq) if aq < 1 else float("inf")
    return acc, tail


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class ProductExponents:
    """Exponents e_1..e_N of the product form prod (1-q^n)^{-e_n}."""

    e: tuple[complex, ...]

    def __getitem__(self, n: int) -> complex:
        """1-based access: self[n] is e_n."""
        if not 1 <= n <= len(self.e):
            raise DomainError(f"exponent index {n} out of range")
        return self.e[n - 1]


def product_exponents(a: Sequence[complex]) -> ProductExponents:
    """e_n = (1/n) sum_{d|n} mu(n/d) a_d from the 1-indexed list a."""
    a = tuple(complex(x) for x in a)
    e = []
    for n in range(1, len(a) + 1):
        acc = 0j
        for d in _divisors(n):
            acc += mobius(n // d) * a[d - 1]
        e.append(acc / n)
    return ProductExponents(tuple(e))


def invert_exponents(e: ProductExponents) -> tuple[complex, ...]:
    """Recover a_n = sum_{d|n} d*e_d (Moebius inversion round trip)."""
    out = []
    for n in range(1, len(e.e) + 1):
        out.append(sum(d * e.e[d - 1] for d in _divisors(n)))
    return tuple(out)


def eval_product(e: ProductExponents, q: complex) -> complex:
    """prod_{n<=N} (1-q^n)^{-e_n} via the principal logarithm."""
    if abs(q) >= 1:
        raise ConvergenceDomain("product form requires |q| < 1")
    acc = 0j
    qn = 1.0 + 0j
    for en in e.e:
        qn *= q
        if en == 0:
            continue
        if abs(qn) < 1e-8:
            # log(1 - x) to full absolute precision: 1 - x rounds to 1 for
            # sub-eps x, and the exponents can be large enough that the
            # lost e_n * q^n mass is not negligible
            acc += en * (qn + qn * qn / 2 + qn * qn * qn / 3)
        else:
            acc -= en * cmath.log(1 - qn)
    return cmath.exp(acc)
