"""Scalar special functions: nome maps, null Jacobi thetas, singular
modulus, Dedekind eta, gamma, incomplete beta, Gauss 2F1, Appell F1,
Lambert W, and the Rogers-Ramanujan continued fraction.

All branch choices are principal unless an operation exposes an explicit
branch parameter.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    BranchError,
    ConvergenceDomain,
    DomainError,
    NoConvergence,
    PoleError,
)
from .quadrature import quad_oracle

_TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class UpperHalfPoint:
    """Modular variable z with Im(z) > 0 strictly."""

    z: complex

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        if not self.z.imag > 0:
            raise DomainError("UpperHalfPoint requires Im(z) > 0")


@dataclass(frozen=True)
class Nome:
    q: complex

    def __post_init__(self):
        object.__setattr__(self, "q", complex(self.q))
        if not abs(self.q) < 1:
            raise DomainError("Nome requires |q| < 1")


def _as_z(z) -> complex:
    if isinstance(z, UpperHalfPoint):
        return z.z
    z = complex(z)
    if not z.imag > 0:
        raise DomainError("expected a point of the upper half plane")
    return z


def _as_q(q) -> complex:
    return q.q if isinstance(q, Nome) else complex(q)


def e_map(z) -> Nome:
    """The nome e(z) = exp(2 pi i z)."""
    return Nome(cmath.exp(_TWO_PI_I * _as_z(z)))


def _qpow(q: complex, a: float) -> complex:
    """Principal power q**a with q**a = 0 at q = 0 for a > 0."""
    if q == 0:
        return 0j
    return cmath.exp(a * cmath.log(q))


def theta2(q) -> complex:
    """Sum over all integers n of q^{(n+1/2)^2}."""
    q = _as_q(q)
    if q == 0:
        return 0j
    total = 0j
    n = 0
    while True:
        term = 2 * _qpow(q, (n + 0.5) ** 2)
        total += term
        if n > 1 and abs(term) < 1e-17 * max(1.0, abs(total)):
            return total
        n += 1
        if n > 2000:
            raise NoConvergence("theta2 sum did not converge; |q| too close to 1")


def theta3(q) -> complex:
    """Sum over all integers n of q^{n^2}."""
    q = _as_q(q)
    total = 1.0 + 0j
    n = 1
    while True:
        term = 2 * _qpow(q, n * n)
        total += term
        if abs(term) < 1e-17 * max(1.0, abs(total)):
            return total
        n += 1
        if n > 2000:
            raise NoConvergence("theta3 sum did not converge; |q| too close to 1")


def mstar(z) -> complex:
    """Elliptic singular modulus (theta2/theta3)^2 at the nome e^{i pi z}.

    Note the half-nome convention: e^{i pi z}, not e^{2 pi i z}.
    """
    z = _as_z(z)
    q = cmath.exp(1j * math.pi * z)
    return (theta2(q) / theta3(q)) ** 2


def k_r(r: float) -> float:
    """Singular modulus k_r at the real nome e^{-pi sqrt(r)}."""
    if not r > 0:
        raise DomainError("k_r requires r > 0")
    q = math.exp(-math.pi * math.sqrt(r))
    return ((theta2(q) / theta3(q)) ** 2).real


def eta(z) -> complex:
    """Dedekind eta q^{1/24} prod (1-q^n), q = e(z); q^{1/24} is taken
    as exp(2 pi i z / 24), which needs no branch choice."""
    z = _as_z(z)
    q = cmath.exp(_TWO_PI_I * z)
    aq = abs(q)
    prod = 1.0 + 0j
    qn = 1.0 + 0j
    n = 0
    while aq ** (n + 1) >= 1e-18:
        n += 1
        qn *= q
        prod *= 1 - qn
    return cmath.exp(_TWO_PI_I * z / 24) * prod


# Lanczos approximation, g = 7, 9 terms; used for complex arguments.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_fn(x) -> complex:
    """Gamma function; real arguments go through math.gamma, complex ones
    through reflection plus the shifted Lanczos series."""
    x = complex(x)
    if x.imag == 0:
        xr = x.real
        if xr <= 0 and xr == int(xr):
            raise PoleError(f"gamma pole at {int(xr)}")
        return complex(math.gamma(xr))
    if x.real < 0.5:
        # Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return math.pi / (cmath.sin(math.pi * x) * gamma_fn(1 - x))
    x -= 1
    acc = _LANCZOS[0]
    for i, c in enumerate(_LANCZOS[1:], start=1):
        acc += c / (x + i)
    t = x + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (x + 0.5) * cmath.exp(-t) * acc


def hyp2f1(a: float, b: float, c: float, x: complex) -> complex:
    """Gauss 2F1 by its Maclaurin series; requires |x| < 1."""
    if c <= 0 and c == int(c):
        raise DomainError("2F1 undefined at non-positive integer c")
    x = complex(x)
    if abs(x) >= 1:
        raise ConvergenceDomain("2F1 series requires |x| < 1")
    term = 1.0 + 0j
    total = term
    for n in range(100000):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x
        total += term
        if abs(term) < 1e-17 * abs(total):
            return total
    raise NoConvergence("2F1 series stalled")


def inc_beta(x, a: float, b: float) -> complex:
    """Incomplete beta B0(x; a, b) = int_0^x t^{a-1} (1-t)^{b-1} dt.

    For |x| <= 0.8 this sums (x^a/a) 2F1(a, 1-b; a+1; x); beyond that it
    falls back to direct quadrature along the straight segment so that the
    complete value at x = 1 stays independent of the gamma closed form.
    """
    if a <= 0:
        raise DomainError("inc_beta requires a > 0")
    x = complex(x)
    if x == 0:
        return 0j
    if x.imag == 0 and x.real > 1:
        raise DomainError("inc_beta argument on the cut [1, inf)")
    if abs(x) <= 0.8:
        return _qpow(x, a) / a * hyp2f1(a, 1 - b, a + 1, x)

    def integrand(t: complex) -> complex:
        return _qpow(t, a - 1) * _qpow(1 - t, b - 1)

    sing_right = max(0.0, 1 - b) if x == 1 else 0.0

    def from_left(d: float) -> complex:
        t = x * d
        return _qpow(t, a - 1) * _qpow(1 - t, b - 1)

    def from_right(d: float) -> complex:
        # only used at x == 1, where the distance to 1 is exactly d
        return _qpow(1 - d, a - 1) * _qpow(complex(d), b - 1)

    value, _err = quad_oracle(
        integrand,
        0j,
        x,
        tol=1e-14,
        sing_left=max(0.0, 1 - a),
        sing_right=sing_right,
        from_left=from_left,
        from_right=from_right if sing_right > 0.0 else None,
    )
    return value


def appell_f1(a: float, b1: float, b2: float, c: float, x: complex, y: complex) -> complex:
    """First Appell function, double series over the unit polydisc."""
    x, y = complex(x), complex(y)
    if abs(x) >= 1 or abs(y) >= 1:
        raise ConvergenceDomain("Appell F1 series requires |x| < 1 and |y| < 1")
    total = 0j
    # row m: T(m, 0) = (a)_m (b1)_m / ((c)_m m!) x^m, then recurse in n.
    row_head = 1.0 + 0j
    for m in range(100000):
        term = row_head
        row_sum = term
        for n in range(100000):
            term *= (a + m + n) * (b2 + n) / ((c + m + n) * (n + 1)) * y
            row_sum += term
            if abs(term) < 1e-18 * max(1.0, abs(total) + abs(row_sum)):
                break
        total += row_sum
        if abs(row_sum) < 1e-16 * max(1.0, abs(total)) and m > 2:
            return total
        row_head *= (a + m) * (b1 + m) / ((c + m) * (m + 1)) * x
    raise NoConvergence("Appell F1 series stalled")


_BRANCH_POINT = -1.0 / math.e


def lambert_w(x, branch: int = 0) -> complex:
    """Lambert W via Halley iteration; branches 0 and -1."""
    if branch not in (0, -1):
        raise BranchError("only branches 0 and -1 are supported")
    x = complex(x)
    if branch == -1:
        if x.imag != 0 or not (_BRANCH_POINT < x.real < 0):
            raise BranchError("branch -1 requires real x in (-1/e, 0)")
    if x == 0:
        if branch == -1:
            raise BranchError("W_{-1}(0) does not exist")
        return 0j
    if x.imag == 0 and x.real == _BRANCH_POINT:
        return complex(-1.0)

    w = _lambert_seed(x, branch)
    for _ in range(100):
        ew = cmath.exp(w)
        f = w * ew - x
        if abs(f) <= 1e-14 * max(abs(x), 1e-290):
            return w
        wp1 = w + 1
        w = w - f / (ew * wp1 - (w + 2) * f / (2 * wp1))
    raise NoConvergence("Lambert W Halley iteration stalled")


def _lambert_seed(x: complex, branch: int) -> complex:
    if branch == 0:
        if abs(x) < 0.25:
            return x * (1 - x.real)
        if x.imag == 0 and x.real < 0:
            p = math.sqrt(2 * (math.e * x.real + 1))
            return -1 + p - p * p / 3
        lx = cmath.log(x)
        return lx - cmath.log(lx) if abs(x) > math.e else lx
    xr = x.real
    if xr > -0.1:
        lx = math.log(-xr)
        return complex(lx - math.log(-lx))
    p = math.sqrt(2 * (math.e * xr + 1))
    return complex(-1 - p - p * p / 3)


def rogers_ramanujan(q) -> complex:
    """R(q) = q^{1/5} prod (1-q^n)^{chi(n)}, chi = +1 for n = +-1 (mod 5),
    -1 for n = +-2 (mod 5), 0 otherwise."""
    q = _as_q(q)
    if abs(q) >= 1:
        raise DomainError("Rogers-Ramanujan product requires |q| < 1")
    if q == 0:
        return 0j
    aq = abs(q)
    prod = 1.0 + 0j
    qn = 1.0 + 0j
    n = 0
    while aq ** (n + 1) >= 1e-18:
        n += 1
        qn *= q
        r5 = n % 5
        if r5 in (1, 4):
            prod *= 1 - qn
        elif r5 in (2, 3):
            prod /= 1 - qn
    return _qpow(q, 0.2) * prod
