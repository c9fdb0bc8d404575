"""The real-nome pipeline q = exp(-pi sqrt(A)).

Everything here is built on one chain: h_i(A) = c + pi^-2 sum a_n q^n/n^2
+ (sqrt(A)/pi) sum a_n q^n/n, its numeric inverse h, and
L(x) = w(exp(-pi sqrt(h(x)))).  Within that chain L'(x) = pi/sqrt(h(x))
holds exactly, which the closed-form integral identities below exploit.
All free additive constants are fitted, never derived.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    AccuracyLoss,
    DomainError,
    NoBracket,
    NonMonotone,
    PoleError,
)
from .inversion import F1_forward, FuncSpec, build_context
from .quadint import QuadraticPowerIntegral, U_antideriv, beta_endpoint
from .quadrature import quad_oracle
from .series import TruncSeries, eval_series
from .specfun import inc_beta, k_r, rogers_ramanujan


@dataclass(frozen=True)
class RealPoint:
    """Positive abscissa A with its real nome q = exp(-pi sqrt(A))."""

    A: float

    def __post_init__(self):
        object.__setattr__(self, "A", float(self.A))
        if not self.A > 0:
            raise DomainError("RealPoint requires A > 0")

    @property
    def q(self) -> float:
        return math.exp(-math.pi * math.sqrt(self.A))


@dataclass(frozen=True)
class RealConstants:
    """Fitted additive constants; the paper never pins their values."""

    c: float = 0.0
    cprime: float = 0.0
    c1: float = 0.0
    l1: float = 0.0
    l2: float = 0.0


@dataclass(frozen=True)
class RealContext:
    f: FuncSpec
    w_series: TruncSeries
    a: tuple[complex, ...]
    order: int
    constants: RealConstants = field(default_factory=RealConstants)


def build_real_context(
    f: FuncSpec, order: int, constants: RealConstants | None = None
) -> RealContext:
    ctx = build_context(f, order)
    return RealContext(
        f=f,
        w_series=ctx.w_series,
        a=ctx.a,
        order=order,
        constants=constants or RealConstants(),
    )


def _as_real(x) -> RealPoint:
    return x if isinstance(x, RealPoint) else RealPoint(float(x))


def hi_prime(ctx: RealContext, A) -> float:
    """h_i'(A) = -(1/2) q w'(q) at q = exp(-pi sqrt(A))."""
    q = _as_real(A).q
    value, tail = eval_series(ctx.w_series.derivative(), q)
    if tail > 1e-12:
        raise AccuracyLoss(f"series tail estimate {tail:.3e} exceeds 1e-12")
    return -0.5 * q * value.real


def hi_of(ctx: RealContext, A) -> float:
    """h_i(A) = c + pi^-2 sum a_n q^n/n^2 + (sqrt(A)/pi) sum a_n q^n/n."""
    pt = _as_real(A)
    q = pt.q
    s2 = 0.0
    s1 = 0.0
    qn = 1.0
    for n, a in enumerate(ctx.a, start=1):
        qn *= q
        s2 += a.real * qn / (n * n)
        s1 += a.real * qn / n
    return ctx.constants.c + s2 / math.pi**2 + math.sqrt(pt.A) / math.pi * s1


def hi_inverse(
    ctx: RealContext, target: float, lo: float = 0.05, hi: float = 60.0
) -> float:
    """Solve h_i(t) = target on [lo, hi]; h_i is strictly decreasing."""
    flo = hi_of(ctx, lo)
    fhi = hi_of(ctx, hi)
    if flo <= fhi:
        raise NonMonotone("h_i is not decreasing on the requested bracket")
    if not (fhi <= target <= flo):
        raise NoBracket(
            f"target {target:.6g} outside the h_i range [{fhi:.6g}, {flo:.6g}]"
        )
    a, b = lo, hi
    for _ in range(60):
        mid = 0.5 * (a + b)
        if hi_of(ctx, mid) > target:
            a = mid
        else:
            b = mid
    t = 0.5 * (a + b)
    for _ in range(6):
        step = (hi_of(ctx, t) - target) / hi_prime(ctx, t)
        t -= step
        if not lo <= t <= hi:
            t = min(max(t, lo), hi)
        if abs(step) < 1e-15 * max(1.0, t):
            break
    return t


def L_inverse_deriv(f: FuncSpec, A: float) -> float:
    """L_i'(A) = -pi^-2 log(A / f(A))."""
    if not A > 0:
        raise DomainError("L_i' needs A > 0")
    fA = f.evaluator(complex(A)).real
    if fA == 0:
        raise PoleError("f vanishes; L_i' undefined")
    ratio = A / fA
    if ratio <= 0:
        raise DomainError("A/f(A) must be positive for the real logarithm")
    return -math.log(ratio) / math.pi**2


def L_inverse_of(f: FuncSpec, A: float, base: float = 1.0, c: float = 0.0) -> float:
    """L_i(A) = c - pi^-2 int_base^A log(t/f(t)) dt by quadrature."""
    if not (A > 0 and base > 0):
        raise DomainError("L_i needs positive abscissae")
    value, _err = quad_oracle(
        lambda t: complex(L_inverse_deriv(f, t.real)), complex(base), complex(A)
    )
    return c + value.real


def L_of(ctx: RealContext, x: float, lo: float = 0.05, hi: float = 60.0) -> float:
    """L(x) = w(exp(-pi sqrt(h(x)))) with h the inverse of h_i."""
    t = hi_inverse(ctx, x, lo, hi)
    q = math.exp(-math.pi * math.sqrt(t))
    value, _tail = eval_series(ctx.w_series, q)
    return value.real


def _richardson_d1(fn, x: float, h: float) -> float:
    d_h = (fn(x + h) - fn(x - h)) / (2.0 * h)
    d_h2 = (fn(x + h / 2) - fn(x - h / 2)) / h
    return (4.0 * d_h2 - d_h) / 3.0


def S_residual(
    ctx: RealContext, x: float, lo: float = 0.05, hi: float = 60.0
) -> float:
    """Residual of -L''/L'^3 + pi^-2/L = (pi^-2/2) P0* at the point x.

    The left side uses finite differences of L; the right side recovers
    P0* = h' + 2/L from the pole-plus-analytic decomposition, with
    h'(x) = 1/h_i'(h(x)).
    """
    L = lambda t: L_of(ctx, t, lo, hi)  # noqa: E731
    h1 = 1e-6 * max(1.0, abs(x))
    lp = _richardson_d1(L, x, h1)
    h2 = 1e-4 * max(1.0, abs(x))
    lx0 = L(x)
    d2 = lambda s: (L(x + s) - 2.0 * lx0 + L(x - s)) / (s * s)  # noqa: E731
    lpp = (4.0 * d2(h2 / 2) - d2(h2)) / 3.0
    lx = L(x)
    left = -lpp / lp**3 + 1.0 / (math.pi**2 * lx)
    hprime = 1.0 / hi_prime(ctx, hi_inverse(ctx, x, lo, hi))
    right = 0.5 / math.pi**2 * (hprime + 2.0 / lx)
    return left - right


def thm19_value(
    ctx: RealContext,
    q: QuadraticPowerIntegral,
    r1: float,
    r2: float,
    lo: float = 0.05,
    hi: float = 60.0,
) -> float:
    """R2 - R1 where h_i(R_j) equals the closed-form level of r_j.

    The levels prefactor * Gamma(1-m)^2/Gamma(2-2m) / (r+1) must fall in
    the (narrow) range of h_i, else NoBracket: for f = 1 the range has
    width 1/pi^2, so small r are genuinely unreachable.
    """
    if r1 == r2:
        return 0.0
    levels = []
    for r in (r1, r2):
        target = (q.prefactor * q.gamma_factor).real / (r + 1.0)
        levels.append(hi_inverse(ctx, target, lo, hi))
    return levels[1] - levels[0]


def thm19_oracle(
    ctx: RealContext,
    q: QuadraticPowerIntegral,
    r1: float,
    r2: float,
    lo: float = 0.05,
    hi: float = 60.0,
    tol: float = 1e-10,
) -> float:
    """Quadrature of f1(t) (quadratic)^-m between the beta endpoints,
    with f1(t) = 1/h_i'(h(U(t))): the weight for which the closed form
    of thm19_value holds."""
    a1 = beta_endpoint(q, r1)
    a2 = beta_endpoint(q, r2)

    def integrand(t: complex) -> complex:
        u = U_antideriv(q, t).real
        s = hi_inverse(ctx, u, lo, hi)
        return complex(q.evaluate(t).real / hi_prime(ctx, s))

    value, _err = quad_oracle(integrand, a1, a2, tol=tol)
    return value.real


def thm20_residual(ctx: RealContext, h_map, A: float, l1: float = 0.0) -> float:
    """|w(exp(-pi sqrt(h(A) - l1))) - L(A)|."""
    shifted = h_map(A) - l1
    if shifted <= 0:
        raise DomainError("h(A) - l1 must be positive")
    qv = math.exp(-math.pi * math.sqrt(shifted))
    w, _tail = eval_series(ctx.w_series, qv)
    return abs(w.real - L_of(ctx, A))


def thm20_fit(
    ctx: RealContext, h_map, anchors, span: float = 0.5
) -> tuple[float, int]:
    """Fit the shift l1 (and report the sign convention) by scanning a
    grid and polishing with golden-section on the summed square residual."""

    def cost(l1: float) -> float:
        total = 0.0
        for a in anchors:
            try:
                total += thm20_residual(ctx, h_map, a, l1) ** 2
            except DomainError:
                total += 1e6
        return total

    grid = [span * (k / 40.0 - 0.5) * 2.0 for k in range(41)]
    best = min(grid, key=cost)
    a, b = best - span / 20.0, best + span / 20.0
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = b - phi * (b - a)
    x2 = a + phi * (b - a)
    f1v, f2v = cost(x1), cost(x2)
    for _ in range(60):
        if f1v < f2v:
            b, x2, f2v = x2, x1, f1v
            x1 = b - phi * (b - a)
            f1v = cost(x1)
        else:
            a, x1, f1v = x1, x2, f2v
            x2 = a + phi * (b - a)
            f2v = cost(x2)
    return 0.5 * (a + b), 1


_CBRT4 = 2.0 ** (2.0 / 3.0)


def modular_abscissa(r: float) -> float:
    """2^(-2/3) B0(k_r^2; 1/6, 2/3): the abscissa paired with nome r."""
    if not r > 0:
        raise DomainError("r must be positive")
    return inc_beta(k_r(r) ** 2, 1.0 / 6.0, 2.0 / 3.0).real / _CBRT4


def f1_real_cross(
    A: float, r_lo: float = 0.05, r_hi: float = 50.0
) -> tuple[float, float]:
    """Two independent values that an identity says coincide:
    F1(A) through the Appell/Newton path, and R(exp(-pi sqrt(m0(A))))
    through the modular path, m0 inverting modular_abscissa."""
    g_lo = modular_abscissa(r_lo)
    g_hi = modular_abscissa(r_hi)
    if not (g_hi <= A <= g_lo):
        raise NoBracket(
            f"A={A:.6g} outside the abscissa range [{g_hi:.6g}, {g_lo:.6g}]"
        )
    a, b = r_lo, r_hi
    for _ in range(80):
        mid = 0.5 * (a + b)
        if modular_abscissa(mid) > A:
            a = mid
        else:
            b = mid
    r = 0.5 * (a + b)
    modular = rogers_ramanujan(math.exp(-math.pi * math.sqrt(r))).real
    direct = F1_forward(A).real
    return direct, modular
