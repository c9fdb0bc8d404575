from __future__ import annotations

import cmath
import math

import pytest

from lagrev import specfun as sf
from lagrev.errors import DomainError


class TestTheta:
    def test_theta3_small_nome(self):
        # 1 + 2q + 2q^4 + 2q^9 + ...
        assert sf.theta3(0.1).real == pytest.approx(1.200200002, abs=1e-9)

    def test_theta3_lemniscatic(self):
        q = math.exp(-math.pi)
        closed = math.pi**0.25 / sf.gamma_fn(0.75).real
        assert abs(sf.theta3(q) - closed) < 1e-12

    def test_jacobi_quartic_identity(self):
        for q in (math.exp(-math.pi), 0.05, 0.2):
            t2, t3, t4 = sf.theta2(q), sf.theta3(q), sf.theta3(-q)
            assert abs(t3**4 - t2**4 - t4**4) < 1e-12


class TestModulus:
    def test_singular_values(self):
        assert sf.k_r(1.0) == pytest.approx(2**-0.5, abs=1e-12)
        assert sf.k_r(4.0) == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-12)

    def test_complementary_relation(self):
        for r in (2.0, 3.0, 5.0):
            assert sf.k_r(r) ** 2 + sf.k_r(1 / r) ** 2 == pytest.approx(1.0, abs=1e-12)

    def test_mstar_matches_k_r_on_the_imaginary_axis(self):
        for r in (1.0, 2.0, 4.0):
            assert abs(sf.mstar(1j * math.sqrt(r)) - sf.k_r(r)) < 1e-12


class TestEta:
    def test_value_at_i(self):
        closed = sf.gamma_fn(0.25).real / (2 * math.pi**0.75)
        assert abs(sf.eta(1j) - closed) < 1e-12

    def test_value_at_2i(self):
        closed = sf.gamma_fn(0.25).real / (2 ** (11 / 8) * math.pi**0.75)
        assert abs(sf.eta(2j) - closed) < 1e-12


class TestGamma:
    def test_classics(self):
        assert abs(sf.gamma_fn(0.5) - math.sqrt(math.pi)) < 1e-13
        assert abs(sf.gamma_fn(5.0) - 24.0) < 1e-10

    def test_reflection(self):
        x = 0.3
        assert abs(sf.gamma_fn(x) * sf.gamma_fn(1 - x) - math.pi / math.sin(math.pi * x)) < 1e-12


class TestHypergeometric:
    def test_log_case(self):
        for z in (0.3, -0.4):
            assert abs(sf.hyp2f1(1, 1, 2, z) + cmath.log(1 - z) / z) < 1e-13

    def test_euler_transformation(self):
        a, b, c, x = 1 / 6, 1 / 3, 7 / 6, 0.4
        lhs = sf.hyp2f1(a, b, c, x)
        rhs = (1 - x) ** (c - a - b) * sf.hyp2f1(c - a, c - b, c, x)
        assert abs(lhs - rhs) < 1e-13

    def test_appell_reductions(self):
        a, b1, b2, c, x = 0.25, 0.5, 0.75, 1.5, 0.3
        assert abs(sf.appell_f1(a, b1, b2, c, x, 0.0) - sf.hyp2f1(a, b1, c, x)) < 1e-13
        assert abs(sf.appell_f1(a, b1, b2, c, x, x) - sf.hyp2f1(a, b1 + b2, c, x)) < 1e-13


class TestIncompleteBeta:
    def test_complete_values(self):
        for a, b in ((1 / 6, 2 / 3), (0.5, 0.5), (2.0, 3.0)):
            closed = sf.gamma_fn(a) * sf.gamma_fn(b) / sf.gamma_fn(a + b)
            assert abs(sf.inc_beta(1.0, a, b) - closed) < 1e-10

    def test_arcsine_half(self):
        assert abs(sf.inc_beta(0.5, 0.5, 0.5) - math.pi / 2) < 1e-12

    def test_complementary_split(self):
        a, b = 1 / 6, 2 / 3
        total = sf.inc_beta(1.0, a, b)
        assert abs(sf.inc_beta(0.3, a, b) + sf.inc_beta(0.7, b, a) - total) < 1e-10


class TestLambertW:
    def test_principal_anchor(self):
        assert abs(sf.lambert_w(math.e) - 1.0) < 1e-13

    def test_defining_equation(self):
        for x in (0.5, -0.2, 3.0, 1 + 1j):
            w = sf.lambert_w(x)
            assert abs(w * cmath.exp(w) - x) < 1e-12

    def test_lower_branch(self):
        w = sf.lambert_w(-0.1, branch=-1)
        assert w.real < -1.0
        assert abs(w * cmath.exp(w) + 0.1) < 1e-12


class TestRogersRamanujan:
    def test_classical_value(self):
        phi = (1 + math.sqrt(5)) / 2
        closed = math.sqrt(phi * math.sqrt(5)) - phi
        assert abs(sf.rogers_ramanujan(math.exp(-2 * math.pi)) - closed) < 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            sf.rogers_ramanujan(1.5)
