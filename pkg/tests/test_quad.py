import math

import numpy as np
import pytest

from sixfold.core import DomainError, ParameterSet, UnsupportedRegimeError, derive_exponents
from sixfold.quad import (
    Integrand6D,
    QmcSpec,
    gauss_laguerre,
    gauss_legendre,
    integrate_6d_brute,
    integrate_6d_qmc,
    integrate_6d_tensor,
    log_axis_rule,
    sobol_points,
    tanh_sinh,
)
from sixfold.specialfn import digamma, gamma, polygamma

REFERENCE = ParameterSet(k=0, a=1.0, m=0.5, u=0.0, v=1.0, mu=0.0, nu=1.0)

# First points of the 6-dimensional Sobol sequence (cross-checked against an
# independent generator during development).
SOBOL_FIRST_8 = np.array(
    [
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.5, 0.5, 0.5, 0.5, 0.5, 0.5],
        [0.75, 0.25, 0.25, 0.25, 0.75, 0.75],
        [0.25, 0.75, 0.75, 0.75, 0.25, 0.25],
        [0.375, 0.375, 0.625, 0.875, 0.375, 0.125],
        [0.875, 0.875, 0.125, 0.375, 0.875, 0.625],
        [0.625, 0.125, 0.875, 0.625, 0.625, 0.875],
        [0.125, 0.625, 0.375, 0.125, 0.125, 0.375],
    ]
)


def _ref_rules(level=5, n=32):
    exq = derive_exponents(REFERENCE)
    ts = tanh_sinh(level)
    return (ts, ts) + tuple(
        log_axis_rule(b.real, n=n, level=level)
        for b in (exq.beta_p, exq.beta_q, exq.beta_t, exq.beta_z)
    )


def test_gauss_legendre_odd_function():
    rule = gauss_legendre(2)
    assert abs(np.sum(rule.weights * rule.nodes**3)) < 1e-15


def test_gauss_legendre_polynomial_exactness():
    rule = gauss_legendre(6)
    for j in range(0, 12):
        got = np.sum(rule.weights * rule.nodes**j)
        expect = 2.0 / (j + 1.0) if j % 2 == 0 else 0.0
        assert abs(got - expect) < 1e-13


def test_gauss_laguerre_unit_mass():
    rule = gauss_laguerre(5, 0.0)
    assert abs(np.sum(rule.weights) - 1.0) < 1e-13


def test_gauss_laguerre_fractional_mass():
    rule = gauss_laguerre(16, 0.75)
    assert abs(np.sum(rule.weights) - gamma(1.75).real) < 1e-13


def test_gauss_laguerre_moment_class():
    for alpha in (0.0, 0.75, -0.3):
        rule = gauss_laguerre(12, alpha)
        for j in range(0, 24):
            got = np.sum(rule.weights * rule.nodes**j)
            expect = gamma(alpha + j + 1.0).real
            assert abs(got - expect) <= 1e-12 * expect, (alpha, j)


def test_gauss_laguerre_weight_positivity():
    rule = gauss_laguerre(64, -0.75)
    assert np.all(rule.weights > 0)


def test_log_axis_rule_moments():
    # power moments and the log moments Gamma'(b+1), Gamma''(b+1)
    for alpha in (-0.75, 0.75):
        rule = log_axis_rule(alpha, n=32, level=5)
        assert np.all(rule.weights > 0)
        for j in range(0, 6):
            got = np.sum(rule.weights * rule.nodes**j)
            expect = gamma(alpha + j + 1.0).real
            assert abs(got - expect) <= 2e-9 * expect
        g1 = gamma(alpha + 1.0).real
        psi1 = digamma(alpha + 1.0).real
        d1 = g1 * psi1
        d2 = g1 * (psi1**2 + polygamma(1, alpha + 1.0).real)
        got1 = np.sum(rule.weights * np.log(rule.nodes))
        got2 = np.sum(rule.weights * np.log(rule.nodes) ** 2)
        assert abs(got1 - d1) < 1e-9 * (1 + abs(d1))
        assert abs(got2 - d2) < 1e-9 * (1 + abs(d2))


def test_tanh_sinh_endpoint_singularities():
    rule = tanh_sinh(7)
    assert abs(np.sum(rule.weights * rule.nodes**-0.5) - 2.0) < 1e-12
    assert abs(np.sum(rule.weights * rule.complement**-0.3) - 1.0 / 0.7) < 1e-12
    got = np.sum(rule.weights * np.sqrt(-np.log(rule.nodes)))
    assert abs(got - math.sqrt(math.pi) / 2.0) < 1e-12


def test_rule_parameter_validation():
    with pytest.raises(DomainError):
        tanh_sinh(13)
    with pytest.raises(DomainError):
        gauss_laguerre(600, 0.0)
    with pytest.raises(DomainError):
        gauss_laguerre(10, -1.5)


def test_sobol_first_points():
    pts = sobol_points(8, 6).astype(np.float64) * 2.0**-32
    assert np.array_equal(pts, SOBOL_FIRST_8)


def test_qmc_spec_validation():
    with pytest.raises(DomainError):
        QmcSpec(count=1000)
    with pytest.raises(DomainError):
        QmcSpec(count=1 << 12, dimension=5)
    with pytest.raises(DomainError):
        QmcSpec(count=3000)


def test_tensor_separable_product():
    # k = 0: the tensor value equals the product of 1-D applications
    rules = _ref_rules(level=4, n=16)
    f = Integrand6D(REFERENCE)
    val = integrate_6d_tensor(f, rules)
    x_mass = np.sum(rules[0].weights * f.x_factor(rules[0].nodes, rules[0].complement))
    y_mass = np.sum(rules[1].weights * f.y_factor(rules[1].nodes, rules[1].complement))
    masses = [np.sum(r.weights) for r in rules[2:]]
    prod = x_mass * y_mass * np.prod(masses)
    assert abs(val - prod) <= 1e-13 * abs(prod)


def test_tensor_matches_brute_enumeration():
    exq = derive_exponents(REFERENCE)
    ts = tanh_sinh(2)
    small = (ts, ts) + tuple(
        gauss_laguerre(5, b.real) for b in (exq.beta_p, exq.beta_q, exq.beta_t, exq.beta_z)
    )
    f = Integrand6D(REFERENCE.replace(k=2))
    fast = integrate_6d_tensor(f, small)
    brute = integrate_6d_brute(f, small)
    assert abs(fast - brute) <= 1e-13 * abs(brute)


def test_tensor_reference_values():
    rules = _ref_rules()
    target = math.pi**2 / 2.0
    val0 = integrate_6d_tensor(Integrand6D(REFERENCE), rules)
    assert abs(val0 - target) <= 1e-8 * target
    val1 = integrate_6d_tensor(Integrand6D(REFERENCE.replace(k=1)), rules)
    assert abs(val1) < 1e-10
    val2 = integrate_6d_tensor(Integrand6D(REFERENCE.replace(k=2)), rules)
    assert abs(val2 - math.pi**4 / 2.0) <= 1e-4 * (1.0 + math.pi**4 / 2.0)


def test_tensor_requires_matching_alphas():
    exq = derive_exponents(REFERENCE)
    ts = tanh_sinh(3)
    bad = (ts, ts) + tuple(gauss_laguerre(8, 0.0) for _ in range(4))
    with pytest.raises(DomainError):
        integrate_6d_tensor(Integrand6D(REFERENCE), bad)
    del exq


def test_tensor_rejects_non_integer_k():
    with pytest.raises(UnsupportedRegimeError):
        integrate_6d_tensor(Integrand6D(REFERENCE.replace(k=0.5)), _ref_rules(4, 16))


def test_qmc_reproducible_bit_for_bit():
    spec = QmcSpec(count=1 << 12, shift_seed=99)
    f = Integrand6D(REFERENCE)
    v1, e1 = integrate_6d_qmc(f, spec)
    v2, e2 = integrate_6d_qmc(f, spec)
    assert v1 == v2 and e1 == e2


def test_qmc_seed_changes_value():
    f = Integrand6D(REFERENCE)
    v1, _ = integrate_6d_qmc(f, QmcSpec(count=1 << 12, shift_seed=1))
    v2, _ = integrate_6d_qmc(f, QmcSpec(count=1 << 12, shift_seed=2))
    assert v1 != v2


def test_qmc_coverage_on_reference():
    # 3-sigma bracket of the tensor value in at least 95 of 100 replications
    rules = _ref_rules()
    target = integrate_6d_tensor(Integrand6D(REFERENCE), rules)
    f = Integrand6D(REFERENCE)
    hits = 0
    for seed in range(100):
        val, se = integrate_6d_qmc(f, QmcSpec(count=1 << 14, shift_seed=seed))
        if abs(val - target) <= 3.0 * se:
            hits += 1
    assert hits >= 95, hits


def test_qmc_inadmissible_regime():
    ps = REFERENCE.replace(k=-1.0)  # a = 1 > 0 with negative k
    with pytest.raises(UnsupportedRegimeError):
        integrate_6d_qmc(Integrand6D(ps), QmcSpec(count=1 << 10))


def test_qmc_negative_a_bounded_coupling_allowed():
    ps = REFERENCE.replace(k=-1.0, a=-2.0)
    val, se = integrate_6d_qmc(Integrand6D(ps), QmcSpec(count=1 << 12, shift_seed=5))
    assert math.isfinite(val.real) and math.isfinite(val.imag)
    assert se >= 0.0


def test_integrand_pointwise_finite():
    f = Integrand6D(REFERENCE.replace(k=2))
    val = f(0.3, 0.7, 0.5, 1.2, 0.8, 2.0)
    assert np.all(np.isfinite(val))
