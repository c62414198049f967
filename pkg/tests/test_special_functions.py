#!/usr/bin/env python3
"""
Test script for the special-function kernels: log-Gamma, Laguerre recurrences,
the tridiagonal eigensolvers and Gauss-Laguerre quadrature
"""

import sys
import os
import math

import numpy as np
import pytest
from scipy import special

# Add the src directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from dunkl_oscillator.errors import DomainError, NumericError
from dunkl_oscillator.special_functions import (
    dunkl_moment_integral,
    eigensolve_sym_tridiag,
    gamma_ratio,
    gauss_laguerre,
    generalized_hermite,
    laguerre,
    laguerre_coefficients,
    laguerre_integral,
    laguerre_terms,
    ln_gamma,
    sturm_count,
    tridiag_lowest,
)


def test_ln_gamma_matches_scipy():
    for x in (1e-3, 0.1, 0.5, 1.0, 1.5, 2.0, 3.7, 10.0, 55.5, 170.0):
        assert abs(ln_gamma(x) - special.gammaln(x)) <= 1e-12 * max(1.0, abs(special.gammaln(x)))
    assert ln_gamma(1.0) == 0.0
    assert ln_gamma(2.0) == 0.0
    assert abs(gamma_ratio(5.5, 3.5) - 4.5 * 3.5) < 1e-12


def test_ln_gamma_rejects_non_positive():
    for bad in (0.0, -1.0, -0.5):
        with pytest.raises(DomainError):
            ln_gamma(bad)


def test_laguerre_against_scipy():
    x = np.linspace(0.0, 20.0, 81)
    for alpha in (-0.5, -0.3, 0.0, 0.5, 1.5, 4.0):
        for n in (0, 1, 2, 7, 15, 30):
            ours = laguerre(n, alpha, x) * np.exp(-x / 2)
            ref = special.eval_genlaguerre(n, alpha, x) * np.exp(-x / 2)
            assert np.max(np.abs(ours - ref)) <= 1e-11 * max(1.0, np.max(np.abs(ref))), (n, alpha)


def test_laguerre_scalar_and_low_degree():
    assert laguerre(0, 0.3, 2.0) == 1.0
    assert abs(laguerre(1, 0.3, 2.0) - (1.3 - 2.0)) < 1e-15
    # L_2^a(x) = ((x^2 - 2(a+2)x + (a+1)(a+2))/2
    a, x = 0.7, 1.9
    assert abs(laguerre(2, a, x) - (x * x - 2 * (a + 2) * x + (a + 1) * (a + 2)) / 2) < 1e-14


def test_laguerre_domain_errors():
    with pytest.raises(DomainError):
        laguerre(-1, 0.0, 1.0)
    with pytest.raises(DomainError):
        laguerre(2, -1.0, 1.0)


def test_laguerre_terms_follow_recurrence():
    x = np.array([0.1, 1.0, 4.0])
    terms = laguerre_terms(0.25, x)
    for n in range(12):
        assert np.allclose(next(terms), laguerre(n, 0.25, x), rtol=1e-14, atol=1e-14)


def test_laguerre_coefficients_evaluate_to_polynomial():
    t = np.array([0.0, 0.3, 1.7, 5.0])
    for n, alpha in ((0, 0.5), (3, -0.25), (8, 1.5), (12, 0.0)):
        coeffs = laguerre_coefficients(n, alpha)
        assert coeffs.size == n + 1
        values = np.polynomial.polynomial.polyval(t, coeffs)
        assert np.allclose(values, laguerre(n, alpha, t), rtol=1e-12, atol=1e-12)


def test_generalized_hermite_orthonormal_under_dunkl_measure():
    # int |x|^{2mu} e^{-x^2} H_m H_n dx = delta_mn over the full line
    for mu in (0.0, 0.3, 1.2):
        for m in range(6):
            for n in range(6):
                if (m + n) % 2:
                    continue
                value = 2 * dunkl_moment_integral(
                    lambda t, m=m, n=n: generalized_hermite(m, mu, np.sqrt(t)) * generalized_hermite(n, mu, np.sqrt(t)),
                    mu,
                )
                assert abs(value - (1.0 if m == n else 0.0)) < 1e-10, (mu, m, n, value)


def test_generalized_hermite_reduces_to_hermite():
    x = np.array([0.3, 0.9, 1.4, 2.2])
    for n in range(8):
        coeffs = np.zeros(n + 1)
        coeffs[n] = 1.0
        ratio = generalized_hermite(n, 0.0, x) / np.polynomial.hermite.hermval(x, coeffs)
        assert np.ptp(ratio) <= 1e-10 * np.max(np.abs(ratio))


def test_tridiagonal_ql_matches_numpy():
    rng = np.random.default_rng(7)
    diag = rng.normal(size=40)
    off = rng.normal(size=39)
    values, first = eigensolve_sym_tridiag(diag, off)
    dense = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    ref_values, ref_vectors = np.linalg.eigh(dense)
    assert np.allclose(values, ref_values, atol=1e-12)
    assert np.allclose(first**2, ref_vectors[0] ** 2, atol=1e-12)


def test_tridiagonal_ql_iteration_cap():
    diag = np.arange(30, dtype=float)
    off = np.ones(29)
    with pytest.raises(NumericError) as info:
        eigensolve_sym_tridiag(diag, off, max_iter=1)
    assert info.value.iterations == 2


def test_sturm_bisection_lowest():
    n = 500
    diag = 2.0 * np.ones(n)
    off = -np.ones(n - 1)
    exact = 2 - 2 * np.cos(np.arange(1, 9) * np.pi / (n + 1))
    assert np.allclose(tridiag_lowest(diag, off, 8), exact, rtol=0, atol=1e-12)
    assert list(sturm_count(diag, off, [exact[2] + 1e-9])) == [3]


def test_gauss_laguerre_against_scipy_roots():
    for alpha in (-0.5, 0.0, 0.75, 3.0):
        rule = gauss_laguerre(12, alpha)
        nodes, weights = special.roots_genlaguerre(12, alpha)
        assert np.allclose(rule.nodes, nodes, rtol=1e-12)
        assert np.allclose(rule.weights, weights, rtol=1e-9, atol=1e-13 * weights.sum())
        assert not rule.nodes.flags.writeable


def test_gauss_laguerre_exactness():
    for alpha in (-0.5, 0.0, 1.5):
        rule = gauss_laguerre(6, alpha)
        for m in range(12):
            target = math.exp(ln_gamma(alpha + m + 1))
            assert abs(np.sum(rule.weights * rule.nodes**m) - target) <= 1e-10 * target


def test_laguerre_integral_scaled_weight():
    # int t^a e^{-s t} dt = Gamma(a+1) / s^{a+1}
    for alpha, scale in ((0.0, 1.0), (0.5, 2.0), (2.5, 0.3)):
        value = laguerre_integral(lambda t: np.ones_like(t), alpha, scale=scale)
        assert abs(value - math.exp(ln_gamma(alpha + 1)) * scale ** (-(alpha + 1))) < 1e-12 * max(1, value)


def test_laguerre_integral_reports_non_convergence():
    with pytest.raises(NumericError) as info:
        laguerre_integral(lambda t: np.cos(40 * t), 0.0, tol=1e-15, cap=16)
    assert len(info.value.estimates) == 2


def test_laguerre_integral_exact_degree():
    alpha = 0.5
    for m in (0, 7, 20):
        for n in (m, m + 1):
            value = laguerre_integral(lambda t: laguerre(m, alpha, t) * laguerre(n, alpha, t), alpha, degree=m + n)
            expected = math.exp(ln_gamma(n + alpha + 1) - ln_gamma(n + 1)) if m == n else 0.0
            assert abs(value - expected) < 1e-10 * max(1.0, expected), (m, n, value)
    with pytest.raises(DomainError):
        laguerre_integral(lambda t: t, alpha, degree=-1)
    with pytest.raises(NumericError):
        laguerre_integral(lambda t: t, alpha, degree=100, cap=16)


def test_dunkl_moment_integral():
    assert abs(dunkl_moment_integral(lambda t: np.ones_like(t), 0.0) - math.sqrt(math.pi) / 2) < 1e-14
    # int r^{2mu} e^{-r^2} r^2 dr = Gamma(mu + 3/2) / 2
    mu = 0.4
    assert abs(dunkl_moment_integral(lambda t: t, mu) - 0.5 * math.gamma(mu + 1.5)) < 1e-13
    with pytest.raises(DomainError):
        dunkl_moment_integral(lambda t: t, -0.5)


if __name__ == "__main__":
    print("🧮 Special Functions Test")
    print("=" * 40)
    failures = 0
    tests = [(name, fn) for name, fn in list(globals().items()) if name.startswith("test_") and callable(fn)]
    for name, fn in tests:
        try:
            fn()
            print(f"✅ {name}")
        except Exception as e:
            failures += 1
            print(f"❌ {name}: {e!r}")
    print("\n" + "=" * 40)
    if failures:
        print(f"💥 {failures} of {len(tests)} tests FAILED")
        sys.exit(1)
    print(f"🎉 All {len(tests)} special function tests PASSED!")
