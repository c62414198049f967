#!/usr/bin/env python3
"""
Test script for the su(1,1) Sturmian action and the differential realizations
"""

import sys
import os
import math

import numpy as np
import pytest

# Add the src directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from dunkl_oscillator.dunkl_calculus import HalfLineGrid
from dunkl_oscillator.errors import DomainError
from dunkl_oscillator.special_functions import laguerre, laguerre_integral
from dunkl_oscillator.su11_algebra import (
    Gauge,
    Generator,
    Sector,
    Su11Realization,
    SturmianFunction,
    apply_differential,
    bargmann_indices,
    casimir_value,
    ladder_matrix,
    ladder_residual,
    physical_index,
    recovered_coefficient,
    sturmian_action,
    sturmian_eval,
)


def test_bargmann_indices_are_casimir_roots():
    for mu in (-0.3, 0.0, 0.5, 1.7):
        for sector in Sector:
            for k in bargmann_indices(sector, mu):
                assert k * (k - 1) == pytest.approx(casimir_value(sector, mu), abs=1e-14)
            assert physical_index(sector, mu) > 0


def test_physical_indices():
    assert physical_index(Sector.PLUS, 0.0) == 0.25
    assert physical_index(Sector.MINUS, 0.0) == 0.75
    assert physical_index(Sector.PLUS, 0.5) == 0.5
    assert physical_index(Sector.MINUS, 0.5) == 1.0
    realization = Su11Realization.physical(Sector.MINUS, 0.5)
    assert realization.casimir == pytest.approx(realization.bargmann_k * (realization.bargmann_k - 1))


def test_sturmian_action_values():
    assert sturmian_action(Generator.K0, 3, 0.75) == (3.75, 3)
    coefficient, target = sturmian_action(Generator.K_PLUS, 2, 0.25)
    assert target == 3 and coefficient == pytest.approx(math.sqrt(3 * 2.5))
    assert sturmian_action(Generator.K_MINUS, 0, 0.25) == (0.0, -1)
    with pytest.raises(DomainError):
        sturmian_action(Generator.K0, -1, 0.25)
    with pytest.raises(DomainError):
        sturmian_action(Generator.K0, 0, 0.0)


def test_commutators_and_casimir_on_truncated_ladder():
    checked = 31
    for mu in (0.0, 0.5):
        for sector in Sector:
            k = physical_index(sector, mu)
            size = checked + 2
            k0 = ladder_matrix(Generator.K0, k, size)
            kp = ladder_matrix(Generator.K_PLUS, k, size)
            km = ladder_matrix(Generator.K_MINUS, k, size)
            block = slice(0, checked)
            assert np.allclose((k0 @ kp - kp @ k0 - kp)[block, block], 0, atol=1e-10)
            assert np.allclose((k0 @ km - km @ k0 + km)[block, block], 0, atol=1e-10)
            assert np.allclose((km @ kp - kp @ km - 2 * k0)[block, block], 0, atol=1e-10)
            casimir = -kp @ km + k0 @ (k0 - np.eye(size))
            assert np.allclose(np.diag(casimir)[block], k * (k - 1), atol=1e-10)


def test_ladder_matrix_adjoint_pair():
    kp = ladder_matrix(Generator.K_PLUS, 0.6, 12)
    km = ladder_matrix(Generator.K_MINUS, 0.6, 12)
    assert np.allclose(kp.T, km, rtol=1e-14, atol=0)
    assert np.count_nonzero(kp) == 11


def test_sturmian_normalization_both_gauges():
    r = np.linspace(1e-4, 12.0, 120001)
    dr = r[1] - r[0]
    mu = 0.5
    for sector in Sector:
        k = physical_index(sector, mu)
        for n in (0, 3):
            half = SturmianFunction(n, k, Gauge.HALF_DENSITY, sector)(r)
            weighted = SturmianFunction(n, k, Gauge.WEIGHTED, sector)(r)
            assert np.sum(half**2) * dr == pytest.approx(1.0, abs=1e-4)
            assert np.sum(weighted**2 * r ** (2 * mu)) * dr == pytest.approx(1.0, abs=1e-4)
            assert np.allclose(half, weighted * r**mu, rtol=1e-12)


def test_sturmian_eval_values_and_orthonormality():
    assert sturmian_eval(0, 0.5, 1.0) == pytest.approx(math.sqrt(2) * math.exp(-0.5), abs=1e-12)
    r = np.array([0.3, 1.2, 2.5])
    assert np.allclose(sturmian_eval(0, 0.75, r), math.sqrt(2 / math.gamma(1.5)) * r**1.0 * np.exp(-r * r / 2))
    # in t = r^2 the half-density product becomes (1/2) t^{2k-1} e^{-t} L_m L_n
    for k in (0.25, 0.75, 1.1):
        for m in range(4):
            for n in range(4):
                scale = math.sqrt(math.gamma(m + 1) * math.gamma(n + 1) / (math.gamma(m + 2 * k) * math.gamma(n + 2 * k)))
                value = laguerre_integral(lambda t: scale * laguerre(m, 2 * k - 1, t) * laguerre(n, 2 * k - 1, t),
                                          2 * k - 1)
                assert value == pytest.approx(1.0 if m == n else 0.0, abs=1e-10), (k, m, n)


def test_sturmian_function_reports_mu():
    for sector in Sector:
        f = SturmianFunction.physical(sector, 0.3, 2)
        assert f.mu == pytest.approx(0.3)
        assert f.gauge is Gauge.WEIGHTED


def test_differential_k_plus_converges_at_second_order():
    steps = (0.04, 0.02, 0.01)
    for sector, mu in ((Sector.PLUS, 0.5), (Sector.MINUS, 0.25)):
        residuals = [ladder_residual(Generator.K_PLUS, sector, mu, 1, HalfLineGrid(h, int(round(10.0 / h))))
                     for h in steps]
        slope = np.polyfit(np.log(steps), np.log(residuals), 1)[0]
        assert 1.9 <= slope <= 2.1, (sector, slope)


def test_differential_lowest_weight():
    grid = HalfLineGrid(0.01, 1000)
    for sector in Sector:
        assert ladder_residual(Generator.K_MINUS, sector, 0.3, 0, grid) < 1e-3
        assert ladder_residual(Generator.K0, sector, 0.3, 0, grid) < 1e-3


def test_recovered_coefficients():
    grid = HalfLineGrid(0.01, 1000)
    for sector, mu in ((Sector.PLUS, 0.5), (Sector.MINUS, 0.25)):
        k = physical_index(sector, mu)
        for op, n in ((Generator.K_PLUS, 1), (Generator.K_MINUS, 2), (Generator.K0, 2)):
            expected, _ = sturmian_action(op, n, k)
            assert recovered_coefficient(op, sector, mu, n, grid) == pytest.approx(expected, abs=1e-3)


def test_apply_differential_needs_half_line():
    from dunkl_oscillator.dunkl_calculus import GridFunc, SymmetricGrid

    grid = SymmetricGrid(0.1, 10)
    with pytest.raises(TypeError):
        apply_differential(Generator.K0, Sector.PLUS, 0.2, GridFunc(grid, np.zeros(grid.size)))


if __name__ == "__main__":
    print("🌀 su(1,1) Algebra Test")
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
    print(f"🎉 All {len(tests)} su(1,1) tests PASSED!")
