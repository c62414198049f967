#!/usr/bin/env python3
"""
Test script for the Dunkl derivative, reflection and deformed ladder operators
on exact polynomial parts and on staggered grids
"""

import sys
import os
from fractions import Fraction

import numpy as np
import pytest

# Add the src directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from dunkl_oscillator.dunkl_calculus import (
    GridFunc,
    HalfLineGrid,
    Parity,
    PolyFunc,
    SymmetricGrid,
    dunkl_derivative,
    dunkl_derivative_grid,
    ladder_ops,
    number_products,
    number_products_closed,
    radial_dunkl_laplacian,
    reflect,
)
from dunkl_oscillator.errors import DomainError


def test_polyfunc_trims_and_freezes():
    p = PolyFunc(np.array([1.0, 2.0, 0.0, 0.0]))
    assert p.degree == 1
    assert not p.coeffs.flags.writeable
    assert PolyFunc.zero().is_zero
    assert (p - p).is_zero


def test_polyfunc_parts_and_evaluation():
    p = PolyFunc(np.array([1.0, -2.0, 3.0, 0.5]))
    assert np.allclose((p.even_part() + p.odd_part()).coeffs, p.coeffs)
    assert p(2.0) == pytest.approx(1.0 - 4.0 + 12.0 + 4.0)
    assert p.times_x().degree == 4
    assert np.allclose(p.derivative().coeffs, [-2.0, 6.0, 1.5])


def test_dunkl_derivative_on_monomials():
    mu = 0.3
    for n in range(1, 9):
        result = dunkl_derivative(PolyFunc.monomial(n), mu)
        gamma = n + 2 * mu if n % 2 else n
        assert result.degree == n - 1
        assert result.coeffs[-1] == pytest.approx(gamma)
    assert dunkl_derivative(PolyFunc.monomial(0), mu).is_zero


def test_dunkl_derivative_rejects_bad_mu():
    with pytest.raises(DomainError):
        dunkl_derivative(PolyFunc.monomial(2), -0.5)


def test_reflection_identities():
    mu = 0.45
    for n in range(12):
        p = PolyFunc.monomial(n, 1.0) + PolyFunc.monomial(n // 2, 2.0)
        assert reflect(reflect(p)).distance(p) == 0.0
        assert reflect(dunkl_derivative(p, mu)).distance(-dunkl_derivative(reflect(p), mu)) == 0.0


def test_commutator_exact_in_fractions():
    mu = Fraction(1, 3)
    a, a_dag = ladder_ops(mu)
    for n in range(10):
        p = PolyFunc.monomial(n, Fraction(1))
        lhs = a(a_dag(p)) - a_dag(a(p))
        rhs = p + reflect(p) * (2 * mu)
        # the 1/sqrt2 factors are floating point, everything else is rational
        assert lhs.distance(rhs) < 1e-12


def test_commutator_floats_up_to_degree_50():
    for mu in (0.0, 0.25, 0.5, 1.0):
        a, a_dag = ladder_ops(mu)
        worst = 0.0
        for n in range(51):
            p = PolyFunc.monomial(n)
            lhs = a(a_dag(p)) - a_dag(a(p))
            rhs = p + reflect(p) * (2 * mu)
            worst = max(worst, lhs.distance(rhs) / max(1.0, rhs.max_abs()))
        assert worst <= 1e-12, (mu, worst)


def test_number_products_closed_forms():
    for mu in (0.0, 0.2, 0.9):
        composed = number_products(mu)
        closed = number_products_closed(mu)
        for n in range(20):
            p = PolyFunc.monomial(n) + PolyFunc.monomial(n + 1, -0.5)
            for left, right in zip(composed, closed):
                value = left(p)
                assert value.distance(right(p)) <= 1e-12 * max(1.0, value.max_abs()), (mu, n)


def test_ground_state_annihilated():
    # e^{-x^2/2} has polynomial part 1, and a_D 1 = 0
    a, a_dag = ladder_ops(0.6)
    assert a(PolyFunc.monomial(0)).is_zero
    # a_D^dagger a_D vanishes, a_D a_D^dagger = 1 + 2 mu on the ground state
    lowered, raised = number_products(0.6)
    assert raised(PolyFunc.monomial(0)).is_zero
    assert lowered(PolyFunc.monomial(0)).coeffs[0] == pytest.approx(2.2)


def test_grid_reflection_is_index_reversal():
    grid = SymmetricGrid(0.1, 20)
    assert np.allclose(grid.points[grid.reflection_index()], -grid.points)
    f = grid.sample(lambda x: x**3 + x)
    assert np.array_equal(reflect(f).values, -f.values)
    with pytest.raises(TypeError):
        reflect(GridFunc(HalfLineGrid(0.1, 5), np.zeros(5)))


def test_grid_dunkl_derivative_second_order():
    mu = 0.4
    errors = []
    steps = (0.04, 0.02, 0.01)
    for h in steps:
        grid = SymmetricGrid(h, int(round(4.0 / h)))
        x = grid.points
        f = grid.sample(lambda x: np.exp(-x * x / 2) * (1 + x))
        exact = np.exp(-x * x / 2) * (1 - x - x * x) + mu / x * 2 * x * np.exp(-x * x / 2)
        interior = slice(1, -1)
        errors.append(np.max(np.abs(dunkl_derivative_grid(f, mu).values - exact)[interior]))
    slope = np.polyfit(np.log(steps), np.log(errors), 1)[0]
    assert 1.9 <= slope <= 2.1


def test_radial_laplacian_on_sector_ground_states():
    # weighted ground states: e^{-r^2/2} (even) and r e^{-r^2/2} (odd)
    mu = 0.35
    grid = HalfLineGrid(0.005, 2000)
    r = grid.points
    for parity, psi, eigen in (
        (Parity.EVEN, np.exp(-r * r / 2), 1 + 2 * mu),
        (Parity.ODD, r * np.exp(-r * r / 2), 3 + 2 * mu),
    ):
        image = radial_dunkl_laplacian(psi, grid, mu, parity) + r * r * psi
        assert np.max(np.abs(image - eigen * psi)) < 1e-4, parity


if __name__ == "__main__":
    print("🔁 Dunkl Calculus Test")
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
    print(f"🎉 All {len(tests)} Dunkl calculus tests PASSED!")
