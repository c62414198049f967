#!/usr/bin/env python3
"""
Test script for the finite-difference oracle: radial sector spectra,
full-line assembly and the discretized Dirac Hamiltonian
"""

import sys
import os

import numpy as np
import pytest

# Add the src directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from dunkl_oscillator.dunkl_calculus import HalfLineGrid, Parity, SymmetricGrid
from dunkl_oscillator.errors import DomainError, PreconditionError
from dunkl_oscillator.numerical_oracle import (
    Component,
    convergence_study,
    dirac_hamiltonian,
    discretize_full_line,
    discretize_radial,
    eigensolve_sym,
    grid_dunkl_matrix,
    parity_embeddings,
    radial_exact,
    reflection_matrix,
)


def test_radial_spectrum_matches_closed_form():
    grid = HalfLineGrid.covering(14.0, 2000)
    for mu in (0.0, 0.25, 0.5, 1.0):
        for parity in Parity:
            values = eigensolve_sym(discretize_radial(parity, mu, grid), 8)
            exact = np.array([radial_exact(parity, mu, n) for n in range(8)])
            assert np.max(np.abs(values - exact) / exact) <= 1e-4, (mu, parity)


def test_radial_exact_values():
    assert radial_exact(Parity.EVEN, 0.5, 0) == 2.0
    assert radial_exact(Parity.ODD, 0.5, 1) == 8.0


def test_tridiagonal_and_dense_paths_agree():
    op = discretize_radial(Parity.ODD, 0.3, HalfLineGrid.covering(12.0, 300))
    assert op.is_tridiagonal and op.dimension == 300
    dense = np.linalg.eigvalsh(op.dense())[:5]
    assert np.allclose(eigensolve_sym(op, 5), dense, rtol=1e-11)
    values, vectors = eigensolve_sym(op, 3, vectors=True)
    assert vectors.shape == (300, 3)
    assert np.allclose(op.dense() @ vectors, vectors * values, atol=1e-8)


def test_second_order_convergence():
    for parity, mu, level in ((Parity.EVEN, 0.75, 0), (Parity.ODD, 0.25, 1), (Parity.EVEN, 0.0, 0)):
        grids = [HalfLineGrid.covering(14.0, m) for m in (250, 500, 1000)]
        report = convergence_study(lambda m, g, p=parity: discretize_radial(p, m, g), mu, grids,
                                   radial_exact(parity, mu, level), level)
        assert report.monotone and report.anomaly is None
        assert 1.8 <= report.slope <= 2.2, (parity, mu, report.slope)


def test_convergence_study_needs_three_grids():
    with pytest.raises(ValueError):
        convergence_study(lambda m, g: discretize_radial(Parity.EVEN, m, g), 0.0,
                          [HalfLineGrid.covering(14.0, 100)] * 2, 1.0)


def test_truncated_domain_is_rejected():
    with pytest.raises(PreconditionError):
        discretize_radial(Parity.EVEN, 0.0, HalfLineGrid.covering(2.0, 200))
    with pytest.raises(DomainError):
        discretize_radial(Parity.EVEN, -0.6, HalfLineGrid.covering(14.0, 200))


def test_parity_embeddings_are_orthonormal():
    s_even, s_odd = parity_embeddings(25)
    assert np.allclose(s_even.T @ s_even, np.eye(25))
    assert np.allclose(s_odd.T @ s_odd, np.eye(25))
    assert np.allclose(s_even.T @ s_odd, 0)
    p = reflection_matrix(50)
    assert np.allclose(p @ s_even, s_even)
    assert np.allclose(p @ s_odd, -s_odd)


def test_full_line_splits_into_sector_blocks():
    mu = 0.7
    full = SymmetricGrid(14.0 / 150, 150)
    half = HalfLineGrid(full.h, full.n_half)
    even = eigensolve_sym(discretize_radial(Parity.EVEN, mu, half), 8)
    odd = eigensolve_sym(discretize_radial(Parity.ODD, mu, half), 8)
    for component, shift_even, shift_odd in (("psi1", -1 - 2 * mu, -1 + 2 * mu), ("psi2", 1 + 2 * mu, 1 - 2 * mu)):
        op = discretize_full_line(component, mu, full)
        expected = np.sort(np.concatenate([even + shift_even, odd + shift_odd]))[:8]
        assert np.allclose(eigensolve_sym(op, 8), expected, atol=1e-9), component
        assert op.tags["component"] == Component(component).value


def test_full_line_psi1_ground_is_zero_mode():
    # 2 a^dagger a annihilates the ground state: lowest psi1 eigenvalue near 0
    mu = 0.4
    op = discretize_full_line(Component.PSI1, mu, SymmetricGrid(0.02, 700))
    assert abs(eigensolve_sym(op, 1)[0]) < 1e-3


def test_grid_dunkl_matrix_reduces_to_gradient():
    grid = SymmetricGrid(0.1, 30)
    f = np.sin(grid.points)
    assert np.allclose(grid_dunkl_matrix(0.0, grid) @ f, np.gradient(f, grid.h))


def test_dirac_hamiltonian_is_hermitian_without_deformation():
    # for mu > 0 the Dunkl momentum is symmetric only under |x|^{2mu} dx
    grid = SymmetricGrid(0.1, 40)
    h = dirac_hamiltonian(0.0, 0.5, grid)
    assert h.shape == (160, 160)
    # central differences are antisymmetric except at the one-sided ends
    interior = np.ones(80, dtype=bool)
    interior[[0, 1, 78, 79]] = False
    mask = np.concatenate([interior, interior])
    block = h[np.ix_(mask, mask)]
    assert np.allclose(block, block.conj().T)
    with pytest.raises(DomainError):
        dirac_hamiltonian(0.7, 0.0, grid)


if __name__ == "__main__":
    print("📐 Numerical Oracle Test")
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
    print(f"🎉 All {len(tests)} oracle tests PASSED!")
