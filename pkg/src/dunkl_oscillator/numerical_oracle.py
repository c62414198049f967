"""Finite-difference oracle spectra for the radial and full-line Dunkl operators.

The radial scheme is finite-volume on the cells [jh, (j+1)h] with the exact
Dunkl masses of each cell, so the symmetric form is

    A = M^{-1/2} (K + Q) M^{-1/2}

with K the flux stiffness (zero flux at r = 0, Dirichlet at R_max) and Q the
exact r^2 moments. The odd sector is solved for phi = psi / r, which is the
even-sector problem at mu + 1.
"""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaincc

from .dunkl_calculus import HalfLineGrid, Parity, SymmetricGrid
from .errors import NumericError, PreconditionError, require_kappa, require_mu
from .special_functions import tridiag_lowest

logger = logging.getLogger("dunkl-oscillator")

# ground-state weight lost beyond R_max
TRUNCATION_LIMIT = 1e-8


class Component(str, Enum):
    PSI1 = "psi1"
    PSI2 = "psi2"


@dataclass(frozen=True, eq=False)
class DiscretizedOperator:
    """Symmetric operator matrix, stored tridiagonally when possible."""

    label: str
    mu: float
    grid: "HalfLineGrid | SymmetricGrid"
    diag: np.ndarray | None = None
    offdiag: np.ndarray | None = None
    matrix: np.ndarray | None = None
    gauge: str = "weighted"
    tags: dict = field(default_factory=dict)

    @property
    def is_tridiagonal(self) -> bool:
        return self.matrix is None

    @property
    def dimension(self) -> int:
        return len(self.diag) if self.is_tridiagonal else self.matrix.shape[0]

    def dense(self) -> np.ndarray:
        if not self.is_tridiagonal:
            return self.matrix
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)


def radial_exact(parity: Parity, mu: float, n: int) -> float:
    """Closed-form eigenvalue 4(n + k) of the radial sector operator."""
    return 4 * n + (1 + 2 * mu if Parity(parity) is Parity.EVEN else 3 + 2 * mu)


def _check_truncation(nu: float, r_max: float) -> None:
    lost = float(gammaincc(nu + 0.5, r_max * r_max))
    if lost > TRUNCATION_LIMIT:
        raise PreconditionError(
            f"R_max = {r_max} truncates {lost:.2e} of the ground-state weight; increase R_max"
        )


def _finite_volume(nu: float, grid: HalfLineGrid) -> tuple[np.ndarray, np.ndarray]:
    """Symmetric tridiagonal form of -r^{-2nu}(r^{2nu} phi')' + r^2 phi."""
    h = grid.h
    j = np.arange(grid.size + 1, dtype=float)
    edges = j * h
    p = 2 * nu + 1
    masses = np.diff(edges**p) / p
    moments = np.diff(edges ** (p + 2)) / (p + 2)
    faces = edges[1:] ** (2 * nu)
    stiffness = faces.copy()
    stiffness[1:] += faces[:-1]
    # Dirichlet through the mirrored ghost at R_max
    stiffness[-1] += faces[-1]
    stiffness /= h
    diag = (stiffness + moments) / masses
    offdiag = -faces[:-1] / h / np.sqrt(masses[:-1] * masses[1:])
    return diag, offdiag


def discretize_radial(parity: Parity, mu: float, grid: HalfLineGrid) -> DiscretizedOperator:
    """Weighted-gauge sector operator -psi'' - (2mu/r)psi' (+2mu/r^2 psi) + r^2 psi."""
    require_mu(mu)
    parity = Parity(parity)
    nu = mu if parity is Parity.EVEN else mu + 1.0
    _check_truncation(nu, grid.r_max)
    diag, offdiag = _finite_volume(nu, grid)
    logger.debug(f"radial {parity.value} operator: mu={mu}, M={grid.size}, h={grid.h:.3e}")
    return DiscretizedOperator(
        label=f"radial-{parity.value}",
        mu=mu,
        grid=grid,
        diag=diag,
        offdiag=offdiag,
        tags={"parity": parity.value},
    )


def parity_embeddings(n_half: int) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal maps from half-line vectors to even and odd full-line vectors."""
    size = 2 * n_half
    s_even = np.zeros((size, n_half))
    s_odd = np.zeros((size, n_half))
    j = np.arange(n_half)
    scale = 1.0 / math.sqrt(2.0)
    s_even[n_half + j, j] = scale
    s_even[n_half - 1 - j, j] = scale
    s_odd[n_half + j, j] = scale
    s_odd[n_half - 1 - j, j] = -scale
    return s_even, s_odd


def reflection_matrix(size: int) -> np.ndarray:
    return np.eye(size)[::-1]


def discretize_full_line(component: str, mu: float, grid: SymmetricGrid) -> DiscretizedOperator:
    """Full-line operator of a spinor component, with the reflection terms exact.

    psi1: 2 a^dagger a = L - 1 - 2mu R
    psi2: 2 a a^dagger = L + 1 + 2mu R
    where L is the parity-graded radial operator.
    """
    require_mu(mu)
    component = Component(component)
    half = HalfLineGrid(grid.h, grid.n_half)
    even = discretize_radial(Parity.EVEN, mu, half).dense()
    odd = discretize_radial(Parity.ODD, mu, half).dense()
    s_even, s_odd = parity_embeddings(grid.n_half)
    matrix = s_even @ even @ s_even.T + s_odd @ odd @ s_odd.T
    sign = -1.0 if component is Component.PSI1 else 1.0
    matrix += sign * (np.eye(grid.size) + 2.0 * mu * reflection_matrix(grid.size))
    logger.debug(f"full-line {component.value} operator: mu={mu}, size={grid.size}")
    return DiscretizedOperator(label=f"full-line-{component.value}", mu=mu, grid=grid, matrix=matrix,
                               tags={"component": component.value})


def eigensolve_sym(op: DiscretizedOperator, count: int, vectors: bool = False):
    """Lowest ``count`` eigenvalues (and optionally eigenvectors as columns)."""
    if not 0 < count <= op.dimension:
        raise ValueError(f"count must lie in 1..{op.dimension}, got {count}")
    try:
        if op.is_tridiagonal:
            if vectors:
                return eigh_tridiagonal(op.diag, op.offdiag, select="i", select_range=(0, count - 1))
            return tridiag_lowest(op.diag, op.offdiag, count)
        if vectors:
            values, vecs = np.linalg.eigh(op.matrix)
            return values[:count], vecs[:, :count]
        return np.linalg.eigvalsh(op.matrix)[:count]
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigensolve failed for {op.label}: {exc}") from exc


@dataclass(frozen=True)
class ConvergenceReport:
    steps: tuple
    errors: tuple
    slope: float
    monotone: bool
    anomaly: str | None = None


def convergence_study(
    builder: Callable[[float, HalfLineGrid], DiscretizedOperator],
    mu: float,
    grids: Sequence[HalfLineGrid],
    exact: float,
    level: int = 0,
) -> ConvergenceReport:
    """Log-log slope of the eigenvalue error against the grid step."""
    if len(grids) < 3:
        raise ValueError("convergence study needs at least three grids")
    steps, errors = [], []
    for grid in grids:
        values = eigensolve_sym(builder(mu, grid), level + 1)
        steps.append(grid.h)
        errors.append(abs(float(values[level]) - exact))
    monotone = all(b < a for a, b in zip(errors, errors[1:]))
    anomaly = None
    if not monotone:
        anomaly = "errors do not decrease monotonically under refinement"
        logger.warning(f"convergence anomaly for mu={mu}: errors={errors}")
    positive = [(h, e) for h, e in zip(steps, errors) if e > 0]
    slope = float("nan")
    if len(positive) >= 2:
        hs, es = zip(*positive)
        slope = float(np.polyfit(np.log(hs), np.log(es), 1)[0])
    return ConvergenceReport(tuple(steps), tuple(errors), slope, monotone, anomaly)


def grid_dunkl_matrix(mu: float, grid: SymmetricGrid) -> np.ndarray:
    """Matrix of the grid Dunkl derivative (central differences plus exact reflection)."""
    require_mu(mu)
    gradient = np.gradient(np.eye(grid.size), grid.h, axis=0)
    reflection = reflection_matrix(grid.size)
    return gradient + np.diag(mu / grid.points) @ (np.eye(grid.size) - reflection)


ALPHA = np.array([[0, -1j], [1j, 0]])
BETA = np.diag([1.0 + 0j, -1.0])


def dirac_hamiltonian(mu: float, kappa: float, grid: SymmetricGrid) -> np.ndarray:
    """h = sqrt(kappa) alpha (-i D - i x beta) + beta in units of mc^2, spinor-major ordering."""
    require_kappa(kappa)
    d = grid_dunkl_matrix(mu, grid)
    x = np.diag(grid.points)
    identity = np.eye(grid.size)
    kinetic = -1j * np.kron(ALPHA, d) - 1j * np.kron(ALPHA @ BETA, x)
    return math.sqrt(kappa) * kinetic + np.kron(BETA, identity)
