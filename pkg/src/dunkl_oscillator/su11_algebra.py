"""su(1,1) action on the Sturmian basis and its two radial realizations.

The even ("plus") and odd ("minus") parity sectors each realize a positive
discrete-series representation. Sturmian functions are available in two
gauges related by the exact multiplier r^mu:

* half-density: normalized under dr, the form with the r^{2k-1/2} prefactor;
* weighted: normalized under r^{2mu} dr, the pointwise eigenfunctions of the
  differential realization.
"""
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .dunkl_calculus import GridFunc, HalfLineGrid, Parity, radial_derivative, radial_dunkl_laplacian
from .errors import DomainError, require_mu
from .special_functions import laguerre, ln_gamma


class Sector(str, Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if self is Sector.PLUS else Parity.ODD

    @property
    def power(self) -> int:
        """Power of r carried by weighted-gauge functions of this sector."""
        return 0 if self is Sector.PLUS else 1


class Gauge(str, Enum):
    HALF_DENSITY = "half_density"
    WEIGHTED = "weighted"


class Generator(str, Enum):
    K0 = "K0"
    K_PLUS = "K+"
    K_MINUS = "K-"


def bargmann_indices(sector: Sector, mu: float) -> tuple[float, float]:
    """Both roots of k(k-1) = Casimir for the sector."""
    require_mu(mu)
    if sector is Sector.PLUS:
        return 0.25 + mu / 2, 0.75 - mu / 2
    return 0.25 - mu / 2, 0.75 + mu / 2


def physical_index(sector: Sector, mu: float) -> float:
    """The retained Bargmann index, positive for every mu > -1/2."""
    require_mu(mu)
    return 0.25 + mu / 2 if sector is Sector.PLUS else 0.75 + mu / 2


def casimir_value(sector: Sector, mu: float) -> float:
    require_mu(mu)
    sign = -1 if sector is Sector.PLUS else 1
    return (4 * mu * mu + sign * 4 * mu - 3) / 16


@dataclass(frozen=True)
class Su11Realization:
    sector: Sector
    mu: float
    bargmann_k: float
    casimir: float

    @classmethod
    def physical(cls, sector: Sector, mu: float) -> "Su11Realization":
        return cls(sector, mu, physical_index(sector, mu), casimir_value(sector, mu))


def _check_state(n: int, k: float) -> None:
    if n < 0:
        raise DomainError(f"Sturmian level must be non-negative, got {n}")
    if not k > 0:
        raise DomainError(f"Bargmann index must be positive, got {k}")


def sturmian_action(op: Generator, n: int, k: float) -> tuple[float, int]:
    """Coefficient and target level of a generator on |k, n>.

    K- on the lowest state returns (0.0, -1).
    """
    _check_state(n, k)
    op = Generator(op)
    if op is Generator.K0:
        return k + n, n
    if op is Generator.K_PLUS:
        return math.sqrt((n + 1) * (2 * k + n)), n + 1
    if n == 0:
        return 0.0, -1
    return math.sqrt(n * (2 * k + n - 1)), n - 1


def ladder_matrix(op: Generator, k: float, size: int) -> np.ndarray:
    """Matrix of a generator on the Sturmian states 0..size-1 (column = source)."""
    matrix = np.zeros((size, size))
    for n in range(size):
        coefficient, target = sturmian_action(op, n, k)
        if 0 <= target < size:
            matrix[target, n] = coefficient
    return matrix


def sturmian_eval(n: int, k: float, r, gauge: Gauge = Gauge.HALF_DENSITY, sector: Sector = Sector.PLUS):
    """Sturmian function |k, n> at r.

    half_density: [2 Gamma(n+1)/Gamma(n+2k)]^{1/2} r^{2k-1/2} e^{-r^2/2} L_n^{2k-1}(r^2)
    weighted:     the same with r^{2k-1/2} replaced by r^s, s = 0 (plus) or 1 (minus)
    """
    _check_state(n, k)
    r = np.asarray(r, dtype=float)
    norm = math.sqrt(2.0 * math.exp(ln_gamma(n + 1) - ln_gamma(n + 2 * k)))
    power = 2 * k - 0.5 if Gauge(gauge) is Gauge.HALF_DENSITY else Sector(sector).power
    value = norm * r**power * np.exp(-r * r / 2) * laguerre(n, 2 * k - 1, r * r)
    return value if value.ndim else float(value)


@dataclass(frozen=True)
class SturmianFunction:
    n: int
    k: float
    gauge: Gauge = Gauge.HALF_DENSITY
    sector: Sector = Sector.PLUS

    @classmethod
    def physical(cls, sector: Sector, mu: float, n: int, gauge: Gauge = Gauge.WEIGHTED) -> "SturmianFunction":
        return cls(n, physical_index(sector, mu), gauge, sector)

    @property
    def mu(self) -> float:
        """Dunkl parameter for which this is the physical index of its sector."""
        return 2 * self.k - 0.5 - self.sector.power

    def __call__(self, r):
        return sturmian_eval(self.n, self.k, r, self.gauge, self.sector)

    def sample(self, grid: HalfLineGrid) -> GridFunc:
        return GridFunc(grid, np.asarray(self(grid.points)))


def apply_differential(op: Generator, sector: Sector, mu: float, psi: GridFunc) -> GridFunc:
    """Finite-difference K0, K+ or K- of the sector realization on weighted-gauge samples.

    K0  = 1/4 [-d^2/dr^2 - (2mu/r) d/dr (+ 2mu/r^2 when odd) + r^2]
    K+- = 1/2 [+-r d/dr - r^2 + 2 K0 +- (1/2 + mu)]
    """
    require_mu(mu)
    grid = psi.grid
    if not isinstance(grid, HalfLineGrid):
        raise TypeError("differential realization acts on half-line samples")
    op = Generator(op)
    sector = Sector(sector)
    u = np.asarray(psi.values)
    r = grid.points
    k0 = 0.25 * (radial_dunkl_laplacian(u, grid, mu, sector.parity) + r * r * u)
    if op is Generator.K0:
        return GridFunc(grid, k0)
    sign = 1.0 if op is Generator.K_PLUS else -1.0
    du = radial_derivative(u, grid, sector.parity)
    return GridFunc(grid, 0.5 * (sign * r * du - r * r * u + 2.0 * k0 + sign * (0.5 + mu) * u))


def ladder_residual(op: Generator, sector: Sector, mu: float, n: int, grid: HalfLineGrid) -> float:
    """Max pointwise gap between the differential and abstract actions on psi_n."""
    k = physical_index(sector, mu)
    psi = SturmianFunction(n, k, Gauge.WEIGHTED, sector).sample(grid)
    image = apply_differential(op, sector, mu, psi).values
    coefficient, target = sturmian_action(op, n, k)
    expected = np.zeros_like(image)
    if target >= 0:
        expected = coefficient * SturmianFunction(target, k, Gauge.WEIGHTED, sector).sample(grid).values
    return float(np.max(np.abs(image - expected)))


def recovered_coefficient(op: Generator, sector: Sector, mu: float, n: int, grid: HalfLineGrid) -> float:
    """<psi_target, K psi_n> under r^{2mu} dr by the midpoint rule."""
    k = physical_index(sector, mu)
    psi = SturmianFunction(n, k, Gauge.WEIGHTED, sector).sample(grid)
    image = apply_differential(op, sector, mu, psi).values
    _, target = sturmian_action(op, n, k)
    if target < 0:
        return float(np.sum(image * image * grid.points ** (2 * mu)) * grid.h) ** 0.5
    partner = SturmianFunction(target, k, Gauge.WEIGHTED, sector).sample(grid).values
    return float(np.sum(partner * image * grid.points ** (2 * mu)) * grid.h)
