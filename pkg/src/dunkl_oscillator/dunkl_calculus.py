"""Dunkl derivative, reflection and the deformed ladder operators.

Two representations are supported:

* ``PolyFunc`` - exact polynomial coefficients (floats or ``fractions.Fraction``).
  Ladder operators act on the polynomial part p of p(x) e^{-x^2/2}; the
  Gaussian is factored out analytically so the representation is closed.
* ``GridFunc`` - samples on a staggered symmetric grid x_j = (j + 1/2) h,
  j = -N..N-1, on which reflection is an exact index reversal.

All lengths are in units of b = sqrt(hbar / m omega).
"""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, NamedTuple

import numpy as np

from .errors import require_mu

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"

    @property
    def sign(self) -> int:
        return 1 if self is Parity.EVEN else -1


@dataclass(frozen=True, eq=False)
class PolyFunc:
    """Polynomial sum_j coeffs[j] x^j with trailing zeros trimmed."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs)
        if c.ndim != 1 or c.size == 0:
            c = np.zeros(1, dtype=c.dtype if c.size else float)
        nonzero = np.nonzero(c != 0)[0]
        c = c[: nonzero[-1] + 1] if nonzero.size else c[:1] * 0
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def monomial(cls, n: int, coefficient=1.0) -> "PolyFunc":
        c = np.zeros(n + 1, dtype=object if isinstance(coefficient, Fraction) else float)
        c[n] = coefficient
        return cls(c)

    @classmethod
    def zero(cls) -> "PolyFunc":
        return cls(np.zeros(1))

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @property
    def is_zero(self) -> bool:
        return bool(np.all(self.coeffs == 0))

    def even_part(self) -> "PolyFunc":
        c = self.coeffs.copy()
        c[1::2] = 0
        return PolyFunc(c)

    def odd_part(self) -> "PolyFunc":
        c = self.coeffs.copy()
        c[0::2] = 0
        return PolyFunc(c)

    def _padded(self, size: int) -> np.ndarray:
        c = self.coeffs
        if c.size >= size:
            return c
        pad = np.zeros(size - c.size, dtype=c.dtype)
        if c.dtype == object:
            pad[:] = 0
        return np.concatenate([c, pad])

    def __add__(self, other: "PolyFunc") -> "PolyFunc":
        size = max(self.coeffs.size, other.coeffs.size)
        return PolyFunc(self._padded(size) + other._padded(size))

    def __sub__(self, other: "PolyFunc") -> "PolyFunc":
        return self + (-other)

    def __neg__(self) -> "PolyFunc":
        return PolyFunc(-self.coeffs)

    def __mul__(self, scalar) -> "PolyFunc":
        return PolyFunc(self.coeffs * scalar)

    __rmul__ = __mul__

    def times_x(self) -> "PolyFunc":
        zero = np.zeros(1, dtype=self.coeffs.dtype)
        if zero.dtype == object:
            zero[:] = 0
        return PolyFunc(np.concatenate([zero, self.coeffs]))

    def derivative(self) -> "PolyFunc":
        if self.coeffs.size == 1:
            return PolyFunc(self.coeffs * 0)
        return PolyFunc(self.coeffs[1:] * np.arange(1, self.coeffs.size))

    def __call__(self, x):
        return np.polynomial.polynomial.polyval(x, self.coeffs)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs.astype(float))))

    def distance(self, other: "PolyFunc") -> float:
        """Max coefficient difference."""
        return (self - other).max_abs()


@dataclass(frozen=True)
class SymmetricGrid:
    """Staggered full-line grid x_j = (j + 1/2) h for j = -N..N-1."""

    h: float
    n_half: int

    @property
    def size(self) -> int:
        return 2 * self.n_half

    @property
    def points(self) -> np.ndarray:
        return (np.arange(-self.n_half, self.n_half) + 0.5) * self.h

    def reflection_index(self) -> np.ndarray:
        """Array index of the mirror node, j -> -j-1."""
        return np.arange(self.size)[::-1]

    def sample(self, f: Callable) -> "GridFunc":
        return GridFunc(self, np.asarray(f(self.points)))


@dataclass(frozen=True)
class HalfLineGrid:
    """Staggered half-line grid r_j = (j + 1/2) h for j = 0..size-1."""

    h: float
    size: int

    @classmethod
    def covering(cls, r_max: float, size: int) -> "HalfLineGrid":
        return cls(h=r_max / size, size=size)

    @property
    def points(self) -> np.ndarray:
        return (np.arange(self.size) + 0.5) * self.h

    @property
    def r_max(self) -> float:
        return self.size * self.h


@dataclass(frozen=True, eq=False)
class GridFunc:
    grid: "SymmetricGrid | HalfLineGrid"
    values: np.ndarray

    def __post_init__(self):
        if len(self.values) != self.grid.size:
            raise ValueError(f"expected {self.grid.size} samples, got {len(self.values)}")


def reflect(f):
    """(Rf)(x) = f(-x) for PolyFunc or GridFunc."""
    if isinstance(f, PolyFunc):
        signs = np.where(np.arange(f.coeffs.size) % 2 == 1, -1, 1)
        return PolyFunc(f.coeffs * signs)
    if isinstance(f, GridFunc) and isinstance(f.grid, SymmetricGrid):
        return GridFunc(f.grid, np.asarray(f.values)[::-1].copy())
    raise TypeError(f"cannot reflect {type(f).__name__}")


def dunkl_gammas(size: int, mu) -> list:
    """gamma_n for n < size: n for even n, n + 2 mu for odd n."""
    return [n + 2 * mu if n % 2 else n for n in range(size)]


def dunkl_derivative(f: PolyFunc, mu) -> PolyFunc:
    """Exact D x^n = gamma_n x^{n-1}."""
    require_mu(mu)
    c = f.coeffs
    if c.size == 1:
        return PolyFunc(c * 0)
    gammas = np.array(dunkl_gammas(c.size, mu)[1:], dtype=c.dtype if c.dtype == object else float)
    return PolyFunc(c[1:] * gammas)


def dunkl_derivative_grid(f: GridFunc, mu: float) -> GridFunc:
    """Central differences plus the exact reflection difference mu/x (f - Rf)."""
    require_mu(mu)
    if not isinstance(f.grid, SymmetricGrid):
        raise TypeError("grid Dunkl derivative needs a symmetric grid")
    values = np.asarray(f.values)
    x = f.grid.points
    derivative = np.gradient(values, f.grid.h)
    return GridFunc(f.grid, derivative + mu / x * (values - values[::-1]))


def _first_derivative(u: np.ndarray, h: float, ghost_sign: int) -> np.ndarray:
    ext = np.concatenate(([ghost_sign * u[0]], u))
    du = np.empty_like(u)
    du[:-1] = (ext[2:] - ext[:-2]) / (2.0 * h)
    du[-1] = (3.0 * u[-1] - 4.0 * u[-2] + u[-3]) / (2.0 * h)
    return du


def _second_derivative(u: np.ndarray, h: float, ghost_sign: int) -> np.ndarray:
    ext = np.concatenate(([ghost_sign * u[0]], u))
    d2 = np.empty_like(u)
    d2[:-1] = (ext[2:] - 2.0 * ext[1:-1] + ext[:-2]) / h**2
    d2[-1] = (2.0 * u[-1] - 5.0 * u[-2] + 4.0 * u[-3] - u[-4]) / h**2
    return d2


def radial_derivative(values, grid: HalfLineGrid, parity: Parity) -> np.ndarray:
    """d/dr with a mirrored ghost node at r = -h/2 fixed by the parity."""
    return _first_derivative(np.asarray(values), grid.h, parity.sign)


def radial_dunkl_laplacian(values, grid: HalfLineGrid, mu: float, parity: Parity) -> np.ndarray:
    """Weighted-gauge radial operator -psi'' - (2mu/r) psi' (+ 2mu/r^2 psi when odd).

    The odd form is evaluated as -psi'' - 2mu (psi/r)', the same operator,
    which stays second order at the first node.
    """
    u = np.asarray(values)
    r = grid.points
    d2 = _second_derivative(u, grid.h, parity.sign)
    if parity is Parity.EVEN:
        return -d2 - 2.0 * mu * _first_derivative(u, grid.h, 1) / r
    return -d2 - 2.0 * mu * _first_derivative(u / r, grid.h, 1)


class LadderPair(NamedTuple):
    annihilate: Callable[[PolyFunc], PolyFunc]
    create: Callable[[PolyFunc], PolyFunc]


def ladder_ops(mu) -> LadderPair:
    """a_D = (x + D)/sqrt2 and a_D^dagger = (x - D)/sqrt2 on polynomial parts.

    With f = p e^{-x^2/2}, D f = (D p - x p) e^{-x^2/2}, hence
    a_D: p -> D p / sqrt2 and a_D^dagger: p -> (2 x p - D p) / sqrt2.
    """
    require_mu(mu)

    def annihilate(p: PolyFunc) -> PolyFunc:
        return dunkl_derivative(p, mu) * _INV_SQRT2

    def create(p: PolyFunc) -> PolyFunc:
        return (p.times_x() * 2 - dunkl_derivative(p, mu)) * _INV_SQRT2

    return LadderPair(annihilate, create)


class NumberProducts(NamedTuple):
    lowered_last: Callable[[PolyFunc], PolyFunc]  # a_D a_D^dagger
    raised_last: Callable[[PolyFunc], PolyFunc]  # a_D^dagger a_D


def number_products(mu) -> NumberProducts:
    """Compositions a_D a_D^dagger and a_D^dagger a_D of the ladder maps."""
    a, a_dag = ladder_ops(mu)
    return NumberProducts(lambda p: a(a_dag(p)), lambda p: a_dag(a(p)))


def _radial_part(p: PolyFunc, mu) -> PolyFunc:
    """p'' + (2mu/x) p' - (mu/x^2)(1 - R) p, exact per monomial."""
    c = p.coeffs
    out = [0 * c[0]] * max(c.size - 2, 1)
    for n in range(2, c.size):
        odd = 2 if n % 2 else 0
        out[n - 2] = c[n] * (n * (n - 1) + 2 * mu * n - mu * odd)
    # n = 1: 2mu x^0 / x - 2mu x / x^2 cancels, no 1/x term survives
    return PolyFunc(np.array(out, dtype=c.dtype if c.dtype == object else float))


def number_products_closed(mu) -> NumberProducts:
    """Closed second-order forms of a_D a_D^dagger and a_D^dagger a_D.

    a_D a_D^dagger = 1/2 [x^2 + 2mu R + 1 - d^2 - (2mu/x) d + (mu/x^2)(1 - R)]
    a_D^dagger a_D = 1/2 [x^2 - 2mu R - 1 - d^2 - (2mu/x) d + (mu/x^2)(1 - R)]

    conjugated through the Gaussian envelope onto polynomial parts.
    """
    require_mu(mu)

    def common(p: PolyFunc) -> PolyFunc:
        # 2mu p + 2 x p' - (radial part), shared by both products
        return p * (2 * mu) + p.derivative().times_x() * 2 - _radial_part(p, mu)

    def lowered_last(p: PolyFunc) -> PolyFunc:
        return (p * 2 + reflect(p) * (2 * mu) + common(p)) * 0.5

    def raised_last(p: PolyFunc) -> PolyFunc:
        return (common(p) - reflect(p) * (2 * mu)) * 0.5

    return NumberProducts(lowered_last, raised_last)
