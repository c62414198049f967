"""Perelomov SU(1,1) coherent states over the Sturmian ladder.

    |zeta> = (1 - |zeta|^2)^k sum_n sqrt(Gamma(n+2k) / (n! Gamma(2k))) zeta^n |k, n>

The series is the definition. Summing it with the Laguerre generating
function sum_n L_n^nu(x) y^n = e^{-xy/(1-y)} / (1-y)^{nu+1} gives the closed
form; a variant with the opposite sign in the generating exponent is kept for
comparison.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import expm

from .dirac_dunkl import Case, ParitySector, PhysParams
from .errors import DomainError, NumericError
from .special_functions import laguerre_integral, laguerre_terms, ln_gamma
from .su11_algebra import Generator, ladder_matrix, physical_index, sturmian_action

logger = logging.getLogger("dunkl-oscillator")

MAX_TERMS = 20000
NORM_WEIGHT_CUTOFF = 1e-30


class ClosedForm(str, Enum):
    GENERATING = "generating"
    FLIPPED = "flipped"


def zeta_from_xi(xi: complex) -> complex:
    """Disc point of the displacement exp(xi K+ - xi* K-).

    tanh|xi| rounds to 1.0 for |xi| above about 19, so the modulus is kept
    strictly inside the unit disc for every finite xi.
    """
    modulus = abs(xi)
    if modulus == 0:
        return 0j
    radius = min(math.tanh(modulus), math.nextafter(1.0, 0.0))
    zeta = complex(xi) / modulus * radius
    while abs(zeta) >= 1.0:
        radius = math.nextafter(radius, 0.0)
        zeta = complex(xi) / modulus * radius
    return zeta


@dataclass(frozen=True)
class CoherentParams:
    zeta: complex
    k: float
    xi: complex | None = None

    def __post_init__(self):
        if not self.k > 0:
            raise DomainError(f"Bargmann index must be positive, got {self.k}")
        if not abs(self.zeta) < 1:
            raise DomainError(f"coherent states need |zeta| < 1, got |zeta| = {abs(self.zeta)}")
        object.__setattr__(self, "zeta", complex(self.zeta))

    @classmethod
    def from_xi(cls, xi: complex, k: float) -> "CoherentParams":
        return cls(zeta_from_xi(xi), k, complex(xi))


def coherent_coefficients(p: CoherentParams, count: int) -> np.ndarray:
    """Expansion coefficients on |k, n> for n < count."""
    modulus = abs(p.zeta)
    out = np.zeros(count, dtype=complex)
    if modulus == 0:
        out[0] = 1.0
        return out
    phase = p.zeta / modulus
    for n in range(count):
        log_mag = (p.k * math.log1p(-modulus * modulus) + 0.5 * (ln_gamma(n + 2 * p.k) - ln_gamma(n + 1) - ln_gamma(2 * p.k))
                   + n * math.log(modulus))
        out[n] = math.exp(log_mag) * phase**n
    return out


def _prefactor(p: CoherentParams, r: np.ndarray) -> np.ndarray:
    """(1 - |zeta|^2)^k sqrt(2 / Gamma(2k)) r^{2k - 1/2} e^{-r^2/2}."""
    scale = math.exp(p.k * math.log1p(-abs(p.zeta) ** 2) + 0.5 * (math.log(2.0) - ln_gamma(2 * p.k)))
    return scale * r ** (2 * p.k - 0.5) * np.exp(-r * r / 2)


def laguerre_series(zeta: complex, alpha: float, t, tol: float = 1e-12, terms: int | None = None,
                    weight=1.0) -> np.ndarray:
    """sum_n zeta^n L_n^alpha(t), truncated by the geometric tail bound.

    With C the running maximum of |L_n^alpha(t)|, summation stops once
    max(weight * C) |zeta|^{n+1} / (1 - |zeta|) <= tol and n is past the
    oscillatory region of the Laguerre polynomials.
    """
    t = np.asarray(t, dtype=float)
    modulus = abs(zeta)
    weight = np.abs(np.asarray(weight, dtype=float))
    t_max = float(np.max(t)) if t.size else 0.0
    n_min = int(2 * (modulus * t_max + alpha + 1)) + 10
    total = np.zeros(t.shape, dtype=complex)
    running = np.zeros(t.shape)
    power = 1.0 + 0j
    for n, term in enumerate(laguerre_terms(alpha, t)):
        if terms is not None and n >= terms:
            return total
        total = total + power * term
        if terms is None:
            if modulus == 0:
                return total
            running = np.maximum(running, np.abs(term))
            tail = float(np.max(weight * running)) * modulus ** (n + 1) / (1 - modulus)
            if n >= n_min and tail <= tol:
                logger.debug(f"coherent series truncated after {n + 1} terms (tail bound {tail:.2e})")
                return total
            if n >= MAX_TERMS:
                raise NumericError(f"coherent series not converged after {MAX_TERMS} terms",
                                   iterations=n, estimates=(tail,))
        power *= zeta


def coherent_series(p: CoherentParams, r, tol: float = 1e-12, terms: int | None = None):
    """Half-density profile of |zeta> summed over the Sturmian ladder."""
    r = np.asarray(r, dtype=float)
    prefactor = _prefactor(p, r)
    value = prefactor * laguerre_series(p.zeta, 2 * p.k - 1, r * r, tol, terms, weight=prefactor)
    return value if value.ndim else complex(value)


def closed_exponent(zeta: complex, variant: ClosedForm) -> complex:
    """Coefficient of r^2 in the exponent of the closed form."""
    if ClosedForm(variant) is ClosedForm.GENERATING:
        return (1 + zeta) / (2 * (zeta - 1))
    return (1 - 3 * zeta) / (2 * (zeta - 1))


def coherent_closed(p: CoherentParams, r, variant: ClosedForm = ClosedForm.GENERATING):
    """[2(1-|zeta|^2)^{2k} / Gamma(2k)]^{1/2} r^{2k-1/2} (1-zeta)^{-2k} exp(c r^2)."""
    r = np.asarray(r, dtype=float)
    k = p.k
    scale = math.exp(k * math.log1p(-abs(p.zeta) ** 2) + 0.5 * (math.log(2.0) - ln_gamma(2 * k)))
    envelope = cmath.exp(-2 * k * cmath.log(1 - p.zeta))
    value = scale * envelope * r ** (2 * k - 0.5) * np.exp(closed_exponent(p.zeta, variant) * r * r)
    return value if value.ndim else complex(value)


def closed_series_deviation(p: CoherentParams, r, variant: ClosedForm = ClosedForm.GENERATING,
                            tol: float = 1e-13) -> float:
    """Max |closed - series| over the abscissae."""
    r = np.asarray(r, dtype=float)
    return float(np.max(np.abs(coherent_closed(p, r, variant) - coherent_series(p, r, tol))))


def coherent_norm(p: CoherentParams, tol: float = 1e-12, cap: int = 512) -> float:
    """Integral of |coherent_series|^2 over (0, inf).

    With t = r^2 this is 1/2 |A|^2 int t^{2k-1} e^{-beta t} |F(t)|^2 e^{(beta-1) t} dt,
    beta = Re((1+zeta)/(1-zeta)), F the Laguerre series; the Gauss-Laguerre rule
    is scaled by beta.
    """
    beta = ((1 + p.zeta) / (1 - p.zeta)).real
    amplitude = math.exp(2 * p.k * math.log1p(-abs(p.zeta) ** 2) + math.log(2.0) - ln_gamma(2 * p.k))

    def integrand(t):
        series = laguerre_series(p.zeta, 2 * p.k - 1, t, tol * 1e-2, weight=np.exp(-(1 + beta) * t / 2))
        return 0.5 * amplitude * np.abs(series) ** 2 * np.exp((beta - 1) * t)

    return float(laguerre_integral(integrand, 2 * p.k - 1, scale=beta, tol=tol, cap=cap,
                                   cutoff=NORM_WEIGHT_CUTOFF))


def binomial_identity_defect(p: CoherentParams, terms: int = 4000) -> float:
    """|sum_n |c_n|^2 - 1| from the coefficient moduli alone."""
    modulus = abs(p.zeta)
    if modulus == 0:
        return 0.0
    n = np.arange(terms)
    log_gamma_n = np.array([ln_gamma(j + 2 * p.k) - ln_gamma(j + 1) for j in range(terms)])
    logs = 2 * p.k * math.log1p(-modulus * modulus) + log_gamma_n - ln_gamma(2 * p.k) + 2 * n * math.log(modulus)
    return abs(float(np.sum(np.exp(logs))) - 1.0)


def displacement_check(xi: complex, k: float, size: int = 160, compared: int = 40) -> float:
    """Max gap between expm(xi K+ - xi* K-)|k,0> on a truncated ladder and the series coefficients."""
    generator = xi * ladder_matrix(Generator.K_PLUS, k, size) - np.conj(xi) * ladder_matrix(Generator.K_MINUS, k, size)
    column = expm(generator)[:, 0]
    expected = coherent_coefficients(CoherentParams.from_xi(xi, k), compared)
    return float(np.max(np.abs(column[:compared] - expected)))


def oscillator_realization_defect(k: float, nmax: int = 20) -> float:
    """Compare K+ = a^dag^2/2, K- = a^2/2, K0 = a^dag a/2 + 1/4 on even (k=1/4) or odd (k=3/4) Fock states."""
    if k not in (0.25, 0.75):
        raise DomainError(f"the oscillator realization carries k = 1/4 or 3/4, got {k}")
    offset = 0 if k == 0.25 else 1
    dim = 2 * nmax + offset + 3
    a = np.diag(np.sqrt(np.arange(1, dim)), 1)
    a_dag = a.T
    realization = {
        Generator.K_PLUS: a_dag @ a_dag / 2,
        Generator.K_MINUS: a @ a / 2,
        Generator.K0: a_dag @ a / 2 + np.eye(dim) / 4,
    }
    worst = 0.0
    for op, matrix in realization.items():
        for n in range(nmax + 1):
            coefficient, target = sturmian_action(op, n, k)
            column = matrix[:, 2 * n + offset]
            expected = np.zeros(dim)
            if target >= 0:
                expected[2 * target + offset] = coefficient
            worst = max(worst, float(np.max(np.abs(column - expected))))
    return worst


@dataclass(frozen=True)
class CoherentSpinor:
    sector: ParitySector
    params: PhysParams
    zeta: complex
    upper_k: float
    lower_k: float
    upper_constant: complex
    lower_constant: complex
    variant: ClosedForm = ClosedForm.GENERATING

    def psi1(self, r):
        return self.upper_constant * coherent_closed(CoherentParams(self.zeta, self.upper_k), r, self.variant)

    def psi2(self, r):
        return self.lower_constant * coherent_closed(CoherentParams(self.zeta, self.lower_k), r, self.variant)

    def norm(self, tol: float = 1e-12) -> float:
        return (abs(self.upper_constant) ** 2 * coherent_norm(CoherentParams(self.zeta, self.upper_k), tol)
                + abs(self.lower_constant) ** 2 * coherent_norm(CoherentParams(self.zeta, self.lower_k), tol))


def coherent_spinor(case: Case, params: PhysParams, zeta: complex, constants: tuple | None = None,
                    variant: ClosedForm = ClosedForm.GENERATING) -> CoherentSpinor:
    """Spinor of coherent states; the odd component uses k = 3/4 + mu/2, the even one k = 1/4 + mu/2.

    The default constants give both components weight 1/sqrt2.
    """
    sector = ParitySector(Case(case))
    if constants is None:
        constants = (1 / math.sqrt(2.0), 1 / math.sqrt(2.0))
    upper, lower = constants
    if not abs(zeta) < 1:
        raise DomainError(f"coherent states need |zeta| < 1, got |zeta| = {abs(zeta)}")
    return CoherentSpinor(
        sector=sector,
        params=params,
        zeta=complex(zeta),
        upper_k=physical_index(sector.upper, params.mu),
        lower_k=physical_index(sector.lower, params.mu),
        upper_constant=complex(upper),
        lower_constant=complex(lower),
        variant=ClosedForm(variant),
    )
