"""Dirac-Dunkl oscillator in one dimension: spectra, eigenspinors and checks.

Units: energies in mc^2, lengths in b = sqrt(hbar / m omega), and the
coupling kappa = hbar omega / mc^2. The dimensionless Hamiltonian is

    h = sqrt(kappa) alpha (-i D - i x beta) + beta

so the spinor components obey the real first-order pair

    (E - 1) Psi1 = sqrt(2 kappa) a_D^dagger Psi2
    (E + 1) Psi2 = sqrt(2 kappa) a_D Psi1.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .dunkl_calculus import GridFunc, HalfLineGrid, PolyFunc, SymmetricGrid, ladder_ops, radial_dunkl_laplacian
from .errors import DomainError, PreconditionError, require_kappa, require_mu
from .numerical_oracle import ALPHA, BETA, dirac_hamiltonian, reflection_matrix
from .special_functions import dunkl_moment_integral, laguerre, laguerre_coefficients, ln_gamma
from .su11_algebra import Gauge, Sector, SturmianFunction, physical_index

logger = logging.getLogger("dunkl-oscillator")

# amplitude ratio at R_max above which a grid does not hold the state
TAIL_LIMIT = 1e-6
# decoupled residual ceiling at h = 0.005 for n <= 2, set by the interior h^2 |psi''''|/12 error
DECOUPLED_RESIDUAL_BOUND = 3e-4


class Branch(str, Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def sign(self) -> int:
        return 1 if self is Branch.PLUS else -1


class Case(str, Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class PhysParams:
    mu: float
    kappa: float
    branch: Branch = Branch.PLUS

    def __post_init__(self):
        require_mu(self.mu)
        require_kappa(self.kappa)
        object.__setattr__(self, "branch", Branch(self.branch))


@dataclass(frozen=True)
class ParitySector:
    """Case A: Psi1 even, Psi2 odd, phi = 0. Case B: Psi1 odd, Psi2 even, phi = pi."""

    case_id: Case

    @property
    def phi(self) -> float:
        return 0.0 if Case(self.case_id) is Case.A else math.pi

    @property
    def upper(self) -> Sector:
        return Sector.PLUS if Case(self.case_id) is Case.A else Sector.MINUS

    @property
    def lower(self) -> Sector:
        return Sector.MINUS if Case(self.case_id) is Case.A else Sector.PLUS


class DiracStructure:
    alpha = ALPHA
    beta = BETA

    @staticmethod
    def parity_op(phi: float) -> np.ndarray:
        return np.exp(1j * phi) * BETA

    @classmethod
    def clifford_defect(cls) -> float:
        """Max deviation from alpha beta + beta alpha = 0, alpha^2 = beta^2 = 1, P^-1 alpha P = -alpha."""
        identity = np.eye(2)
        parity = cls.parity_op(0.7)
        checks = (
            cls.alpha @ cls.beta + cls.beta @ cls.alpha,
            cls.alpha @ cls.alpha - identity,
            cls.beta @ cls.beta - identity,
            np.linalg.inv(parity) @ cls.alpha @ parity + cls.alpha,
        )
        return float(max(np.max(np.abs(c)) for c in checks))


def level_number(case: Case, n: int, mu: float) -> float:
    """n for case A, n + 1/2 + mu for case B, so that E^2 = 1 + 4 kappa level."""
    if n < 0:
        raise DomainError(f"level must be non-negative, got {n}")
    return n if Case(case) is Case.A else n + 0.5 + mu


def energy(case: Case, n: int, params: PhysParams) -> float:
    """Signed energy in units of mc^2."""
    return params.branch.sign * math.sqrt(1 + 4 * params.kappa * level_number(case, n, params.mu))


def unified_quantum_number(n: int, mu: float) -> float:
    return n + (mu / 2 + 0.5) * (1 - (-1) ** n)


def interleaved_quantum_number(big_n: int, mu: float) -> float:
    return big_n + mu * (1 - (-1) ** big_n)


def unified_energy(n: int, params: PhysParams) -> float:
    """Single-expression spectrum with n_mu = n + (mu/2 + 1/2)(1 - (-1)^n)."""
    return params.branch.sign * math.sqrt(1 + 4 * params.kappa * unified_quantum_number(n, params.mu))


def interleaved_energy(big_n: int, params: PhysParams) -> float:
    """E = sqrt(1 + 2 kappa N_mu): even N is case A at N/2, odd N is case B at (N-1)/2."""
    return params.branch.sign * math.sqrt(1 + 2 * params.kappa * interleaved_quantum_number(big_n, params.mu))


@dataclass(frozen=True)
class LevelMatch:
    formulation: str
    n: int
    value: float
    matched_case: Case
    matched_n: int
    delta: float


@dataclass(frozen=True)
class ReconciliationReport:
    mu: float
    kappa: float
    levels: int
    tolerance: float
    unified: tuple
    interleaved: tuple
    unified_covers_union: bool
    interleaved_covers_union: bool

    @property
    def unified_members(self) -> bool:
        return all(abs(m.delta) <= self.tolerance for m in self.unified)

    @property
    def interleaved_members(self) -> bool:
        return all(abs(m.delta) <= self.tolerance for m in self.interleaved)

    @property
    def flagged(self) -> bool:
        return not (self.unified_members and self.unified_covers_union)


def _nearest(value: float, candidates: list) -> tuple:
    case, n, target = min(candidates, key=lambda c: abs(c[2] - value))
    return case, n, value - target


def reconcile_spectrum(params: PhysParams, levels: int = 10, tol: float = 1e-12) -> ReconciliationReport:
    """Compare the unified and interleaved spectra with the per-case union.

    Per-level membership looks for the nearest per-case level; coverage asks
    whether the first ``levels`` values are exactly the balanced union of
    ceil(levels/2) case-A and floor(levels/2) case-B levels.
    """
    plus = PhysParams(params.mu, params.kappa, Branch.PLUS)
    depth = 2 * levels + 2
    candidates = [(case, m, energy(case, m, plus)) for case in Case for m in range(depth)]
    matches = {}
    for name, formula in (("unified", unified_energy), ("interleaved", interleaved_energy)):
        rows = []
        for n in range(levels):
            value = formula(n, plus)
            case, m, delta = _nearest(value, candidates)
            rows.append(LevelMatch(name, n, value, case, m, delta))
        matches[name] = tuple(rows)
    union = sorted(
        [energy(Case.A, m, plus) for m in range((levels + 1) // 2)]
        + [energy(Case.B, m, plus) for m in range(levels // 2)]
    )

    def covers(rows) -> bool:
        values = sorted(m.value for m in rows)
        return all(abs(a - b) <= tol for a, b in zip(values, union))

    report = ReconciliationReport(
        mu=params.mu,
        kappa=params.kappa,
        levels=levels,
        tolerance=tol,
        unified=matches["unified"],
        interleaved=matches["interleaved"],
        unified_covers_union=covers(matches["unified"]),
        interleaved_covers_union=covers(matches["interleaved"]),
    )
    if report.flagged:
        worst = max(abs(m.delta) for m in report.unified)
        logger.warning(
            f"unified spectrum disagrees with per-case levels at mu={params.mu}: max delta {worst:.3e}"
        )
    return report


@dataclass(frozen=True)
class SpinorState:
    """Eigenspinor of one parity sector; profiles are real, the lower phase is metadata."""

    sector: ParitySector
    n: int
    params: PhysParams
    energy: float
    upper_weight: float
    lower_weight: float
    upper_level: int
    lower_level: int | None

    @property
    def lower_phase(self) -> complex:
        return -1j if self.params.branch is Branch.PLUS else 1j

    @property
    def lower_sign(self) -> int:
        """Real factor of the lower profile when h is written with real couplings.

        a p1 is a negative multiple of p2 in case A (d/dt L_n = -L_{n-1}) and a
        positive one in case B, and E + 1 changes sign with the branch.
        """
        sign = -1 if Case(self.sector.case_id) is Case.A else 1
        return sign * self.params.branch.sign

    def _profile(self, sector: Sector, level: int | None, weight: float, r, gauge: Gauge):
        r = np.asarray(r, dtype=float)
        if level is None or weight == 0.0:
            return np.zeros_like(r) if r.ndim else 0.0
        k = physical_index(sector, self.params.mu)
        return weight * SturmianFunction(level, k, gauge, sector)(r)

    def psi1(self, r, gauge: Gauge = Gauge.HALF_DENSITY):
        return self._profile(self.sector.upper, self.upper_level, self.upper_weight, r, gauge)

    def psi2(self, r, gauge: Gauge = Gauge.HALF_DENSITY):
        return self._profile(self.sector.lower, self.lower_level, self.lower_weight, r, gauge)

    def norm(self, tol: float = 1e-12, cap: int = 512) -> float:
        """Joint half-line norm of the half-density components by Gauss-Laguerre.

        In t = r^2 a component at level m carries w^2 N^2 t^s L_m^{2k-1}(t)^2, a
        polynomial of degree 2m + s, so the quadrature is exact at a fixed order.
        Laguerre values come from the recurrence; the monomial form cancels badly
        for high levels.
        """
        parts = []
        for sector, level, weight in (
            (self.sector.upper, self.upper_level, self.upper_weight),
            (self.sector.lower, self.lower_level, self.lower_weight),
        ):
            if level is None or weight == 0.0:
                continue
            k = physical_index(sector, self.params.mu)
            scale = weight * weight * 2.0 * math.exp(ln_gamma(level + 1) - ln_gamma(level + 2 * k))
            parts.append((scale, sector.power, level, 2 * k - 1))

        def density(t):
            return sum(scale * t**s * laguerre(level, alpha, t) ** 2 for scale, s, level, alpha in parts)

        degree = max(2 * level + s for _, s, level, _ in parts)
        return dunkl_moment_integral(density, self.params.mu, tol=tol, cap=cap, degree=degree)

    def polynomial_parts(self) -> tuple[PolyFunc, PolyFunc]:
        """Full-line polynomial parts p of the weighted-gauge components p(x) e^{-x^2/2}."""
        return (
            _component_poly(self.sector.upper, self.upper_level, self.upper_weight, self.params.mu),
            _component_poly(self.sector.lower, self.lower_level, self.lower_weight, self.params.mu),
        )


def _component_poly(sector: Sector, level: int | None, weight: float, mu: float) -> PolyFunc:
    if level is None or weight == 0.0:
        return PolyFunc.zero()
    k = physical_index(sector, mu)
    norm = math.sqrt(2.0 * math.exp(ln_gamma(level + 1) - ln_gamma(level + 2 * k)))
    in_t = laguerre_coefficients(level, 2 * k - 1)
    coeffs = np.zeros(2 * level + 1 + sector.power)
    coeffs[sector.power::2] = in_t
    return PolyFunc(weight * norm * coeffs)


def spinor(case: Case, n: int, params: PhysParams) -> SpinorState:
    """Normalized eigenspinor; both components sit at the same energy level.

    Case A: Psi1 ~ r^mu L_n^{mu-1/2}(r^2), Psi2 ~ r^{1+mu} L_{n-1}^{mu+1/2}(r^2).
    Case B: Psi1 ~ r^{1+mu} L_n^{mu+1/2}(r^2), Psi2 ~ r^mu L_n^{mu-1/2}(r^2).
    """
    case = Case(case)
    if n < 0:
        raise DomainError(f"level must be non-negative, got {n}")
    e = energy(case, n, params)
    if case is Case.A and n == 0:
        if params.branch is Branch.MINUS:
            raise DomainError("case A ground level exists only on the positive branch (E = +mc^2)")
        return SpinorState(ParitySector(case), 0, params, e, 1.0, 0.0, 0, None)
    upper = math.sqrt((e + 1) / (2 * e))
    lower = math.sqrt((e - 1) / (2 * e))
    lower_level = n - 1 if case is Case.A else n
    return SpinorState(ParitySector(case), n, params, e, upper, lower, n, lower_level)


def _tail_check(values: np.ndarray, label: str) -> None:
    peak = float(np.max(np.abs(values)))
    if peak > 0 and abs(values[-1]) / peak > TAIL_LIMIT:
        raise PreconditionError(f"{label} is not resolved: amplitude at R_max is {abs(values[-1]) / peak:.2e} of peak")


def decoupled_residual(case: Case, n: int, params: PhysParams, grid: HalfLineGrid) -> tuple[float, float]:
    """Max residuals of the second-order component equations on weighted-gauge samples.

    Psi1 obeys (L - 1 - 2mu R) Psi1 = lambda Psi1 and Psi2 obeys (L + 1 + 2mu R) Psi2 = lambda Psi2,
    with L the sector operator and lambda = (E^2 - 1) / kappa.
    """
    state = spinor(case, n, params)
    target = 4 * level_number(case, n, params.mu)
    r = grid.points
    residuals = []
    for sector, level, sign in (
        (state.sector.upper, state.upper_level, -1.0),
        (state.sector.lower, state.lower_level, 1.0),
    ):
        if level is None:
            residuals.append(0.0)
            continue
        psi = SturmianFunction.physical(sector, params.mu, level)(r)
        _tail_check(psi, f"{sector.value} level {level}")
        parity = sector.parity
        shift = sign * (1 + 2 * params.mu * parity.sign)
        image = radial_dunkl_laplacian(psi, grid, params.mu, parity) + r * r * psi + shift * psi
        residuals.append(float(np.max(np.abs(image - target * psi))))
    logger.debug(f"decoupled residuals case {Case(case).value} n={n}: {residuals}")
    return residuals[0], residuals[1]


@dataclass(frozen=True)
class CoupledCheck:
    defect1: float
    defect2: float
    sign: int


def coupled_defects(state: SpinorState) -> CoupledCheck:
    """Relative coefficient defects of the first-order pair on exact polynomial parts.

    The pair is (E - 1) p1 = s sqrt(2 kappa) a^dagger p2 and s (E + 1) p2 = sqrt(2 kappa) a p1
    with s = ``state.lower_sign``; no other sign is tried.
    """
    p1, p2 = state.polynomial_parts()
    a, a_dag = ladder_ops(state.params.mu)
    e = state.energy
    coupling = math.sqrt(2 * state.params.kappa)
    scale = max(1.0, p1.max_abs(), p2.max_abs())
    s = state.lower_sign
    d1 = (p1 * (e - 1) - a_dag(p2 * s) * coupling).max_abs() / scale
    d2 = (p2 * (s * (e + 1)) - a(p1) * coupling).max_abs() / scale
    return CoupledCheck(d1, d2, s)


def coupled_check(case: Case, n: int, params: PhysParams) -> CoupledCheck:
    return coupled_defects(spinor(case, n, params))


def parity_operator(grid: SymmetricGrid, phi: float) -> np.ndarray:
    """Matrix of P R = e^{i phi} beta R on spinor-major grid vectors."""
    return np.exp(1j * phi) * np.kron(BETA, reflection_matrix(grid.size))


def parity_commutator(params: PhysParams, grid: SymmetricGrid, phi: float) -> float:
    """Max-norm of [h, P R] for the discretized Hamiltonian."""
    h = dirac_hamiltonian(params.mu, params.kappa, grid)
    p = parity_operator(grid, phi)
    return float(np.max(np.abs(h @ p - p @ h)))


@dataclass(frozen=True)
class ParityVerdict:
    defect: float
    phi: float
    violated: bool


def parity_violation(psi1: GridFunc, psi2: GridFunc, tol: float = 1e-10) -> ParityVerdict:
    """Best-phase relative defect of Psi = P R Psi over phi in {0, pi}."""
    if not isinstance(psi1.grid, SymmetricGrid):
        raise TypeError("parity check needs a symmetric grid")
    if psi2.grid != psi1.grid:
        raise ValueError(f"components sit on different grids: {psi1.grid} and {psi2.grid}")
    spinor_values = np.concatenate([np.asarray(psi1.values), np.asarray(psi2.values)]).astype(complex)
    peak = float(np.max(np.abs(spinor_values))) or 1.0
    best = None
    for phi in (0.0, math.pi):
        image = parity_operator(psi1.grid, phi) @ spinor_values
        defect = float(np.max(np.abs(image - spinor_values))) / peak
        if best is None or defect < best[0]:
            best = (defect, phi)
    return ParityVerdict(best[0], best[1], best[0] > tol)


def hermite_function(n: int, x):
    """Normalized Hermite function (2^n n! sqrt(pi))^{-1/2} H_n(x) e^{-x^2/2}."""
    x = np.asarray(x, dtype=float)
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    log_norm = -0.5 * (n * math.log(2.0) + ln_gamma(n + 1) + 0.5 * math.log(math.pi))
    return math.exp(log_norm) * np.polynomial.hermite.hermval(x, coeffs) * np.exp(-x * x / 2)


@dataclass(frozen=True)
class ReductionRecord:
    case: Case
    n: int
    standard_level: int
    energy: float
    standard_energy: float
    energies_equal: bool
    upper_ratios: tuple
    lower_ratios: tuple

    @staticmethod
    def _spread(ratios: tuple) -> float:
        if not ratios:
            return 0.0
        return (max(ratios) - min(ratios)) / max(abs(v) for v in ratios)

    @property
    def ratio_spread(self) -> float:
        return max(self._spread(self.upper_ratios), self._spread(self.lower_ratios))


def mu_zero_reduction(case: Case, n: int, kappa: float = 0.5, abscissae=(0.3, 0.7, 1.1, 1.6, 2.2)) -> ReductionRecord:
    """Compare the mu = 0 eigenspinor with the standard Dirac-Moshinsky one at level 2n or 2n+1."""
    case = Case(case)
    params = PhysParams(0.0, kappa)
    state = spinor(case, n, params)
    standard = 2 * n if case is Case.A else 2 * n + 1
    standard_energy = math.sqrt(1 + 2 * kappa * standard)
    x = np.asarray(abscissae, dtype=float)
    upper_ref = math.sqrt((standard_energy + 1) / (2 * standard_energy)) * hermite_function(standard, x)
    upper = tuple(float(v) for v in state.psi1(x) / upper_ref)
    lower = ()
    if standard > 0:
        lower_ref = math.sqrt((standard_energy - 1) / (2 * standard_energy)) * hermite_function(standard - 1, x)
        lower = tuple(float(v) for v in state.psi2(x) / lower_ref)
    return ReductionRecord(case, n, standard, state.energy, standard_energy,
                           state.energy == standard_energy, upper, lower)


def kappa_from(hbar: float, omega: float, mass: float, c: float) -> float:
    return hbar * omega / (mass * c * c)


def to_physical_units(value: float, mass: float, c: float) -> float:
    """Energy in mc^2 units to absolute units."""
    return value * mass * c * c
