"""Verification suites and the machine-readable report.

Each suite family returns a list of entries with status pass, fail or
flagged. Flagged entries record known discrepancies between the unified
spectrum formula or the sign-flipped coherent exponent and the oracles;
they never fail a run.
"""
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np
from pydantic import BaseModel, Field
from scipy import special as sp

from . import special_functions
from .coherent_states import (
    ClosedForm,
    CoherentParams,
    binomial_identity_defect,
    closed_series_deviation,
    coherent_norm,
    coherent_spinor,
    displacement_check,
    oscillator_realization_defect,
)
from .config import Settings, format_number, get_settings
from .dirac_dunkl import (
    Branch,
    Case,
    DECOUPLED_RESIDUAL_BOUND,
    DiracStructure,
    PhysParams,
    coupled_check,
    decoupled_residual,
    mu_zero_reduction,
    parity_commutator,
    parity_violation,
    reconcile_spectrum,
    spinor,
)
from .dunkl_calculus import (
    GridFunc,
    HalfLineGrid,
    Parity,
    PolyFunc,
    SymmetricGrid,
    dunkl_derivative,
    ladder_ops,
    number_products,
    number_products_closed,
    reflect,
)
from .errors import DunklOscillatorError
from .numerical_oracle import (
    convergence_study,
    discretize_full_line,
    discretize_radial,
    eigensolve_sym,
    radial_exact,
    reflection_matrix,
)
from .su11_algebra import (
    Generator,
    Sector,
    ladder_matrix,
    ladder_residual,
    physical_index,
    recovered_coefficient,
    sturmian_action,
)

logger = logging.getLogger("dunkl-oscillator")

SCHEMA_VERSION = "1.0"
DEFAULT_MU_LIST = (0.0, 0.25, 0.5, 1.0)


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    FLAGGED = "flagged"


class VerificationEntry(BaseModel):
    suite: str
    name: str
    status: Status
    measured: float | None = None
    expected: float | None = None
    tolerance: float | None = None
    provenance: str = Field(description="closed-form, derived, trivial or plumbing")
    paper_ref: str = Field(description="identity or formula the expectation comes from; \"plumbing\" for infrastructure checks")
    detail: str | None = None


class Environment(BaseModel):
    mode: str
    mu_list: list[float]
    radial_points: int
    r_max: float
    quadrature_cap: int
    quadrature_tol: float


class Timing(BaseModel):
    total_seconds: float
    suites: dict[str, float]


class VerificationReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    environment: Environment
    entries: list[VerificationEntry]
    timing: Timing | None = None

    def count(self, status: Status) -> int:
        return sum(1 for e in self.entries if e.status is status)

    @property
    def passed(self) -> bool:
        return self.count(Status.FAIL) == 0

    def flagged_families(self) -> list[str]:
        return sorted({e.suite for e in self.entries if e.status is Status.FLAGGED})

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude={"timing"} if self.timing is None else None)


def report_schema() -> dict:
    return VerificationReport.model_json_schema()


def _num(value) -> float | None:
    if value is None:
        return None
    value = float(value)
    if not math.isfinite(value):
        return None
    return float(format_number(value))


def _check(suite: str, name: str, measured: float, tolerance: float, *, expected: float = 0.0,
           provenance: str = "derived", paper_ref: str, detail: str | None = None) -> VerificationEntry:
    ok = math.isfinite(float(measured)) and abs(float(measured) - expected) <= tolerance
    return VerificationEntry(
        suite=suite,
        name=name,
        status=Status.PASS if ok else Status.FAIL,
        measured=_num(measured),
        expected=_num(expected),
        tolerance=tolerance,
        provenance=provenance,
        paper_ref=paper_ref,
        detail=detail,
    )


def _expect(suite: str, name: str, condition: bool, *, paper_ref: str, measured: float | None = None,
            provenance: str = "derived", detail: str | None = None) -> VerificationEntry:
    return VerificationEntry(
        suite=suite,
        name=name,
        status=Status.PASS if condition else Status.FAIL,
        measured=_num(measured),
        provenance=provenance,
        paper_ref=paper_ref,
        detail=detail,
    )


def _flag(suite: str, name: str, discrepancy: float, threshold: float, *, paper_ref: str,
          detail: str) -> VerificationEntry:
    """A documented discrepancy: flagged when present, a failure when it vanishes."""
    present = math.isfinite(discrepancy) and abs(discrepancy) > threshold
    if present:
        logger.warning(f"{suite}/{name}: discrepancy {discrepancy:.3e} ({detail})")
    return VerificationEntry(
        suite=suite,
        name=name,
        status=Status.FLAGGED if present else Status.FAIL,
        measured=_num(discrepancy),
        tolerance=threshold,
        provenance="derived",
        paper_ref=paper_ref,
        detail=detail,
    )


@dataclass(frozen=True)
class SuiteContext:
    mode: str
    mu_list: tuple
    settings: Settings

    @property
    def quick(self) -> bool:
        return self.mode == "quick"


def _ladder_suite(ctx: SuiteContext) -> list[VerificationEntry]:
    suite = "ladder"
    entries = []
    for mu in ctx.mu_list:
        a, a_dag = ladder_ops(mu)
        composed, closed = number_products(mu), number_products_closed(mu)
        commutator = products = 0.0
        for degree in range(51):
            p = PolyFunc.monomial(degree)
            lhs = a(a_dag(p)) - a_dag(a(p))
            rhs = p + reflect(p) * (2 * mu)
            commutator = max(commutator, lhs.distance(rhs) / max(1.0, rhs.max_abs()))
            for left, right in zip(composed, closed):
                value = left(p)
                products = max(products, value.distance(right(p)) / max(1.0, value.max_abs()))
        entries.append(_check(suite, f"commutator mu={mu}", commutator, 1e-12, provenance="closed-form",
                              paper_ref="[a_D, a_D^dagger] = 1 + 2 mu R on degree <= 50"))
        entries.append(_check(suite, f"number products mu={mu}", products, 1e-12,
                              paper_ref="composed ladder products equal the closed second-order forms"))
    mu = ctx.mu_list[-1]
    reflection = anticommute = 0.0
    for degree in range(51):
        p = PolyFunc.monomial(degree)
        reflection = max(reflection, reflect(reflect(p)).distance(p))
        lhs = reflect(dunkl_derivative(p, mu))
        rhs = -dunkl_derivative(reflect(p), mu)
        anticommute = max(anticommute, lhs.distance(rhs))
    entries.append(_check(suite, "reflection involution", reflection, 0.0, provenance="trivial",
                          paper_ref="R^2 = 1"))
    entries.append(_check(suite, f"reflection anticommutes mu={mu}", anticommute, 0.0, provenance="trivial",
                          paper_ref="R D = -D R"))
    return entries


def _su11_suite(ctx: SuiteContext) -> list[VerificationEntry]:
    suite = "su11"
    entries = []
    checked = 31
    for mu in (0.0, 0.5):
        for sector in Sector:
            k = physical_index(sector, mu)
            size = checked + 2
            k0 = ladder_matrix(Generator.K0, k, size)
            kp = ladder_matrix(Generator.K_PLUS, k, size)
            km = ladder_matrix(Generator.K_MINUS, k, size)
            identity = np.eye(size)
            defects = (
                k0 @ kp - kp @ k0 - kp,
                k0 @ km - km @ k0 + km,
                km @ kp - kp @ km - 2 * k0,
            )
            commutation = max(float(np.max(np.abs(d[:checked, :checked]))) for d in defects)
            casimir = -kp @ km + k0 @ (k0 - identity) - k * (k - 1) * identity
            entries.append(_check(suite, f"commutators {sector.value} mu={mu}", commutation, 1e-10,
                                  provenance="closed-form", paper_ref="[K0, K+-] = +-K+-, [K-, K+] = 2 K0, n <= 30"))
            entries.append(_check(suite, f"casimir {sector.value} mu={mu}",
                                  float(np.max(np.abs(casimir[:checked, :checked]))), 1e-10,
                                  provenance="closed-form", paper_ref="-K+K- + K0(K0 - 1) = k(k - 1)"))
    return entries


def _slope(steps, values) -> float:
    return float(np.polyfit(np.log(steps), np.log(values), 1)[0])


def _differential_suite(ctx: SuiteContext) -> list[VerificationEntry]:
    suite = "differential"
    entries = []
    steps = (0.04, 0.02, 0.01)
    for sector, mu in ((Sector.PLUS, 0.5), (Sector.MINUS, 0.25)):
        grids = [HalfLineGrid(h, int(round(10.0 / h))) for h in steps]
        residuals = [ladder_residual(Generator.K_PLUS, sector, mu, 1, g) for g in grids]
        entries.append(_check(suite, f"K+ residual order {sector.value} mu={mu}", _slope(steps, residuals), 0.1,
                              expected=2.0, paper_ref="differential K+ reproduces sqrt((n+1)(2k+n)) at order h^2"))
        finest = grids[-1]
        for op in (Generator.K0, Generator.K_MINUS):
            entries.append(_check(suite, f"{op.value} on ground {sector.value} mu={mu}",
                                  ladder_residual(op, sector, mu, 0, finest), 1e-3,
                                  paper_ref="K0 psi_0 = k psi_0 and K- psi_0 = 0"))
        k = physical_index(sector, mu)
        expected, _ = sturmian_action(Generator.K_PLUS, 1, k)
        entries.append(_check(suite, f"K+ coefficient {sector.value} mu={mu}",
                              recovered_coefficient(Generator.K_PLUS, sector, mu, 1, finest), 1e-3,
                              expected=expected, paper_ref="weighted inner product recovers the ladder coefficient"))
    return entries


def _spectrum_suite(ctx: SuiteContext) -> list[VerificationEntry]:
    suite = "spectrum"
    entries = []
    settings = ctx.settings
    grid = HalfLineGrid.covering(settings.r_max, settings.radial_points)
    levels = 8
    for mu in ctx.mu_list:
        for parity in Parity:
            values = eigensolve_sym(discretize_radial(parity, mu, grid), levels)
            exact = np.array([radial_exact(parity, mu, n) for n in range(levels)])
            worst = float(np.max(np.abs(values - exact) / exact))
            entries.append(_check(suite, f"radial {parity.value} mu={mu}", worst, 1e-4,
                                  provenance="closed-form", paper_ref="lowest eigenvalues 4(n + k), n <= 7"))
    for parity, mu, level in ((Parity.EVEN, 0.0, 0), (Parity.EVEN, 0.75, 0), (Parity.ODD, 0.25, 1)):
        grids = [HalfLineGrid.covering(settings.r_max, m) for m in (250, 500, 1000)]
        study = convergence_study(lambda m, g, p=parity: discretize_radial(p, m, g), mu, grids,
                                  radial_exact(parity, mu, level), level)
        entries.append(_check(suite, f"order {parity.value} mu={mu} n={level}", study.slope, 0.2, expected=2.0,
                              paper_ref="flux-form scheme is second order", detail=study.anomaly))
    mu = 0.7
    full = SymmetricGrid(settings.r_max / 150, 150)
    half = HalfLineGrid(full.h, full.n_half)
    count = 8
    projected = np.sort(np.concatenate([
        eigensolve_sym(discretize_radial(Parity.EVEN, mu, half), count) - 1 - 2 * mu,
        eigensolve_sym(discretize_radial(Parity.ODD, mu, half), count) - 1 + 2 * mu,
    ]))[:count]
    operator = discretize_full_line("psi1", mu, full)
    values = eigensolve_sym(operator, count)
    entries.append(_check(suite, f"full line matches radial blocks mu={mu}",
                          float(np.max(np.abs(values - projected))), 1e-9,
                          paper_ref="parity projection of the psi1 operator"))
    reflection = reflection_matrix(full.size)
    commutator = np.max(np.abs(reflection @ operator.matrix - operator.matrix @ reflection))
    entries.append(_check(suite, f"reflection commutes with psi1 operator mu={mu}",
                          float(commutator / np.max(np.abs(operator.matrix))), 1e-13, provenance="trivial",
                          paper_ref="(1 +- R)/2 commute with the full-line operator"))
    return entries


def _spinor_suite(ctx: SuiteContext) -> list[VerificationEntry]:
    suite = "spinor"
    entries = []
    top = 4 if ctx.quick else 10
    kappas = (0.5,) if ctx.quick else (0.1, 0.5, 2.0)
    tol = ctx.settings.quadrature_tol
    for case in Case:
        for mu in ctx.mu_list:
            norm = coupled = 0.0
            for kappa in kappas:
                params = PhysParams(mu, kappa)
                for n in range(top + 1):
                    norm = max(norm, abs(spinor(case, n, params).norm(tol, ctx.settings.quadrature_cap) - 1.0))
                    check = coupled_check(case, n, params)
                    coupled = max(coupled, check.defect1, check.defect2)
            entries.append(_check(suite, f"joint norm case {case.value} mu={mu}", norm, 1e-10,
                                  paper_ref="|Psi1|^2 + |Psi2|^2 integrates to 1"))
            entries.append(_check(suite, f"coupled equations case {case.value} mu={mu}", coupled, 1e-10,
                                  paper_ref="(E - 1) Psi1 = sqrt(2 kappa) a^dagger Psi2, (E + 1) Psi2 = sqrt(2 kappa) a Psi1"))
    check = coupled_check(Case.B, 2, PhysParams(0.25, 0.5, Branch.MINUS))
    entries.append(_check(suite, "coupled equations negative branch", max(check.defect1, check.defect2), 1e-10,
                          paper_ref="same pair on the E < 0 branch"))
    steps = (0.02, 0.01, 0.005)
    for case, n, mu in ((Case.A, 0, 0.5), (Case.B, 2, 0.25)):
        grids = [HalfLineGrid(h, int(round(12.0 / h))) for h in steps]
        params = PhysParams(mu, 0.5)
        residuals = [max(decoupled_residual(case, n, params, g)) for g in grids]
        entries.append(_check(suite, f"decoupled residual order case {case.value} n={n} mu={mu}",
                              _slope(steps, residuals), 0.1, expected=2.0,
                              paper_ref="second-order component equations, lambda = (E^2 - 1)/kappa"))
        entries.append(_check(suite, f"decoupled residual at h={steps[-1]} case {case.value} n={n} mu={mu}",
                              residuals[-1], DECOUPLED_RESIDUAL_BOUND,
                              paper_ref="second-order component equations, lambda = (E^2 - 1)/kappa"))
    return entries


def _parity_suite(ctx: SuiteContext) -> list[VerificationEntry]:
    suite = "parity"
    entries = [_check(suite, "clifford relations", DiracStructure.clifford_defect(), 1e-15, provenance="trivial",
                      paper_ref="alpha beta + beta alpha = 0, alpha^2 = beta^2 = 1")]
    grid = SymmetricGrid(0.1, 60)
    for mu in (0.0, 0.7):
        for phi in (0.0, math.pi):
            entries.append(_check(suite, f"[h, P R] mu={mu} phi={phi:.4f}",
                                  parity_commutator(PhysParams(mu, 0.5), grid, phi), 1e-12,
                                  paper_ref="parity invariance of the discretized Hamiltonian"))
    x = grid.points
    envelope = np.exp(-x * x / 2)
    mixed = parity_violation(GridFunc(grid, envelope), GridFunc(grid, x * x * envelope))
    entries.append(_expect(suite, "mixed parity spinor rejected", mixed.violated, measured=mixed.defect,
                           paper_ref="both components even is not parity invariant"))
    sector_a = parity_violation(GridFunc(grid, envelope), GridFunc(grid, x * envelope))
    entries.append(_expect(suite, "case A spinor accepted", not sector_a.violated and sector_a.phi == 0.0,
                           measured=sector_a.defect, paper_ref="Psi1 even, Psi2 odd at phi = 0"))
    return entries


def _reduction_suite(ctx: SuiteContext) -> list[VerificationEntry]:
    suite = "reduction"
    entries = []
    for case in Case:
        spread = 0.0
        equal = True
        for n in range(6):
            record = mu_zero_reduction(case, n)
            equal = equal and record.energies_equal
            spread = max(spread, record.ratio_spread)
        entries.append(_expect(suite, f"energies case {case.value}", equal, provenance="closed-form",
                               paper_ref="mu = 0 levels equal sqrt(1 + 2 kappa n_std), n_std = 2n or 2n + 1"))
        entries.append(_check(suite, f"profile ratios case {case.value}", spread, 1e-10,
                              paper_ref="components proportional to Hermite eigenspinors"))
    return entries


def _coherent_suite(ctx: SuiteContext) -> list[VerificationEntry]:
    suite = "coherent"
    entries = []
    ks = (0.25, 0.75) if ctx.quick else (0.25, 0.75, physical_index(Sector.PLUS, 0.5), physical_index(Sector.MINUS, 0.5))
    zetas = (0.3, 0.4 + 0.2j) if ctx.quick else (0.3, 0.4 + 0.2j, -0.5, 0.6j, -0.3 - 0.4j)
    r = np.linspace(0.1, 6.0, 25)
    norm = closed = binomial = 0.0
    for k in ks:
        for zeta in zetas:
            p = CoherentParams(zeta, k)
            norm = max(norm, abs(coherent_norm(p, ctx.settings.quadrature_tol, ctx.settings.quadrature_cap) - 1.0))
            closed = max(closed, closed_series_deviation(p, r))
            binomial = max(binomial, binomial_identity_defect(p))
    entries.append(_check(suite, "series norm", norm, 1e-10, provenance="trivial",
                          paper_ref="displacement is unitary"))
    entries.append(_check(suite, "generating-function closed form", closed, 1e-10,
                          paper_ref="closed form agrees with the series for |zeta| <= 0.6"))
    entries.append(_check(suite, "binomial identity", binomial, 1e-12, provenance="trivial",
                          paper_ref="sum of squared coefficients is 1"))
    entries.append(_check(suite, "displacement operator", displacement_check(1.0, 0.25), 1e-10,
                          paper_ref="expm(xi K+ - xi* K-)|k,0> has the series coefficients, zeta = tanh|xi|"))
    entries.append(_check(suite, "displacement operator complex xi", displacement_check(0.6 - 0.5j, 0.75), 1e-10,
                          paper_ref="zeta = (xi/|xi|) tanh|xi|"))
    for k in (0.25, 0.75):
        entries.append(_check(suite, f"oscillator realization k={k}", oscillator_realization_defect(k), 1e-12,
                              provenance="closed-form", paper_ref="K+ = a^dagger^2/2 on even or odd Fock states"))
    spinor_state = coherent_spinor(Case.A, PhysParams(0.5, 0.5), 0.3)
    entries.append(_check(suite, "spinor joint norm", abs(spinor_state.norm() - 1.0), 1e-10,
                          paper_ref="equal component weights 1/sqrt2"))
    deviation = closed_series_deviation(CoherentParams(0.3, 0.75), r, ClosedForm.FLIPPED)
    entries.append(_flag(suite, "sign-flipped exponent", deviation, 1e-6,
                         paper_ref="exponent r^2 (1 - 3 zeta)/(2(zeta - 1))",
                         detail="comes from a + sign in the Laguerre generating exponent; the series rejects it"))
    return entries


def _unified_suite(ctx: SuiteContext) -> list[VerificationEntry]:
    suite = "unified"
    entries = []
    kappa = 0.5
    for mu in (0.0, 0.25, 0.5):
        report = reconcile_spectrum(PhysParams(mu, kappa), levels=10)
        worst = max(abs(m.delta) for m in report.unified)
        entries.append(_expect(suite, f"interleaved formula mu={mu}",
                               report.interleaved_members and report.interleaved_covers_union,
                               measured=max(abs(m.delta) for m in report.interleaved),
                               paper_ref="sqrt(1 + 2 kappa N_mu) enumerates the per-case union"))
        if mu == 0.0:
            entries.append(_check(suite, "unified membership mu=0", worst, 0.0, provenance="closed-form",
                                  paper_ref="every unified level is a per-case level at mu = 0"))
            entries.append(_flag(suite, "unified coverage mu=0", 0.0 if report.unified_covers_union else 1.0, 0.5,
                                 paper_ref="n_mu = n + (mu/2 + 1/2)(1 - (-1)^n)",
                                 detail="odd n repeat case-A levels and case-B levels never appear"))
        else:
            entries.append(_flag(suite, f"unified membership mu={mu}", worst, 1e-12,
                                 paper_ref="n_mu = n + (mu/2 + 1/2)(1 - (-1)^n)",
                                 detail="odd-n values are not levels of either parity sector"))
    return entries


def _substrate_suite(ctx: SuiteContext) -> list[VerificationEntry]:
    suite = "substrate"
    entries = []
    x = np.linspace(0.0, 30.0, 41)
    envelope = np.exp(-x / 2)
    recurrence = 0.0
    for alpha in (-0.3, 0.5, 2.0, 5.0):
        for n in (1, 5, 20, 40):
            ours = special_functions.laguerre(n, alpha, x) * envelope
            reference = sp.eval_genlaguerre(n, alpha, x) * envelope
            scale = max(1.0, float(np.max(np.abs(reference))))
            recurrence = max(recurrence, float(np.max(np.abs(ours - reference))) / scale)
    entries.append(_check(suite, "laguerre recurrence", recurrence, 1e-10, provenance="trivial",
                          paper_ref="plumbing"))
    orthogonality = 0.0
    for alpha in (-0.3, 0.5, 2.0):
        rule = special_functions.gauss_laguerre(20, alpha)
        for m in range(9):
            for n in range(9):
                value = float(np.sum(rule.weights * special_functions.laguerre(m, alpha, rule.nodes)
                                     * special_functions.laguerre(n, alpha, rule.nodes)))
                target = math.exp(special_functions.ln_gamma(n + alpha + 1) - special_functions.ln_gamma(n + 1)) if m == n else 0.0
                orthogonality = max(orthogonality, abs(value - target) / max(1.0, target))
    entries.append(_check(suite, "laguerre orthogonality", orthogonality, 1e-10, provenance="trivial",
                          paper_ref="int t^alpha e^-t L_m L_n = delta_mn Gamma(n + alpha + 1)/n!"))
    exactness = 0.0
    for alpha in (-0.5, 0.0, 1.5):
        order = 6
        rule = special_functions.gauss_laguerre(order, alpha)
        for m in range(2 * order):
            target = math.exp(special_functions.ln_gamma(alpha + m + 1))
            exactness = max(exactness, abs(float(np.sum(rule.weights * rule.nodes**m)) - target) / target)
    entries.append(_check(suite, "gauss-laguerre exactness", exactness, 1e-10, provenance="trivial",
                          paper_ref="plumbing"))
    log_gamma = max(abs(special_functions.ln_gamma(x) - float(sp.gammaln(x))) for x in (0.1, 0.5, 1.0, 2.5, 7.3, 40.0))
    entries.append(_check(suite, "log gamma", log_gamma, 1e-12, provenance="trivial", paper_ref="plumbing"))
    x = np.array([0.2, 0.6, 1.1, 1.9, 2.4, 3.0])
    spread = 0.0
    for n in range(8):
        coeffs = np.zeros(n + 1)
        coeffs[n] = 1.0
        ratios = special_functions.generalized_hermite(n, 0.0, x) / np.polynomial.hermite.hermval(x, coeffs)
        spread = max(spread, float((ratios.max() - ratios.min()) / np.max(np.abs(ratios))))
    entries.append(_check(suite, "generalized hermite at mu=0", spread, 1e-10,
                          paper_ref="proportional to H_n with x-independent ratio"))
    moment = special_functions.dunkl_moment_integral(lambda t: np.ones_like(t), 0.0)
    entries.append(_check(suite, "half gaussian moment", moment, 1e-12, expected=math.sqrt(math.pi) / 2,
                          provenance="trivial", paper_ref="plumbing"))
    return entries


SUITES: tuple[tuple[str, Callable[[SuiteContext], list]], ...] = (
    ("substrate", _substrate_suite),
    ("ladder", _ladder_suite),
    ("su11", _su11_suite),
    ("differential", _differential_suite),
    ("spectrum", _spectrum_suite),
    ("spinor", _spinor_suite),
    ("parity", _parity_suite),
    ("reduction", _reduction_suite),
    ("coherent", _coherent_suite),
    ("unified", _unified_suite),
)


def _run_suite(name: str, suite: Callable, ctx: SuiteContext) -> tuple[list, float]:
    logger.info(f"Running suite '{name}' ({ctx.mode})")
    start = time.perf_counter()
    try:
        entries = suite(ctx)
    except (DunklOscillatorError, ValueError, ArithmeticError) as exc:
        logger.error(f"Suite '{name}' raised: {exc}")
        entries = [VerificationEntry(suite=name, name="suite error", status=Status.FAIL, provenance="plumbing",
                                     paper_ref="plumbing", detail=str(exc))]
    elapsed = time.perf_counter() - start
    failures = sum(1 for e in entries if e.status is Status.FAIL)
    logger.info(f"Suite '{name}' finished in {elapsed:.2f}s with {failures} failure(s)")
    return entries, elapsed


def run_verification(mode: str = "quick", mu_list=None, jobs: int = 1, timing: bool = False,
                     settings: Settings | None = None, suites=None) -> VerificationReport:
    """Run the suite families; ``jobs`` > 1 runs families concurrently, entries stay in suite order."""
    if mode not in ("quick", "full"):
        raise ValueError(f"mode must be 'quick' or 'full', got {mode!r}")
    settings = settings or get_settings()
    ctx = SuiteContext(mode, tuple(float(m) for m in (mu_list or DEFAULT_MU_LIST)), settings)
    selected = [(name, fn) for name, fn in SUITES if suites is None or name in suites]
    start = time.perf_counter()
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        results = list(pool.map(lambda item: _run_suite(item[0], item[1], ctx), selected))
    entries = [e for suite_entries, _ in results for e in suite_entries]
    report = VerificationReport(
        environment=Environment(
            mode=mode,
            mu_list=list(ctx.mu_list),
            radial_points=settings.radial_points,
            r_max=settings.r_max,
            quadrature_cap=settings.quadrature_cap,
            quadrature_tol=settings.quadrature_tol,
        ),
        entries=entries,
        timing=Timing(total_seconds=round(time.perf_counter() - start, 3),
                      suites={name: round(elapsed, 3) for (name, _), (_, elapsed) in zip(selected, results)})
        if timing else None,
    )
    logger.info(
        f"Verification done: {report.count(Status.PASS)} pass, {report.count(Status.FAIL)} fail, "
        f"{report.count(Status.FLAGGED)} flagged"
    )
    return report
