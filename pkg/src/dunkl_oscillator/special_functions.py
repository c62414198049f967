"""Special-function kernels: log-Gamma, Laguerre and generalized Hermite
polynomials, a symmetric tridiagonal eigensolver and Gauss-Laguerre rules.

Everything here is a pure function of its inputs. Polynomial families are
evaluated by three-term recurrence and accept numpy arrays for the abscissa.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from .errors import DomainError, NumericError

logger = logging.getLogger("dunkl-oscillator")

# Lanczos approximation, g = 7, nine terms
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    x = float(x)
    if not x > 0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    if x < 0.5:
        # reflection keeps the Lanczos sum in its accurate range
        return math.log(math.pi / math.sin(math.pi * x)) - ln_gamma(1.0 - x)
    if x == 1.0 or x == 2.0:
        return 0.0
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += coeff / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def gamma_ratio(num: float, den: float) -> float:
    """Gamma(num) / Gamma(den) through log-Gamma."""
    return math.exp(ln_gamma(num) - ln_gamma(den))


def _check_alpha(alpha: float) -> None:
    if not alpha > -1:
        raise DomainError(f"Laguerre parameter must satisfy alpha > -1, got {alpha}")


def laguerre(n: int, alpha: float, x):
    """Associated Laguerre polynomial L_n^alpha(x) by forward recurrence."""
    if n < 0:
        raise DomainError(f"Laguerre degree must be non-negative, got {n}")
    _check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = 1.0 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur if cur.ndim else float(cur)


def laguerre_terms(alpha: float, x) -> Iterator[np.ndarray]:
    """Yield L_0^alpha(x), L_1^alpha(x), ... without end."""
    _check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    yield prev
    cur = 1.0 + alpha - x
    k = 1
    while True:
        yield cur
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
        k += 1


def laguerre_coefficients(n: int, alpha: float) -> np.ndarray:
    """Power-series coefficients of L_n^alpha(t), lowest degree first."""
    if n < 0:
        raise DomainError(f"Laguerre degree must be non-negative, got {n}")
    _check_alpha(alpha)
    coeffs = np.empty(n + 1)
    coeffs[0] = math.exp(ln_gamma(n + alpha + 1) - ln_gamma(n + 1) - ln_gamma(alpha + 1))
    for j in range(n):
        coeffs[j + 1] = -coeffs[j] * (n - j) / ((alpha + j + 1) * (j + 1))
    return coeffs


def generalized_hermite(n: int, mu: float, x):
    """Normalized generalized Hermite polynomial H^mu_n(x).

    With n = 2m + p, p in {0, 1}:
    H^mu_{2m+p}(x) = (-1)^m sqrt(Gamma(m+1)/Gamma(m+p+mu+1/2)) x^p L_m^{mu-1/2+p}(x^2)
    """
    if not mu > -0.5:
        raise DomainError(f"generalized Hermite requires mu > -1/2, got {mu}")
    if n < 0:
        raise DomainError(f"Hermite degree must be non-negative, got {n}")
    m, p = divmod(n, 2)
    x = np.asarray(x, dtype=float)
    norm = math.sqrt(gamma_ratio(m + 1, m + p + mu + 0.5))
    value = (-1) ** m * norm * x**p * laguerre(m, mu - 0.5 + p, x * x)
    return value if np.ndim(value) else float(value)


def eigensolve_sym_tridiag(diag, offdiag, max_iter: int | None = None):
    """Eigenvalues and first eigenvector components of a symmetric tridiagonal matrix.

    Implicit-shift QL with only the first row of the eigenvector matrix
    accumulated. Returns ``(eigenvalues, first_components)`` sorted ascending.
    """
    d = np.array(diag, dtype=float)
    n = d.size
    off = np.asarray(offdiag, dtype=float)
    if off.size != max(n - 1, 0):
        raise ValueError(f"offdiag must have length {max(n - 1, 0)}, got {off.size}")
    if n == 0:
        return d, d.copy()
    e = np.zeros(n)
    e[: n - 1] = off
    z = np.zeros(n)
    z[0] = 1.0
    cap = max_iter if max_iter is not None else 50 * n
    eps = np.finfo(float).eps
    total = 0

    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            total += 1
            if total > cap:
                raise NumericError(
                    f"tridiagonal QL did not converge within {cap} iterations", iterations=total
                )
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            deflated = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    logger.debug(f"tridiagonal QL converged: n={n}, iterations={total}")
    order = np.argsort(d)
    return d[order], z[order]


def sturm_count(diag, offdiag, x):
    """Number of eigenvalues strictly below each shift in ``x``."""
    d = np.asarray(diag, dtype=float)
    e2 = np.asarray(offdiag, dtype=float) ** 2
    x = np.atleast_1d(np.asarray(x, dtype=float))
    tiny = np.finfo(float).tiny
    q = d[0] - x
    count = (q < 0).astype(int)
    for i in range(1, d.size):
        q = np.where(q == 0.0, tiny, q)
        q = d[i] - x - e2[i - 1] / q
        count += q < 0
    return count


def tridiag_lowest(diag, offdiag, count: int, rtol: float = 1e-14, max_iter: int = 200):
    """Lowest ``count`` eigenvalues of a symmetric tridiagonal matrix by Sturm bisection."""
    d = np.asarray(diag, dtype=float)
    off = np.abs(np.asarray(offdiag, dtype=float))
    n = d.size
    if not 0 < count <= n:
        raise ValueError(f"count must lie in 1..{n}, got {count}")
    radius = np.zeros(n)
    radius[:-1] += off
    radius[1:] += off
    lo = np.full(count, float(np.min(d - radius)))
    hi = np.full(count, float(np.max(d + radius)))
    target = np.arange(count)
    for iteration in range(max_iter):
        width = hi - lo
        scale = np.maximum(np.maximum(np.abs(lo), np.abs(hi)), 1e-300)
        if np.all(width <= rtol * scale):
            logger.debug(f"Sturm bisection converged after {iteration} sweeps")
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        below = sturm_count(d, off, mid)
        upper = below > target
        hi = np.where(upper, mid, hi)
        lo = np.where(upper, lo, mid)
    raise NumericError(f"Sturm bisection did not converge in {max_iter} sweeps", iterations=max_iter)


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Laguerre rule for the weight t^alpha e^{-t} on (0, inf)."""

    nodes: np.ndarray
    weights: np.ndarray
    alpha: float
    order: int

    def integrate(self, g: Callable, scale: float = 1.0, cutoff: float = 0.0) -> float:
        """Sum for the integral of t^alpha e^{-scale t} g(t) over (0, inf).

        Nodes whose weight falls below ``cutoff`` times the largest weight are skipped.
        """
        keep = self.weights > cutoff * float(self.weights.max())
        t = self.nodes[keep] / scale
        values = np.asarray(g(t))
        total = np.sum(self.weights[keep] * values)
        return total * scale ** (-(self.alpha + 1.0))


@lru_cache(maxsize=256)
def gauss_laguerre(order: int, alpha: float) -> QuadratureRule:
    """Golub-Welsch construction of the order-n Gauss-Laguerre rule."""
    if order < 1:
        raise DomainError(f"quadrature order must be positive, got {order}")
    _check_alpha(alpha)
    i = np.arange(order, dtype=float)
    diag = 2.0 * i + alpha + 1.0
    offdiag = np.sqrt(i[1:] * (i[1:] + alpha))
    nodes, first = eigensolve_sym_tridiag(diag, offdiag)
    weights = math.exp(ln_gamma(alpha + 1.0)) * first**2
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights, alpha=float(alpha), order=order)


def laguerre_integral(
    g: Callable,
    alpha: float,
    scale: float = 1.0,
    tol: float = 1e-12,
    cap: int = 512,
    start_order: int = 8,
    cutoff: float = 0.0,
    degree: int | None = None,
) -> float:
    """Integral of t^alpha e^{-scale t} g(t) over (0, inf), doubling the order until stable.

    When g is a polynomial of known ``degree`` the rule of order degree // 2 + 2 is
    already exact and is used once; refining past exactness only adds roundoff.
    """
    if degree is not None:
        if degree < 0:
            raise DomainError(f"polynomial degree must be non-negative, got {degree}")
        order = degree // 2 + 2
        if order > cap:
            raise NumericError(f"exact rule needs order {order} above cap {cap}", iterations=order)
        return gauss_laguerre(order, alpha).integrate(g, scale, cutoff)
    order = min(start_order, cap)
    previous = gauss_laguerre(order, alpha).integrate(g, scale, cutoff)
    current = previous
    while order < cap:
        order = min(2 * order, cap)
        previous, current = current, gauss_laguerre(order, alpha).integrate(g, scale, cutoff)
        if abs(current - previous) <= tol * max(1.0, abs(current)):
            logger.debug(f"Gauss-Laguerre converged at order {order} (alpha={alpha})")
            return current
    raise NumericError(
        f"Gauss-Laguerre integral not converged at order cap {cap}",
        iterations=order,
        estimates=(previous, current),
    )


def dunkl_moment_integral(g: Callable, mu: float, tol: float = 1e-12, cap: int = 512,
                          degree: int | None = None) -> float:
    """Half-line Dunkl-weighted Gaussian integral.

    Returns the integral of r^{2mu} e^{-r^2} g(r^2) over (0, inf), which equals
    one half of the integral of t^{mu-1/2} e^{-t} g(t).
    """
    if not mu > -0.5:
        raise DomainError(f"Dunkl measure requires mu > -1/2, got {mu}")
    return 0.5 * laguerre_integral(g, mu - 0.5, tol=tol, cap=cap, degree=degree)
