"""Slow, low-order, independent routes used to cross-check the fast paths.

Nothing here calls the production quadrature or eigen-solvers. The point is
that a systematic error in one route shows up as a disagreement, so each
oracle uses a deliberately different scheme at high resolution: composite
Simpson instead of Gauss-Legendre, a finite-difference matrix instead of
shooting, finite-difference gradients instead of expectation values.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ConvergenceError, DomainError


@dataclass(frozen=True)
class CrosscheckReport:
    """One production-vs-oracle comparison."""

    item: str
    production: float
    oracle: float
    abs_dev: float
    rel_dev: float
    tolerance: float
    passed: bool

    @classmethod
    def compare(cls, item, production, oracle, rel_tol, abs_floor=0.0):
        """Pass when |prod - oracle| <= max(rel_tol |oracle|, abs_floor)."""
        production = float(production)
        oracle = float(oracle)
        dev = abs(production - oracle)
        rel = dev / abs(oracle) if oracle != 0 else (0.0 if dev == 0 else math.inf)
        ok = bool(dev <= max(rel_tol * abs(oracle), abs_floor)) and math.isfinite(dev)
        return cls(item, production, oracle, dev, rel, rel_tol, ok)


def dense_grid_integrate(f, a, b, points=100_001, breaks=()):
    """Composite Simpson rule on a uniform grid.

    ``breaks`` splits [a, b] into pieces that each get ``points`` nodes,
    which keeps kinks (density zeros raised to fractional powers) on grid
    lines. ``f`` must accept numpy arrays.
    """
    if points < 100_000:
        raise DomainError("dense_grid_integrate needs at least 1e5 points")
    if points % 2 == 0:
        points += 1
    edges = [a] + sorted(x for x in breaks if a < x < b) + [b]
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        x = np.linspace(lo, hi, points)
        y = np.asarray(f(x), dtype=float)
        h = (hi - lo) / (points - 1)
        total += h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())
    return total


def _fd_levels(l, Z, r_c, mesh, count):
    h = r_c / mesh
    r = h * np.arange(1, mesh)
    diag = 1.0 / (h * h) + 0.5 * l * (l + 1) / (r * r) - Z / r
    off = np.full(mesh - 2, -0.5 / (h * h))
    return eigh_tridiagonal(diag, off, select="i", select_range=(0, count - 1), eigvals_only=True)


def fd_matrix_energies(l, Z, r_c, mesh=5000, count=5):
    """Lowest eigenvalues of the three-point finite-difference radial problem.

    u(0) = u(r_c) = 0, uniform mesh of ``mesh`` intervals, Richardson
    extrapolated as (4 E_{2M} - E_M)/3 since the scheme is second order.
    The diagonal is O(1/h^2), so eigenvalue roundoff grows like eps/h^2;
    past a few thousand intervals finer meshes get less accurate, not more.
    """
    if mesh < 5000:
        raise DomainError("fd_matrix_energies needs mesh >= 5000")
    if not r_c > 0:
        raise DomainError("r_c must be positive")
    coarse = _fd_levels(l, Z, r_c, mesh, count)
    fine = _fd_levels(l, Z, r_c, 2 * mesh, count)
    return list((4.0 * fine - coarse) / 3.0)


def _sign_restored_root(rho):
    # sqrt(rho) with the sign flipped at every interior zero. A zero shows up
    # as a sampled minimum s[i]; with |R| locally linear the zero lies left
    # of r_i exactly when s[i-1] < s[i+1].
    s = np.sqrt(np.maximum(rho, 0.0))
    peak = s.max()
    interior = (s[1:-1] <= s[:-2]) & (s[1:-1] < s[2:]) & (s[1:-1] < 1e-3 * peak)
    sign = np.ones_like(s)
    for i in np.flatnonzero(interior) + 1:
        start = i if s[i - 1] < s[i + 1] else i + 1
        sign[start:] *= -1.0
    return s * sign


def _gradient_fisher_once(density, l, r_end, step):
    n = int(round(r_end / step))
    r = np.linspace(0.0, r_end, n + 1)
    h = r[1] - r[0]
    R = _sign_restored_root(density(r))
    d = np.empty_like(R)
    d[2:-2] = (R[:-4] - 8.0 * R[1:-3] + 8.0 * R[3:-1] - R[4:]) / (12.0 * h)
    # one-sided fourth-order stencils at the ends
    d[0] = (-25 * R[0] + 48 * R[1] - 36 * R[2] + 16 * R[3] - 3 * R[4]) / (12 * h)
    d[1] = (-3 * R[0] - 10 * R[1] + 18 * R[2] - 6 * R[3] + R[4]) / (12 * h)
    d[-1] = (25 * R[-1] - 48 * R[-2] + 36 * R[-3] - 16 * R[-4] + 3 * R[-5]) / (12 * h)
    d[-2] = (3 * R[-1] + 10 * R[-2] - 18 * R[-3] + 6 * R[-4] - R[-5]) / (12 * h)
    # (rho')^2 / rho = 4 (sqrt rho)'^2 ; angular part gives l(l+1) rho / r^2
    radial = 4.0 * d * d * r * r
    centrifugal = 4.0 * l * (l + 1) * R * R
    y = radial + centrifugal
    if n % 2:
        # Simpson needs an even interval count; drop to trapezoid on the last one
        body = h / 3.0 * (y[0] + y[-2] + 4.0 * y[1:-2:2].sum() + 2.0 * y[2:-2:2].sum())
        return body + 0.5 * h * (y[-2] + y[-1])
    return h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def fisher_gradient_form(density, l, r_end, step=None, check=True):
    """Position Fisher information of an m = 0 state from its gradient.

    ``density`` maps an array of radii to the radial density |R(r)|^2 and
    must vanish (or be negligible) at ``r_end``. The value is

        int [ (rho')^2 / rho + 4 l(l+1) rho / r^2 ] r^2 dr,

    with rho' from fourth-order differences of the sign-restored sqrt(rho).
    Raises ConvergenceError when halving the step moves the result by more
    than 1e-5 relative.
    """
    if not r_end > 0:
        raise DomainError("r_end must be positive")
    step = step if step is not None else r_end / 200_000
    value = _gradient_fisher_once(density, l, r_end, step / 2)
    if check:
        coarse = _gradient_fisher_once(density, l, r_end, step)
        if abs(coarse - value) > 1e-5 * abs(value):
            raise ConvergenceError(f"gradient Fisher grid too coarse: {coarse} vs {value}")
    return value
