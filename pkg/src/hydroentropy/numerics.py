"""Quadrature, bracketed root finding and the radial Numerov integrator."""

import math
from dataclasses import dataclass
from functools import lru_cache

import numba
import numpy as np

from .errors import BracketError, ConvergenceError, DomainError

DEFAULT_TOL = 1e-11


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes and weights on [-1, 1]."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def integrate(self, f, a=-1.0, b=1.0):
        """Apply the rule to a vectorized ``f`` on [a, b]."""
        half = 0.5 * (b - a)
        mid = 0.5 * (b + a)
        return half * float(np.dot(self.weights, f(mid + half * self.nodes)))


@lru_cache(maxsize=64)
def _gauss_legendre_arrays(order):
    k = np.arange(1, order + 1)
    x = np.cos(np.pi * (k - 0.25) / (order + 0.5))
    for _ in range(100):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for j in range(2, order + 1):
            p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
        dp = order * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-16:
            break
    p0 = np.ones_like(x)
    p1 = x.copy()
    for j in range(2, order + 1):
        p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
    dp = order * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    nodes = x[::-1].copy()
    weights = w[::-1].copy()
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre(order):
    """Gauss-Legendre rule of the given order (2 <= order <= 4096).

    Nodes come from Newton iteration on the Legendre three-term recurrence,
    which converges to full double precision from the usual cosine guesses.
    """
    if not 2 <= int(order) <= 4096:
        raise DomainError(f"quadrature order must be in [2, 4096], got {order}")
    nodes, weights = _gauss_legendre_arrays(int(order))
    return QuadratureRule(nodes=nodes, weights=weights, order=int(order))


_PANEL_ORDER = 16


def integrate_finite(f, a, b, tol=DEFAULT_TOL, points=None, max_levels=20):
    """Adaptive composite Gauss-Legendre integral of ``f`` over [a, b].

    ``f`` must accept a numpy array. Each panel is compared against its two
    halves; panels are bisected until the summed discrepancy satisfies
    ``|I_fine - I_coarse| <= tol * (1 + |I_fine|)``. ``points`` are interior
    breakpoints (kinks, nodes of a density) that start as panel edges.

    Raises
    ------
    ConvergenceError
        If some panel still fails after ``max_levels`` bisections.
    """
    a = float(a)
    b = float(b)
    if not a < b:
        if a == b:
            return 0.0
        raise DomainError("integrate_finite needs a < b")
    rule = gauss_legendre(_PANEL_ORDER)
    edges = [a]
    if points is not None:
        edges.extend(sorted(float(p) for p in points if a < p < b))
    edges.append(b)
    edges = np.unique(np.asarray(edges))
    lo = edges[:-1]
    hi = edges[1:]
    coarse = _panel_sums(f, rule, lo, hi)
    width = b - a
    accepted = []
    for _ in range(max_levels + 1):
        mid = 0.5 * (lo + hi)
        left = _panel_sums(f, rule, lo, mid)
        right = _panel_sums(f, rule, mid, hi)
        fine = left + right
        estimate = math.fsum(accepted) + float(np.sum(fine))
        allowance = tol * (1.0 + abs(estimate)) * (hi - lo) / width
        done = np.abs(fine - coarse) <= allowance
        accepted.extend(fine[done].tolist())
        if np.all(done):
            return math.fsum(accepted)
        keep = ~done
        lo = np.concatenate([lo[keep], mid[keep]])
        hi = np.concatenate([mid[keep], hi[keep]])
        coarse = np.concatenate([left[keep], right[keep]])
    raise ConvergenceError(
        f"integral over [{a}, {b}] not converged after {max_levels} levels "
        f"({lo.size} panels outstanding)"
    )


def _panel_sums(f, rule, lo, hi):
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = mid[:, None] + half[:, None] * rule.nodes[None, :]
    values = np.asarray(f(x.ravel()), dtype=float).reshape(x.shape)
    return half * (values @ rule.weights)


def integrate_semi_infinite(f, tol=DEFAULT_TOL, scale=1.0, points=None, lower=0.0, check_tail=True, tail_power=1):
    """Integral of ``f`` over [lower, inf).

    The substitution x = lower + scale * t / (1 - t)^k maps the half line
    onto [0, 1), where :func:`integrate_finite` does the work. ``scale``
    should be the length over which ``f`` varies. k = ``tail_power`` is 1
    for exponential decay; an algebraic tail x^-a leaves a (1-t)^(k(a-1)-1)
    endpoint factor, so slowly decaying integrands want k around 4. With
    ``check_tail`` the decay is confirmed by doubling an explicit cutoff
    until the increment falls below the tolerance.
    """
    scale = float(scale)
    lower = float(lower)
    k = int(tail_power)
    if k < 1:
        raise DomainError("tail_power must be a positive integer")

    def mapped(t):
        one_minus = 1.0 - t
        x = lower + scale * t / one_minus**k
        jac = scale * (1.0 + (k - 1) * t) / one_minus ** (k + 1)
        with np.errstate(over="ignore", invalid="ignore"):
            out = np.asarray(f(x), dtype=float) * jac
        return np.where(np.isfinite(out), out, 0.0)

    tpoints = None
    if points is not None:
        tpoints = [_inverse_tail_map((p - lower) / scale, k) for p in points if p > lower]
    total = integrate_finite(mapped, 0.0, 1.0, tol=tol, points=tpoints)
    if check_tail:
        cutoff = lower + 32.0 * scale
        if points is not None and len(points):
            cutoff = max(cutoff, 2.0 * max(points) - lower)
        for _ in range(60):
            piece = integrate_finite(f, cutoff, 2.0 * cutoff - lower, tol=tol)
            if abs(piece) < tol * (1.0 + abs(total)):
                break
            cutoff = 2.0 * cutoff - lower
        else:
            raise ConvergenceError("semi-infinite integrand does not decay")
    return total


def _inverse_tail_map(u, k):
    # solve t / (1 - t)^k = u for t in [0, 1)
    if k == 1:
        return u / (1.0 + u)
    lo, hi = 0.0, 1.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if mid / (1.0 - mid) ** k < u:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_root_bracketed(f, lo, hi, tol=1e-13, max_iter=200):
    """Brent's method on a sign-changing bracket [lo, hi].

    Stops once the bracket is narrower than ``tol * (1 + |root|)``.
    """
    a, b = float(lo), float(hi)
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise BracketError(f"no sign change on [{lo}, {hi}]: f = {fa}, {fb}")
    c, fc = a, fa
    d = e = b - a
    for _ in range(max_iter):
        if fb * fc > 0.0:
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 0.5 * tol * (1.0 + abs(b)) + 2.0 * np.finfo(float).eps * abs(b)
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return b
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e = d
                d = p / q
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, xm)
        fb = f(b)
    raise ConvergenceError("Brent iteration limit reached")


@dataclass(frozen=True)
class ShootingResult:
    """Outcome of one outward Numerov integration.

    ``boundary_value`` is u(r_c) divided by max|u|, so it is scale free and
    continuous in the energy. ``node_count`` counts strict sign changes of u
    on the open interval (0, r_c).
    """

    boundary_value: float
    node_count: int
    grid: np.ndarray
    grid_values: np.ndarray


def frobenius_start(l, Z, E, r, terms=16):
    """Regular series u(r) = r^(l+1) sum_k a_k r^k with a_0 = 1."""
    coeffs = [1.0]
    for k in range(1, terms):
        prev2 = coeffs[k - 2] if k >= 2 else 0.0
        coeffs.append((-2.0 * Z * coeffs[k - 1] - 2.0 * E * prev2) / (k * (k + 2 * l + 1)))
    total = 0.0
    for c in reversed(coeffs):
        total = total * r + c
    return r ** (l + 1) * total


def _series_points(l):
    # first index where the Numerov denominator 1 - h^2 q / 12 is safely positive
    return max(2, int(math.ceil(math.sqrt(l * (l + 1) / 6.0))) + 1)


@numba.njit(cache=True)
def _numerov_kernel(l, Z, E, r_c, n, start, out):
    """Summed-increment Numerov from index ``start``; out[:start+1] preset."""
    h = r_c / n
    h2 = h * h
    h12 = h2 / 12.0
    ll = l * (l + 1.0)
    r = (start - 1) * h
    q_prev = ll / (r * r) - 2.0 * Z / r - 2.0 * E
    r = start * h
    q_cur = ll / (r * r) - 2.0 * Z / r - 2.0 * E
    y_prev = out[start - 1] * (1.0 - h12 * q_prev)
    y = out[start] * (1.0 - h12 * q_cur)
    # increment and value carried with Kahan compensation
    d = y - y_prev
    cd = 0.0
    cy = 0.0
    peak = 0.0
    for i in range(start + 1):
        a = abs(out[i])
        if a > peak:
            peak = a
    for i in range(start, n):
        inc = h2 * q_cur * out[i] - cd
        t = d + inc
        cd = (t - d) - inc
        d = t
        inc = d - cy
        t = y + inc
        cy = (t - y) - inc
        y = t
        r = (i + 1) * h
        q_cur = ll / (r * r) - 2.0 * Z / r - 2.0 * E
        u_next = y / (1.0 - h12 * q_cur)
        out[i + 1] = u_next
        a = abs(u_next)
        if a > peak:
            peak = a
        if peak > 1e250:
            for j in range(i + 2):
                out[j] *= 1e-250
            y *= 1e-250
            d *= 1e-250
            cy *= 1e-250
            cd *= 1e-250
            peak *= 1e-250
    interior = 0
    for i in range(1, n - 1):
        if out[i] * out[i + 1] < 0.0:
            interior += 1
    through_end = interior
    if out[n - 1] * out[n] < 0.0:
        through_end += 1
    return out[n] / peak, interior, through_end


def _shoot(l, Z, E, r_c, grid_size, buffer=None):
    if buffer is None:
        buffer = np.empty(grid_size + 1)
    h = r_c / grid_size
    start = _series_points(l)
    buffer[0] = 0.0
    for i in range(1, start + 1):
        buffer[i] = frobenius_start(l, Z, E, i * h)
    return _numerov_kernel(l, float(Z), float(E), float(r_c), grid_size, start, buffer), buffer


def solve_radial_ode(l, Z, E, r_c, grid_size=20_000):
    """Outward Numerov integration of u'' = [l(l+1)/r^2 - 2Z/r - 2E] u.

    The grid is uniform, r_i = i * r_c / grid_size, with u(0) = 0 and u(h)
    from the regular Frobenius series. Only the shape of u matters; the run
    renormalizes internally if values approach overflow.
    """
    if not r_c > 0:
        raise DomainError("cavity radius must be positive")
    if grid_size < 1000:
        raise DomainError("grid_size must be at least 1000")
    (boundary, interior, _), values = _shoot(l, Z, E, r_c, grid_size)
    grid = np.linspace(0.0, r_c, grid_size + 1)
    return ShootingResult(boundary_value=boundary, node_count=int(interior), grid=grid, grid_values=values)


def _shoot_count(l, Z, E, r_c, grid_size, buffer):
    (boundary, _, through_end), _ = _shoot(l, Z, E, r_c, grid_size, buffer)
    return boundary, through_end


def shooting_eigenvalue(l, Z, r_c, nodes, grid_size, e_floor, tol=1e-14):
    """Energy with ``nodes`` interior zeros and u(r_c) = 0 on one grid.

    Bisection on the node count isolates a bracket holding exactly one sign
    change of the boundary value, then Brent finishes the job.
    """
    buffer = np.empty(grid_size + 1)
    lo = e_floor
    b_lo, c_lo = _shoot_count(l, Z, lo, r_c, grid_size, buffer)
    while c_lo > nodes:
        lo = lo - 2.0 * abs(lo) - 1.0
        b_lo, c_lo = _shoot_count(l, Z, lo, r_c, grid_size, buffer)
    hi = ((nodes + 1 + 0.5 * l) * math.pi / r_c) ** 2 + 1.0
    b_hi, c_hi = _shoot_count(l, Z, hi, r_c, grid_size, buffer)
    for _ in range(200):
        if c_hi > nodes:
            break
        hi = 2.0 * hi + 1.0
        b_hi, c_hi = _shoot_count(l, Z, hi, r_c, grid_size, buffer)
    else:
        raise BracketError(f"no level with {nodes} nodes below E = {hi}")
    for _ in range(300):
        if c_lo == nodes and c_hi == nodes + 1:
            break
        mid = 0.5 * (lo + hi)
        b_mid, c_mid = _shoot_count(l, Z, mid, r_c, grid_size, buffer)
        if c_mid <= nodes:
            lo, b_lo, c_lo = mid, b_mid, c_mid
        else:
            hi, b_hi, c_hi = mid, b_mid, c_mid
    else:
        raise BracketError(f"could not isolate level with {nodes} nodes in [{e_floor}, {hi}]")

    def boundary(e):
        return _shoot_count(l, Z, e, r_c, grid_size, buffer)[0]

    return find_root_bracketed(boundary, lo, hi, tol=tol)


@numba.njit(cache=True)
def _numerov_inward_kernel(l, Z, E, r_c, n, stop, out):
    """Summed-increment Numerov from r_c down to index ``stop``."""
    h = r_c / n
    h2 = h * h
    h12 = h2 / 12.0
    ll = l * (l + 1.0)
    out[n] = 0.0
    out[n - 1] = h
    r = (n - 1) * h
    q_cur = ll / (r * r) - 2.0 * Z / r - 2.0 * E
    y_prev = 0.0
    y = out[n - 1] * (1.0 - h12 * q_cur)
    d = y - y_prev
    cd = 0.0
    cy = 0.0
    for i in range(n - 1, stop, -1):
        inc = h2 * q_cur * out[i] - cd
        t = d + inc
        cd = (t - d) - inc
        d = t
        inc = d - cy
        t = y + inc
        cy = (t - y) - inc
        y = t
        r = (i - 1) * h
        q_cur = ll / (r * r) - 2.0 * Z / r - 2.0 * E
        out[i - 1] = y / (1.0 - h12 * q_cur)
        if abs(out[i - 1]) > 1e250:
            for j in range(i - 1, n + 1):
                out[j] *= 1e-250
            y *= 1e-250
            d *= 1e-250
            cy *= 1e-250
            cd *= 1e-250


def outer_turning_point(l, Z, E):
    """Largest r with l(l+1)/r^2 - 2Z/r = 2E, or inf if there is none."""
    if E >= 0:
        return math.inf
    a = -2.0 * E
    disc = Z * Z - a * l * (l + 1)
    if disc < 0:
        return math.inf
    return (Z + math.sqrt(disc)) / a


def eigenfunction_grid(l, Z, E, r_c, grid_size):
    """Grid eigenfunction u on [0, r_c] with u(0) = u(r_c) = 0.

    Outward Numerov up to the outer classical turning point and inward
    Numerov from the wall, scaled to agree there. Integrating outward into
    the forbidden region would amplify any energy error through the growing
    solution; the inward leg keeps the decaying tail clean.
    """
    (_, _, _), u = _shoot(l, Z, E, r_c, grid_size)
    u = u.copy()
    r_t = outer_turning_point(l, Z, E)
    h = r_c / grid_size
    match = int(round(1.5 * r_t / h)) if math.isfinite(r_t) else grid_size
    if match >= grid_size - 10:
        u[-1] = 0.0
        return np.linspace(0.0, r_c, grid_size + 1), u
    inner = np.empty(grid_size + 1)
    _numerov_inward_kernel(l, float(Z), float(E), float(r_c), grid_size, match - 1, inner)
    u[match:] = inner[match:] * (u[match] / inner[match])
    return np.linspace(0.0, r_c, grid_size + 1), u
