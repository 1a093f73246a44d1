"""Free and confined hydrogenic amplitudes in position and momentum space.

Free-atom amplitudes are closed forms. Confined amplitudes come from the
Numerov grid, splined, and are carried to momentum space by a direct
Fourier-Bessel quadrature. Past the sampled momentum window the confined
amplitude is continued by its large-p asymptotic series, which has two
sources: the odd powers of the small-r expansion and the wall at r_c.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.interpolate import CubicSpline, make_interp_spline

from . import numerics as nm
from .errors import ConvergenceError, DomainError
from .specfun import (
    assoc_laguerre,
    assoc_legendre,
    gegenbauer,
    kummer_m_conditioning,
    kummer_m,
    spherical_bessel_j,
)

ORBITAL_LETTERS = "spdfghiklmnoqrtuvwxyz"
POSITION = "position"
MOMENTUM = "momentum"


@dataclass(frozen=True)
class QuantumState:
    """Labels (n, l, m) of a hydrogenic level with nuclear charge Z.

    Z = 0 is accepted so that the empty spherical well can be handled by
    the confined solver; free-atom functions need Z > 0.
    """

    n: int
    l: int
    m: int = 0
    Z: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise DomainError(f"need 0 <= l <= n-1, got n={self.n}, l={self.l}")
        if abs(self.m) > self.l:
            raise DomainError(f"need |m| <= l, got l={self.l}, m={self.m}")
        if not self.Z >= 0:
            raise DomainError(f"Z must be non-negative, got {self.Z}")

    @property
    def label(self):
        return f"{self.n}{ORBITAL_LETTERS[self.l]}"

    @property
    def radial_nodes(self):
        return self.n - self.l - 1

    @classmethod
    def from_label(cls, label, m=0, Z=1.0):
        """Parse spectroscopic labels such as ``'1s'``, ``'3d'`` or ``'10m'``."""
        label = label.strip()
        n = int(label[:-1])
        l = ORBITAL_LETTERS.index(label[-1])
        return cls(n, l, m, Z)


@dataclass(frozen=True)
class ConfinedLevel:
    """A level of the atom inside a hard sphere of radius ``r_c``.

    ``energy`` is the Richardson-extrapolated eigenvalue. ``grid_energy`` is
    the eigenvalue of the finer Numerov grid itself, the one used to build
    the amplitude so that u(r_c) = 0 holds on that grid.
    ``kummer_verified`` is None when the check does not apply (E >= 0 or an
    ill-conditioned series).
    """

    state: QuantumState
    r_c: float
    energy: float
    grid_energy: float
    grid_size: int
    kummer_verified: bool | None = None


@dataclass(frozen=True, eq=False)
class RadialAmplitude:
    """Normalized radial amplitude psi(x) in position or momentum space.

    ``grid``/``values`` are a sampling for inspection; integrals go through
    :meth:`integrate`, which evaluates ``func`` adaptively. ``nodes`` are
    interior zeros used as quadrature breakpoints. For confined momentum
    amplitudes ``tail`` continues psi beyond ``domain_end`` up to ``tail_end``.
    """

    space: str
    grid: np.ndarray
    values: np.ndarray
    domain_end: float
    node_count: int
    l: int
    func: object
    nodes: tuple = ()
    scale: float = 1.0
    tail: object = None
    tail_end: float = 0.0
    tail_nodes: tuple = ()
    info: dict = field(default_factory=dict)

    def __call__(self, x):
        return self.func(np.asarray(x, dtype=float))

    def density(self, x):
        v = self(x)
        return v * v

    def integrate(self, g, tol=nm.DEFAULT_TOL):
        """Integral of g(x, rho(x)) x^2 dx over the full support."""

        def integrand(x):
            rho = self.density(x)
            return g(x, rho) * x * x

        if math.isinf(self.domain_end):
            # momentum densities decay algebraically, so use the stronger tail map
            power = 4 if self.space == MOMENTUM else 1
            return nm.integrate_semi_infinite(integrand, tol=tol, scale=self.scale, points=self.nodes, tail_power=power)
        total = nm.integrate_finite(integrand, 0.0, self.domain_end, tol=tol, points=self.nodes)
        if self.tail is not None:
            tail = self.tail

            def tail_integrand(x):
                v = tail(x)
                return g(x, v * v) * x * x

            total += nm.integrate_finite(
                tail_integrand, self.domain_end, self.tail_end, tol=tol, points=self.tail_nodes
            )
        return total

    def norm(self, tol=nm.DEFAULT_TOL):
        return self.integrate(lambda x, rho: rho, tol=tol)


@dataclass(frozen=True)
class ExpectationSet:
    """Radial moments in atomic units.

    ``delta_r``/``delta_p`` are the radial standard deviations
    sqrt(<x^2> - <x>^2). The 3D spreads about the origin, sqrt(<x^2>),
    are exposed as ``spread_r``/``spread_p``.
    """

    r1: float
    r2: float
    rm2: float
    p1: float
    p2: float
    pm2: float
    delta_r: float
    delta_p: float

    @property
    def spread_r(self):
        return math.sqrt(self.r2)

    @property
    def spread_p(self):
        return math.sqrt(self.p2)


# ---------------------------------------------------------------- free atom


def fha_energy(state):
    """Free-atom energy -Z^2 / (2 n^2) in Hartree."""
    return -state.Z**2 / (2.0 * state.n**2)


def _require_free(state):
    if not state.Z > 0:
        raise DomainError("free-atom amplitudes need Z > 0")


def _sign_change_roots(f, lo, hi, samples=4000):
    x = np.linspace(lo, hi, samples)
    y = f(x)
    roots = []
    for i in np.nonzero(y[:-1] * y[1:] < 0)[0]:
        roots.append(nm.find_root_bracketed(lambda t: float(f(np.array([t]))[0]), x[i], x[i + 1], tol=1e-15))
    return roots


@lru_cache(maxsize=256)
def _laguerre_zeros(k, a):
    if k == 0:
        return ()
    upper = 2.0 * k + a + 2.0 + 4.0 * math.sqrt(k * (k + a) + 1.0)
    roots = _sign_change_roots(lambda x: assoc_laguerre(k, a, x), 0.0, upper, samples=200 * (k + 2))
    if len(roots) != k:
        raise ConvergenceError(f"found {len(roots)} of {k} Laguerre zeros")
    return tuple(roots)


@lru_cache(maxsize=256)
def _gegenbauer_zeros(k, eta):
    if k == 0:
        return ()
    roots = _sign_change_roots(lambda t: gegenbauer(k, eta, t), -1.0, 1.0, samples=400 * (k + 2))
    if len(roots) != k:
        raise ConvergenceError(f"found {len(roots)} of {k} Gegenbauer zeros")
    return tuple(roots)


def _free_r_func(state):
    n, l, Z = state.n, state.l, state.Z
    k = n - l - 1
    log_norm = 1.5 * math.log(2.0 * Z / n) + 0.5 * (
        math.lgamma(k + 1) - math.log(2.0 * n) - math.lgamma(n + l + 1)
    )

    def func(r):
        x = 2.0 * Z * np.asarray(r, dtype=float) / n
        with np.errstate(divide="ignore"):
            logx = np.log(np.where(x > 0, x, 1.0))
        envelope = np.exp(log_norm + l * logx - 0.5 * x)
        if l > 0:
            envelope = np.where(x > 0, envelope, 0.0)
        return envelope * assoc_laguerre(k, 2 * l + 1, x)

    return func


def _free_p_func(state):
    n, l, Z = state.n, state.l, state.Z
    k = n - l - 1
    log_norm = (
        -1.5 * math.log(Z)
        + 2.0 * math.log(n)
        + 0.5 * (math.log(2.0 / math.pi) + math.lgamma(k + 1) - math.lgamma(n + l + 1))
        + (2 * l + 2) * math.log(2.0)
        + math.lgamma(l + 1)
    )

    def func(p):
        y = n * np.asarray(p, dtype=float) / Z
        y2 = y * y
        with np.errstate(divide="ignore"):
            logy = np.log(np.where(y > 0, y, 1.0))
        envelope = np.exp(log_norm + l * logy - (l + 2) * np.log1p(y2))
        if l > 0:
            envelope = np.where(y > 0, envelope, 0.0)
        if k == 0:
            return envelope
        t = (y2 - 1.0) / (y2 + 1.0)
        return envelope * gegenbauer(k, l + 1, t)

    return func


def fha_radial_r(state, grid=None):
    """Normalized free-atom radial amplitude psi_{n,l}(r).

    Laguerre form with the (2Z/n)^{3/2} factor that keeps it normalized for
    any Z. ``grid`` defaults to 2001 points on [0, 4 n^2 / Z].
    """
    _require_free(state)
    func = _free_r_func(state)
    scale = state.n**2 / state.Z
    nodes = tuple(x * state.n / (2.0 * state.Z) for x in _laguerre_zeros(state.radial_nodes, 2 * state.l + 1))
    if grid is None:
        grid = np.linspace(0.0, 4.0 * scale + 20.0 * state.n / state.Z, 2001)
    grid = np.asarray(grid, dtype=float)
    c0 = math.exp(
        1.5 * math.log(2.0 * state.Z / state.n)
        + 0.5 * (math.lgamma(state.radial_nodes + 1) - math.log(2.0 * state.n) - math.lgamma(state.n + state.l + 1))
        + state.l * math.log(2.0 * state.Z / state.n)
        + math.lgamma(state.n + state.l + 1)
        - math.lgamma(state.radial_nodes + 1)
        - math.lgamma(2 * state.l + 2)
    )
    info = {"energy": fha_energy(state), "Z": state.Z, "origin_c0": c0}
    return RadialAmplitude(
        space=POSITION,
        grid=grid,
        values=func(grid),
        domain_end=math.inf,
        node_count=state.radial_nodes,
        l=state.l,
        func=func,
        nodes=nodes,
        scale=0.5 * scale,
        info=info,
    )


def fha_radial_p(state, grid=None):
    """Normalized free-atom momentum amplitude |psi_{n,l}(p)| up to sign.

    Gegenbauer form, with the Z^{-3/2} factor restored; the global phase
    (-i)^l is dropped.
    """
    _require_free(state)
    func = _free_p_func(state)
    q = state.Z / state.n
    nodes = tuple(q * math.sqrt((1.0 + t) / (1.0 - t)) for t in _gegenbauer_zeros(state.radial_nodes, state.l + 1))
    if grid is None:
        grid = np.linspace(0.0, 20.0 * q, 2001)
    grid = np.asarray(grid, dtype=float)
    return RadialAmplitude(
        space=MOMENTUM,
        grid=grid,
        values=func(grid),
        domain_end=math.inf,
        node_count=state.radial_nodes,
        l=state.l,
        func=func,
        nodes=nodes,
        scale=q,
        info={"energy": fha_energy(state), "Z": state.Z},
    )


# ------------------------------------------------------------ confined atom

DEFAULT_GRID = 20_000


def _kummer_sign(a, b, z):
    """Sign of 1F1(a; b; z), or 0 when cancellation makes it untrustworthy."""
    if kummer_m_conditioning(a, b, z) > 1e11:
        return 0
    value = kummer_m(a, b, z)
    return int(np.sign(value))


def _kummer_check(l, Z, energy, r_c):
    if energy >= 0 or Z <= 0:
        return None
    delta = 1e-7 * abs(energy) + 1e-12
    signs = []
    for e in (energy - delta, energy + delta):
        kappa = math.sqrt(-2.0 * e)
        signs.append(_kummer_sign(l + 1.0 - Z / kappa, 2.0 * l + 2.0, 2.0 * r_c * kappa))
    if 0 in signs:
        return None
    return signs[0] != signs[1]


@lru_cache(maxsize=512)
def _cha_energy_cached(n, l, Z, r_c, grid_size):
    nodes = n - l - 1
    floor = -(Z**2) / (2.0 * (l + 1) ** 2) * 1.05 - 1e-3
    coarse = nm.shooting_eigenvalue(l, Z, r_c, nodes, grid_size, floor)
    fine = nm.shooting_eigenvalue(l, Z, r_c, nodes, 2 * grid_size, floor)
    return coarse, fine


def cha_energy(n, l, Z, r_c, grid_size=DEFAULT_GRID, m=0):
    """Energy of the (n - l)-th level of angular momentum l in a hard sphere.

    Numerov shooting on grids of ``grid_size`` and ``2 * grid_size`` steps,
    each bracketed by node counting and polished with Brent, then Richardson
    extrapolated (the scheme is fourth order). For E < 0 the result is also
    checked against the Kummer zero condition.
    """
    if not r_c > 0:
        raise DomainError("cavity radius must be positive")
    state = QuantumState(n, l, m, Z)
    coarse, fine = _cha_energy_cached(n, l, float(Z), float(r_c), int(grid_size))
    energy = fine + (fine - coarse) / 15.0
    return ConfinedLevel(
        state=state,
        r_c=float(r_c),
        energy=energy,
        grid_energy=fine,
        grid_size=int(grid_size),
        kummer_verified=_kummer_check(l, Z, energy, r_c),
    )


def frobenius_coefficients(l, Z, E, terms):
    """a_k of u = r^{l+1} sum a_k r^k, a_0 = 1, for the Coulomb equation."""
    coeffs = [1.0]
    for k in range(1, terms):
        prev2 = coeffs[k - 2] if k >= 2 else 0.0
        coeffs.append((-2.0 * Z * coeffs[k - 1] - 2.0 * E * prev2) / (k * (k + 2 * l + 1)))
    return np.array(coeffs)


def cha_radial_r(level, grid_size=None):
    """Normalized confined amplitude on [0, r_c] from the Numerov grid.

    The grid solution at ``level.grid_energy`` is splined in u = r psi;
    psi(r_c) = 0 is imposed exactly and psi = u / r with the r -> 0 limit.
    """
    state = level.state
    l, Z, r_c = state.l, state.Z, level.r_c
    size = 2 * level.grid_size if grid_size is None else int(grid_size)
    grid, u = nm.eigenfunction_grid(l, Z, level.grid_energy, r_c, size)
    # put the series normalization back (the kernels may have rescaled)
    start = nm._series_points(l)
    u /= u[start] / nm.frobenius_start(l, Z, level.grid_energy, grid[start])
    spline = CubicSpline(grid, u)
    idx = np.nonzero(u[1:-2] * u[2:-1] < 0)[0] + 1
    nodes = tuple(nm.find_root_bracketed(lambda r: float(spline(r)), grid[i], grid[i + 1], tol=1e-15) for i in idx)
    norm2 = nm.integrate_finite(lambda r: spline(r) ** 2, 0.0, r_c, tol=1e-13, points=nodes)
    amp = 1.0 / math.sqrt(norm2)
    lead = amp if l == 0 else 0.0

    def func(r):
        r = np.asarray(r, dtype=float)
        inside = (r > 0) & (r < r_c)
        safe = np.where(inside, r, 1.0)
        out = np.where(inside, amp * spline(safe) / safe, 0.0)
        return np.where(r == 0, lead, out)

    info = {
        "energy": level.grid_energy,
        "Z": Z,
        "origin_c0": amp,
        "edge_slope": float(amp * spline(r_c, 1)),
        "u_spline": spline,
        "u_scale": amp,
    }
    samples = grid[:: max(1, size // 4000)]
    return RadialAmplitude(
        space=POSITION,
        grid=samples,
        values=func(samples),
        domain_end=r_c,
        node_count=len(nodes),
        l=l,
        func=func,
        nodes=nodes,
        scale=min(r_c, (state.n**2) / max(Z, 1e-300)),
        info=info,
    )


def kinetic_second_moment(amp, tol=1e-12):
    """<p^2> = int [(u')^2 + l(l+1) u^2 / r^2] dr from a confined amplitude."""
    spline = amp.info["u_spline"]
    s = amp.info["u_scale"]
    l = amp.l

    def integrand(r):
        du = s * spline(r, 1)
        out = du * du
        if l > 0:
            safe = np.where(r > 0, r, 1.0)
            out = out + np.where(r > 0, l * (l + 1) * (s * spline(safe) / safe) ** 2, 0.0)
        return out

    return nm.integrate_finite(integrand, 0.0, amp.domain_end, tol=tol, points=amp.nodes)


# ----------------------------------------------------- Fourier-Bessel transform


def _mellin_bessel(l, mu):
    """int_0^inf x^mu j_l(x) dx in the analytically continued sense."""
    return math.sqrt(math.pi) * 2.0 ** (mu - 1.0) * math.gamma((l + mu + 1) / 2.0) / math.gamma((l - mu + 2) / 2.0)


def _origin_terms(l, Z, E, c0, terms=17):
    """Large-p terms of the odd powers in psi = c0 r^l sum a_k r^k.

    Returns (coefficients, powers) with psi ~ sum coef * p^-power.
    """
    a = frobenius_coefficients(l, Z, E, terms)
    ks = range(1, terms, 2)
    coefs = np.array([c0 * a[k] * _mellin_bessel(l, l + k + 2) for k in ks])
    powers = np.array([l + k + 3.0 for k in ks])
    return coefs, powers


def _q_derivative(l, Z, E, r, i):
    ll = l * (l + 1)
    val = ll * (-1) ** i * math.factorial(i + 1) * r ** (-2 - i) - 2.0 * Z * (-1) ** i * math.factorial(i) * r ** (-1 - i)
    if i == 0:
        val -= 2.0 * E
    return val


def _edge_terms(l, Z, E, r_c, slope, order=9):
    """Large-p terms of the wall at r_c, where u = 0 and u' = slope.

    Repeated integration by parts of int u(r) r j_l(pr) dr, with the exact
    finite expansion of x j_l(x) in powers of 1/x. The contribution is
    Im[exp(i(p r_c - l pi/2)) sum c_j p^-j].
    """
    ud = [0.0, slope]
    q = [_q_derivative(l, Z, E, r_c, i) for i in range(order)]
    for j in range(order - 1):
        ud.append(sum(math.comb(j, i) * q[i] * ud[j - i] for i in range(j + 1)))
    coef = [math.factorial(l + k) / (math.factorial(k) * math.factorial(l - k)) for k in range(l + 1)]
    terms = {}
    for m in range(1, order + 1):
        for k in range(l + 1):
            deriv = 0.0
            for j in range(m + 1):
                s = m - j
                rising = math.prod(range(k, k + s)) if s else 1
                deriv += math.comb(m, j) * ud[j] * (-1) ** s * rising * r_c ** (-k - s)
            c = (1j**k) * coef[k] * 2.0 ** (-k) * (-1) ** m * deriv / (1j ** (m + 1))
            power = k + m + 2
            terms[power] = terms.get(power, 0.0) + c
    powers = np.array(sorted(terms), dtype=float)
    return np.array([terms[int(pw)] for pw in powers]), powers


def asymptotic_tail(amp):
    """Large-p form of the momentum amplitude of a position amplitude.

    Same normalization as :func:`hankel_transform`.
    """
    l = amp.l
    Z = amp.info["Z"]
    E = amp.info["energy"]
    o_coef, o_pow = _origin_terms(l, Z, E, amp.info["origin_c0"])
    slope = amp.info.get("edge_slope")
    if slope is not None:
        r_c = amp.domain_end
        e_coef, e_pow = _edge_terms(l, Z, E, r_c, slope)
    pref = math.sqrt(2.0 / math.pi)

    def tail(p):
        p = np.asarray(p, dtype=float)
        inv = 1.0 / p
        out = np.zeros_like(p)
        for c, k in zip(o_coef, o_pow):
            out += c * inv**k
        if slope is not None:
            acc = np.zeros(p.shape, dtype=complex)
            for c, k in zip(e_coef, e_pow):
                acc += c * inv**k
            out += np.imag(np.exp(1j * (p * r_c - 0.5 * l * math.pi)) * acc)
        return pref * out

    return tail


def _bisect_all(f, lo, hi, iters=64):
    """Vectorized bisection over many sign-changing brackets at once."""
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    f_lo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        left = f_lo * f_mid <= 0
        hi = np.where(left, mid, hi)
        lo = np.where(left, lo, mid)
        f_lo = np.where(left, f_lo, f_mid)
    return 0.5 * (lo + hi)


def default_momentum_window(amp, state_scale=None):
    """p_max for the sampled momentum window of a position amplitude."""
    Z = amp.info.get("Z", 1.0)
    p_max = 40.0 * max(Z, 1.0)
    if not math.isinf(amp.domain_end):
        p_max = max(p_max, 80.0 / amp.domain_end)
    return p_max


def _momentum_grid(p_max, bend, points):
    s = np.linspace(0.0, math.asinh(p_max / bend), points)
    grid = bend * np.sinh(s)
    grid[-1] = p_max
    return grid


def _radial_nodes_for_transform(amp, p_max):
    if math.isinf(amp.domain_end):
        # walk out until psi r is negligible
        r_end = amp.scale * 8.0
        peak = np.max(np.abs(amp(np.linspace(0, r_end, 4001))) * np.linspace(0, r_end, 4001))
        while abs(amp(np.array([r_end]))[0]) * r_end > 1e-18 * peak:
            r_end *= 1.25
    else:
        r_end = amp.domain_end
    width = min(3.0 / p_max, amp.scale / 8.0, r_end / 64.0)
    panels = int(math.ceil(r_end / width))
    edges = np.linspace(0.0, r_end, panels + 1)
    rule = nm.gauss_legendre(16)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    r = (mid[:, None] + half[:, None] * rule.nodes[None, :]).ravel()
    w = (half[:, None] * rule.weights[None, :]).ravel()
    return r, w


def hankel_transform(amp, p):
    """sqrt(2/pi) int psi(r) j_l(p r) r^2 dr by fixed composite Gauss-Legendre."""
    p = np.asarray(p, dtype=float)
    r, w = _radial_nodes_for_transform(amp, max(float(np.max(p)), 1e-12))
    weighted = w * amp(r) * r * r
    out = np.empty_like(p)
    chunk = max(1, int(4_000_000 // r.size))
    for i in range(0, p.size, chunk):
        block = p[i : i + chunk]
        kernel = spherical_bessel_j(amp.l, np.outer(block, r).ravel()).reshape(block.size, r.size)
        out[i : i + chunk] = kernel @ weighted
    return math.sqrt(2.0 / math.pi) * out


def radial_to_momentum(amp, l=None, p_grid=None, p_max=None, points=3000, tail_factor=40.0):
    """Momentum amplitude of a position amplitude by Fourier-Bessel transform.

    The transform is sampled on ``p_grid`` (default: ``points`` sinh-spaced
    abscissae on [0, p_max]), splined, and continued past p_max by the
    asymptotic tail up to ``tail_factor * p_max``. The result is renormalized;
    a raw norm off by more than 10% raises ConvergenceError.
    """
    if amp.space != POSITION:
        raise DomainError("radial_to_momentum needs a position-space amplitude")
    if l is not None and l != amp.l:
        raise DomainError("l does not match the amplitude")
    l = amp.l
    if p_grid is None:
        if p_max is None:
            p_max = default_momentum_window(amp)
        p_grid = _momentum_grid(p_max, p_max / 8.0, points)
    p_grid = np.asarray(p_grid, dtype=float)
    p_max = float(p_grid[-1])
    raw = hankel_transform(amp, p_grid)
    spline = make_interp_spline(p_grid, raw, k=5)

    Z = amp.info["Z"]
    E = amp.info["energy"]
    slope = amp.info.get("edge_slope")
    raw_tail = asymptotic_tail(amp)

    tail_end = tail_factor * p_max
    tail_nodes = ()
    if slope is not None:
        period = math.pi / amp.domain_end
        count = int((tail_end - p_max) / period)
        if count <= 20000:
            probe = np.linspace(p_max, tail_end, 8 * count + 16)
            vals = raw_tail(probe)
            idx = np.nonzero(vals[:-1] * vals[1:] < 0)[0]
            tail_nodes = tuple(_bisect_all(raw_tail, probe[idx], probe[idx + 1]).tolist())
    idx = np.nonzero(raw[:-1] * raw[1:] < 0)[0]
    nodes = tuple(_bisect_all(spline, p_grid[idx], p_grid[idx + 1]).tolist())

    def unscaled(p):
        p = np.asarray(p, dtype=float)
        return np.where(p <= p_max, spline(np.minimum(p, p_max)), 0.0)

    trial = RadialAmplitude(
        space=MOMENTUM,
        grid=p_grid,
        values=raw,
        domain_end=p_max,
        node_count=len(nodes),
        l=l,
        func=unscaled,
        nodes=nodes,
        tail=raw_tail,
        tail_end=tail_end,
        tail_nodes=tail_nodes,
    )
    raw_norm = trial.norm(tol=1e-13)
    if abs(raw_norm - 1.0) > 0.1:
        raise ConvergenceError(f"momentum norm {raw_norm:.6g} before renormalization; p grid inadequate")
    factor = 1.0 / math.sqrt(raw_norm)

    def func(p):
        return factor * unscaled(p)

    def tail(p):
        return factor * raw_tail(p)

    mismatch = float(abs(raw_tail(np.array([p_max]))[0] - raw[-1]) / max(np.max(np.abs(raw)), 1e-300))
    return RadialAmplitude(
        space=MOMENTUM,
        grid=p_grid,
        values=factor * raw,
        domain_end=p_max,
        node_count=len(nodes),
        l=l,
        func=func,
        nodes=nodes,
        scale=1.0 / amp.scale if amp.scale > 0 else 1.0,
        tail=tail,
        tail_end=tail_end,
        tail_nodes=tail_nodes,
        info={"raw_norm": raw_norm, "tail_mismatch": mismatch, "Z": Z, "energy": E, "edge_slope": slope},
    )


def momentum_second_moment(amp_p, tol=1e-12):
    """<p^2> straight from a momentum amplitude.

    For a confined amplitude the oscillating p^-2 integrand left beyond the
    tail window is added in closed form from the leading wall term.
    """
    value = amp_p.integrate(lambda x, rho: rho * x * x, tol=tol)
    slope = amp_p.info.get("edge_slope")
    if amp_p.tail is not None and slope is not None:
        factor = 1.0 / math.sqrt(amp_p.info["raw_norm"])
        value += (factor * slope) ** 2 / (math.pi * amp_p.tail_end)
    return value


# ------------------------------------------------------------------ angular


def angular_norm(l, m):
    return (2 * l + 1) / (4.0 * math.pi) * math.exp(math.lgamma(l - abs(m) + 1) - math.lgamma(l + abs(m) + 1))


def angular_density(l, m):
    """|Y_lm|^2 as a function of theta, normalized on the full sphere."""
    if abs(m) > l:
        raise DomainError(f"need |m| <= l, got l={l}, m={m}")
    c = angular_norm(l, m)

    def chi(theta):
        x = np.cos(np.asarray(theta, dtype=float))
        return c * assoc_legendre(l, abs(m), x) ** 2

    return chi


def angular_density_cos(l, m):
    """|Y_lm|^2 as a function of x = cos(theta)."""
    c = angular_norm(l, m)

    def chi(x):
        return c * assoc_legendre(l, abs(m), np.clip(np.asarray(x, dtype=float), -1.0, 1.0)) ** 2

    return chi


@lru_cache(maxsize=256)
def legendre_zeros(l, m):
    """Zeros of P_l^m(x) in (-1, 1)."""
    count = l - abs(m)
    if count == 0:
        return ()
    roots = _sign_change_roots(lambda x: assoc_legendre(l, abs(m), x), -1.0 + 1e-12, 1.0 - 1e-12, samples=400 * (l + 2))
    if len(roots) != count:
        raise ConvergenceError(f"found {len(roots)} of {count} Legendre zeros")
    return tuple(roots)


# ------------------------------------------------------------- expectations


def expectation_values(rho_r, rho_p, tol=1e-12):
    """Radial moments <r>, <r^2>, <r^-2>, <p>, <p^2>, <p^-2>.

    <p^2> is taken in position space as 2 (E + Z <1/r>), which needs only
    the eigenvalue and the density; the other momentum moments come from
    the momentum density.
    """
    r1 = rho_r.integrate(lambda x, rho: rho * x, tol=tol)
    r2 = rho_r.integrate(lambda x, rho: rho * x * x, tol=tol)
    with np.errstate(divide="ignore", invalid="ignore"):
        rm2 = rho_r.integrate(lambda x, rho: np.where(x > 0, rho / (x * x), 0.0), tol=tol)
        rm1 = rho_r.integrate(lambda x, rho: np.where(x > 0, rho / x, 0.0), tol=tol)
        pm2 = rho_p.integrate(lambda x, rho: np.where(x > 0, rho / (x * x), 0.0), tol=tol)
    if not np.isfinite(pm2):
        raise ConvergenceError("<p^-2> integral diverged")
    p1 = rho_p.integrate(lambda x, rho: rho * x, tol=tol)
    E = rho_r.info["energy"]
    Z = rho_r.info["Z"]
    p2 = 2.0 * (E + Z * rm1)
    return ExpectationSet(
        r1=r1,
        r2=r2,
        rm2=rm2,
        p1=p1,
        p2=p2,
        pm2=pm2,
        delta_r=math.sqrt(max(r2 - r1 * r1, 0.0)),
        delta_p=math.sqrt(max(p2 - p1 * p1, 0.0)),
    )


# ------------------------------------------------------------ convenience


@lru_cache(maxsize=128)
def confined_amplitudes(n, l, Z, r_c, grid_size=DEFAULT_GRID, momentum_points=3000, p_max=None):
    """(level, rho_r, rho_p) for a confined state, cached per input tuple."""
    level = cha_energy(n, l, Z, r_c, grid_size=grid_size)
    amp_r = cha_radial_r(level)
    amp_p = radial_to_momentum(amp_r, points=momentum_points, p_max=p_max)
    return level, amp_r, amp_p


@lru_cache(maxsize=128)
def free_amplitudes(n, l, Z=1.0):
    state = QuantumState(n, l, 0, Z)
    return fha_radial_r(state), fha_radial_p(state)
