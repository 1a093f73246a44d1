"""Entropic moments and the Shannon, Renyi, Tsallis, Onicescu and Fisher measures.

Radial pieces are integrals over |psi(x)|^2 x^2 dx. Angular pieces are
integrals of chi = |Y_lm|^2 over the whole sphere, azimuth included, so the
combined ("rho", "pi") quantities compose without any stray 2 pi factors:

    S_rho = S_r + S_ang,   omega_rho = omega_r * omega_ang,

and the position-momentum totals are S = S_rho + S_pi, R = R_rho + R_pi,
T = T_rho * T_pi, E = E_rho * E_pi and I = I_rho * I_pi.
"""

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import hydrogenic as hy
from . import numerics as nm
from .errors import DomainError

SHANNON_BOUND = 3.0 * (1.0 + math.log(math.pi))
BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class EntropicParams:
    """Renyi/Tsallis orders. ``conjugate`` asserts 1/alpha + 1/beta = 2."""

    alpha: float = 0.6
    beta: float = 3.0
    conjugate: bool = True

    def __post_init__(self):
        for name, v in (("alpha", self.alpha), ("beta", self.beta)):
            if not v > 0:
                raise DomainError(f"{name} must be positive, got {v}")
            if v == 1.0:
                raise DomainError(f"{name} = 1 is the Shannon limit; use shannon()")
        if self.conjugate and abs(1.0 / self.alpha + 1.0 / self.beta - 2.0) >= 1e-12:
            raise DomainError(f"alpha={self.alpha}, beta={self.beta} are not conjugate")

    @classmethod
    def make(cls, alpha=0.6, beta=3.0):
        """Build params, setting ``conjugate`` from the orders themselves."""
        return cls(alpha, beta, abs(1.0 / alpha + 1.0 / beta - 2.0) < 1e-12)


def _power(rho, lam):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(rho > 0, np.power(np.maximum(rho, 0.0), lam), 0.0)


def _neg_xlogx(rho):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(rho > 0, -rho * np.log(np.where(rho > 0, rho, 1.0)), 0.0)


# ------------------------------------------------------------------ moments


def _relative_integral(amp, g, tol):
    # the quadrature tolerance is absolute for small results; a rough first
    # pass fixes the magnitude so the second one is relative to the answer
    rough = amp.integrate(g, tol=max(tol, 1e-6))
    if rough == 0.0 or not math.isfinite(rough):
        return rough
    scale = abs(rough)
    return scale * amp.integrate(lambda x, rho: g(x, rho) / scale, tol=tol)


def entropic_moment_radial(amp, lam, tol=nm.DEFAULT_TOL):
    """omega^lam = int rho(x)^lam x^2 dx over the amplitude's support.

    ``tol`` is relative to the result.
    """
    if not lam > 0:
        raise DomainError("entropic order must be positive")
    if lam == 1:
        return amp.norm(tol=tol)
    return _relative_integral(amp, lambda x, rho: _power(rho, lam), tol)


def radial_shannon(amp, tol=nm.DEFAULT_TOL):
    """-int rho ln rho x^2 dx."""
    return amp.integrate(lambda x, rho: _neg_xlogx(rho), tol=tol)


_ANGULAR_ORDER = 200


def _smoothstep(t):
    # x(t) with x' = 140 t^3 (1-t)^3: kills algebraic endpoint cusps
    x = t**4 * (35.0 - 84.0 * t + 70.0 * t * t - 20.0 * t**3)
    return x, 140.0 * (t * (1.0 - t)) ** 3


def _angular_integral(l, m, g, exact):
    chi = hy.angular_density_cos(l, m)
    if exact:
        rule = nm.gauss_legendre(_ANGULAR_ORDER)
        return 2.0 * math.pi * rule.integrate(lambda x: g(chi(x)))
    edges = np.concatenate(([-1.0], np.sort(hy.legendre_zeros(l, m)), [1.0]))
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        w = b - a

        def f(t, a=a, w=w):
            x, dx = _smoothstep(t)
            return g(chi(a + w * x)) * dx * w

        total += nm.integrate_finite(f, 0.0, 1.0, tol=1e-14)
    return 2.0 * math.pi * total


def entropic_moment_angular(l, m, lam):
    """omega^lam over the full sphere, 2 pi int_{-1}^{1} chi(x)^lam dx.

    Integer orders up to 8 are polynomials in x and a 200-point rule is
    exact; other orders go through adaptive quadrature split at the zeros
    of P_l^m.
    """
    if abs(m) > l:
        raise DomainError(f"need |m| <= l, got l={l}, m={m}")
    if not lam > 0:
        raise DomainError("entropic order must be positive")
    exact = float(lam).is_integer() and lam * (2 * l + 1) < 2 * _ANGULAR_ORDER
    return _angular_integral(l, m, lambda c: _power(c, lam), exact)


def angular_shannon(l, m):
    """-int chi ln chi dOmega over the full sphere."""
    return _angular_integral(l, m, _neg_xlogx, False)


# ------------------------------------------------------------------ records


@dataclass(frozen=True)
class ShannonRecord:
    S_r: float
    S_p: float
    S_ang: float
    S_rho: float
    S_pi: float
    total: float
    bound: float = SHANNON_BOUND
    bound_ok: bool = True


@dataclass(frozen=True)
class RenyiRecord:
    alpha: float
    beta: float
    R_r: float
    R_p: float
    R_ang_alpha: float
    R_ang_beta: float
    R_rho: float
    R_pi: float
    total: float
    bound: float | None = None
    bound_ok: bool | None = None


@dataclass(frozen=True)
class TsallisRecord:
    alpha: float
    beta: float
    T_r: float
    T_p: float
    T_ang_alpha: float
    T_ang_beta: float
    T_rho: float
    T_pi: float
    total: float


@dataclass(frozen=True)
class OnicescuRecord:
    E_r: float
    E_p: float
    E_ang: float
    E_rho: float
    E_pi: float
    total: float


@dataclass(frozen=True)
class FisherRecord:
    I_rho: float
    I_pi: float
    total: float
    lower: float
    upper: float
    bound_ok: bool


@dataclass(frozen=True)
class MeasureReport:
    """All measures of one state, plus the three bound checks."""

    system: str
    state: hy.QuantumState
    r_c: float | None
    params: EntropicParams
    energy: float
    expectations: hy.ExpectationSet
    shannon: ShannonRecord
    renyi: RenyiRecord
    tsallis: TsallisRecord
    onicescu: OnicescuRecord
    fisher: FisherRecord
    bound_flags: dict = field(default_factory=dict)

    def flat(self):
        """Flat name -> value mapping used by the CSV/JSON writers."""
        out = {}
        for prefix, rec in (
            ("S", self.shannon),
            ("R", self.renyi),
            ("T", self.tsallis),
            ("E", self.onicescu),
            ("I", self.fisher),
        ):
            for key, value in asdict(rec).items():
                if key in ("alpha", "beta"):
                    continue
                name = key if key.startswith(prefix + "_") else f"{prefix}_{key}"
                out[name] = value
        for key, value in asdict(self.expectations).items():
            out[f"x_{key}"] = value
        out["energy"] = self.energy
        for key, value in self.bound_flags.items():
            out[f"ok_{key}"] = value
        return out


# ----------------------------------------------------------------- measures


def shannon(rho_r, rho_p, l, m, tol=nm.DEFAULT_TOL):
    """Shannon entropies, radial, angular, combined and total."""
    S_r = radial_shannon(rho_r, tol=tol)
    S_p = radial_shannon(rho_p, tol=tol)
    S_ang = angular_shannon(l, m)
    S_rho = S_r + S_ang
    S_pi = S_p + S_ang
    total = S_rho + S_pi
    return ShannonRecord(S_r, S_p, S_ang, S_rho, S_pi, total, SHANNON_BOUND, total >= SHANNON_BOUND - BOUND_SLACK)


def renyi_bound(params, expect):
    """Lower bound on R_rho^alpha + R_pi^beta for conjugate orders.

    The spreads are the 3D ones, sqrt(<r^2>) and sqrt(<p^2>), since the
    position and momentum vectors have zero mean.
    """
    a, b = params.alpha, params.beta
    spread = expect.spread_r * expect.spread_p
    return 3.0 * (-0.5 * (math.log(a) / (1.0 - a) + math.log(b) / (1.0 - b)) - math.log(spread / math.pi))


def renyi(rho_r, rho_p, l, m, params=None, expect=None, tol=nm.DEFAULT_TOL):
    """Renyi entropies of orders alpha (position) and beta (momentum).

    With conjugate orders the total is checked against :func:`renyi_bound`;
    ``expect`` is computed when not supplied.
    """
    params = params or EntropicParams()
    a, b = params.alpha, params.beta
    w_r = entropic_moment_radial(rho_r, a, tol=tol)
    w_p = entropic_moment_radial(rho_p, b, tol=tol)
    w_aa = entropic_moment_angular(l, m, a)
    w_ab = entropic_moment_angular(l, m, b)
    R_r = math.log(w_r) / (1.0 - a)
    R_p = math.log(w_p) / (1.0 - b)
    R_aa = math.log(w_aa) / (1.0 - a)
    R_ab = math.log(w_ab) / (1.0 - b)
    R_rho = (math.log(w_r) + math.log(w_aa)) / (1.0 - a)
    R_pi = (math.log(w_p) + math.log(w_ab)) / (1.0 - b)
    total = R_rho + R_pi
    bound = ok = None
    if params.conjugate:
        if expect is None:
            expect = hy.expectation_values(rho_r, rho_p)
        bound = renyi_bound(params, expect)
        ok = total >= bound - BOUND_SLACK
    return RenyiRecord(a, b, R_r, R_p, R_aa, R_ab, R_rho, R_pi, total, bound, ok)


def tsallis(rho_r, rho_p, l, m, params=None, tol=nm.DEFAULT_TOL):
    """Tsallis entropies; the total is the product T_rho * T_pi."""
    params = params or EntropicParams()
    a, b = params.alpha, params.beta
    w_r = entropic_moment_radial(rho_r, a, tol=tol)
    w_p = entropic_moment_radial(rho_p, b, tol=tol)
    w_aa = entropic_moment_angular(l, m, a)
    w_ab = entropic_moment_angular(l, m, b)
    T_r = (1.0 - w_r) / (a - 1.0)
    T_p = (1.0 - w_p) / (b - 1.0)
    T_aa = (1.0 - w_aa) / (a - 1.0)
    T_ab = (1.0 - w_ab) / (b - 1.0)
    T_rho = (1.0 - w_r * w_aa) / (a - 1.0)
    T_pi = (1.0 - w_p * w_ab) / (b - 1.0)
    return TsallisRecord(a, b, T_r, T_p, T_aa, T_ab, T_rho, T_pi, T_rho * T_pi)


def onicescu(rho_r, rho_p, l, m, tol=nm.DEFAULT_TOL):
    """Onicescu energies (second-order moments); products compose."""
    E_r = entropic_moment_radial(rho_r, 2.0, tol=tol)
    E_p = entropic_moment_radial(rho_p, 2.0, tol=tol)
    E_ang = entropic_moment_angular(l, m, 2.0)
    E_rho = E_r * E_ang
    E_pi = E_p * E_ang
    return OnicescuRecord(E_r, E_p, E_ang, E_rho, E_pi, E_rho * E_pi)


def fisher(expect, l, m):
    """Fisher information from radial expectation values.

    I_rho = 4<p^2> - 2(2l+1)|m|<r^-2>, I_pi = 4<r^2> - 2(2l+1)|m|<p^-2>,
    checked against 81/(<r^2><p^2>) <= I_rho I_pi <= 16 <r^2><p^2>. For
    m = 0 the upper bound is attained exactly, so a relative slack is
    allowed there.
    """
    if m != 0 and (expect.rm2 is None or expect.pm2 is None):
        raise DomainError("m != 0 needs <r^-2> and <p^-2>")
    shift = 2.0 * (2 * l + 1) * abs(m)
    I_rho = 4.0 * expect.p2 - (shift * expect.rm2 if m else 0.0)
    I_pi = 4.0 * expect.r2 - (shift * expect.pm2 if m else 0.0)
    total = I_rho * I_pi
    lower = 81.0 / (expect.r2 * expect.p2)
    upper = 16.0 * expect.r2 * expect.p2
    ok = lower * (1.0 - BOUND_SLACK) <= total <= upper * (1.0 + BOUND_SLACK)
    return FisherRecord(I_rho, I_pi, total, lower, upper, ok)


def measure_report(rho_r, rho_p, state, params=None, system="free", r_c=None, energy=None, tol=nm.DEFAULT_TOL):
    """Every measure for one state, with the bound flags collected."""
    params = params or EntropicParams()
    l, m = state.l, state.m
    expect = hy.expectation_values(rho_r, rho_p)
    sh = shannon(rho_r, rho_p, l, m, tol=tol)
    re = renyi(rho_r, rho_p, l, m, params, expect=expect, tol=tol)
    ts = tsallis(rho_r, rho_p, l, m, params, tol=tol)
    on = onicescu(rho_r, rho_p, l, m, tol=tol)
    fi = fisher(expect, l, m)
    flags = {"fisher": fi.bound_ok, "shannon": sh.bound_ok}
    if re.bound_ok is not None:
        flags["renyi"] = re.bound_ok
    if energy is None:
        energy = rho_r.info.get("energy", float("nan"))
    return MeasureReport(system, state, r_c, params, energy, expect, sh, re, ts, on, fi, flags)


def measure_state(
    system,
    n,
    l,
    m=0,
    Z=1.0,
    r_c=None,
    params=None,
    grid_size=hy.DEFAULT_GRID,
    momentum_points=3000,
    p_max=None,
    tol=nm.DEFAULT_TOL,
):
    """Build the amplitudes of a free or confined state and measure them.

    Amplitudes are cached per state, so repeated calls with other orders
    or tolerances only redo the integrals.
    """
    state = hy.QuantumState(n, l, m, Z)
    if system == "free":
        rho_r, rho_p = hy.free_amplitudes(n, l, float(Z))
        energy = hy.fha_energy(state)
        r_c = None
    elif system == "confined":
        if r_c is None or not r_c > 0:
            raise DomainError("confined system needs r_c > 0")
        level, rho_r, rho_p = hy.confined_amplitudes(n, l, float(Z), float(r_c), grid_size, momentum_points, p_max)
        energy = level.energy
    else:
        raise DomainError(f"system must be 'free' or 'confined', got {system!r}")
    return measure_report(rho_r, rho_p, state, params, system, r_c, energy, tol=tol)
