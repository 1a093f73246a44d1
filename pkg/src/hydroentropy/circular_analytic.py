"""Closed forms for node-less (n - l = 1) free-atom states.

For these states both radial polynomials collapse to constants and every
measure reduces to gamma and digamma functions. Everything is assembled in
log space so that n = 10 and beyond stay inside double range.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import numerics as nm
from .errors import DomainError
from .hydrogenic import QuantumState
from .specfun import EULER_GAMMA, digamma, harmonic_number, log_gamma


@dataclass(frozen=True)
class CircularState:
    """Node-less state of principal number n; l = n - 1 is implied."""

    n: int
    Z: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("n must be >= 1")
        if not self.Z > 0:
            raise DomainError("Z must be positive")

    @property
    def l(self):
        return self.n - 1


def _log_gamma_ratio_p(l):
    # ln[Gamma(2l+4) / (Gamma((2l+3)/2) Gamma((2l+5)/2))]
    return log_gamma(2 * l + 4) - log_gamma((2 * l + 3) / 2.0) - log_gamma((2 * l + 5) / 2.0)


def log_circ_moment(state, lam, space):
    """Natural log of the radial entropic moment omega^lam."""
    if not lam > 0:
        raise DomainError("entropic order must be positive")
    n, l, Z = state.n, state.l, state.Z
    if space in ("r", "position"):
        return (
            (3 * lam - 3) * math.log(2 * Z / n)
            + log_gamma(2 * l * lam + 3)
            - (2 * l * lam + 3) * math.log(lam)
            - lam * log_gamma(2 * l + 3)
        )
    if space in ("p", "momentum"):
        return (
            (3 * lam - 3) * math.log(n / Z)
            + (lam - 1) * math.log(2.0)
            + lam * _log_gamma_ratio_p(l)
            + log_gamma((2 * l * lam + 3) / 2.0)
            + log_gamma((2 * l * lam + 8 * lam - 3) / 2.0)
            - log_gamma(2 * l * lam + 4 * lam)
        )
    raise DomainError(f"space must be 'r' or 'p', got {space!r}")


def circ_moments(state, lam, space):
    """Radial entropic moment omega^lam of a circular state in r or p space."""
    return math.exp(log_circ_moment(state, lam, space))


def circ_renyi(state, alpha, beta):
    """(R_r^alpha, R_p^beta, R_r + R_p) in closed form."""
    if alpha == 1 or beta == 1:
        raise DomainError("Renyi order 1 is the Shannon limit")
    n, l, Z = state.n, state.l, state.Z
    R_r = (
        3 * math.log(n / (2 * Z))
        + (2 * l * alpha + 3) / (alpha - 1) * math.log(alpha)
        + (alpha * log_gamma(2 * l + 3) - log_gamma(2 * l * alpha + 3)) / (alpha - 1)
    )
    R_p = 3 * math.log(Z / (2 ** (1.0 / 3.0) * n)) + (
        beta * _log_gamma_ratio_p(l)
        + log_gamma((2 * l * beta + 3) / 2.0)
        + log_gamma((2 * l * beta + 8 * beta - 3) / 2.0)
        - log_gamma(2 * beta * (l + 2))
    ) / (1 - beta)
    return R_r, R_p, R_r + R_p


def circ_tsallis(state, alpha, beta):
    """(T_r^alpha, T_p^beta) in closed form."""
    if alpha == 1 or beta == 1:
        raise DomainError("Tsallis order 1 is the Shannon limit")
    T_r = (1.0 - circ_moments(state, alpha, "r")) / (alpha - 1)
    T_p = (1.0 - circ_moments(state, beta, "p")) / (beta - 1)
    return T_r, T_p


def circ_shannon(state):
    """(S_r, S_p) of a circular state from gamma and digamma values."""
    n, l, Z = state.n, state.l, state.Z
    S_r = (
        3 * math.log(n / (2 * Z))
        + (2 * l + 3)
        + log_gamma(2 * l + 3)
        - 2 * l * (harmonic_number(2 * l + 2) - EULER_GAMMA)
    )
    a = (2 * l + 3) / 2.0
    b = (2 * l + 5) / 2.0
    S_p = (
        math.log(Z**3 / (2 * n**3))
        - _log_gamma_ratio_p(l)
        - l * digamma(a)
        - (l + 4) * digamma(b)
        + (2 * l + 4) * digamma(2 * l + 4)
    )
    return S_r, S_p


def log_moment_integral(l, tol=1e-13):
    """int_0^inf p^(2l+2) (1+p^2)^-(2l+4) ln(1+p^2) dp by quadrature."""

    def f(p):
        p2 = p * p
        return p ** (2 * l + 2) * (1.0 + p2) ** (-(2 * l + 4)) * np.log1p(p2)

    return nm.integrate_semi_infinite(f, tol=tol, scale=1.0)


def circ_shannon_p_alt(state, tol=1e-13):
    """S_p through the logarithmic-moment integral instead of digammas."""
    n, l, Z = state.n, state.l, state.Z
    b = (2 * l + 5) / 2.0
    head = math.log(Z**3 / (2 * n**3)) - _log_gamma_ratio_p(l)
    middle = math.sqrt(math.pi) * l * math.exp(
        log_gamma(2 * l + 3) - (2 * l + 2) * math.log(2.0) - log_gamma(l + 2) - log_gamma(b)
    )
    last = (4 * l + 8) * math.exp(_log_gamma_ratio_p(l)) * log_moment_integral(l, tol=tol)
    return head + middle + last


def circ_onicescu(state):
    """(E_r, E_p) of a circular state."""
    n, l, Z = state.n, state.l, state.Z
    E_r = math.exp(3 * math.log(2 * Z / n) + log_gamma(4 * l + 3) - (4 * l + 3) * math.log(2.0) - 2 * log_gamma(2 * l + 3))
    E_p = math.exp(
        math.log(2.0)
        + 3 * math.log(n / Z)
        + 2 * _log_gamma_ratio_p(l)
        + log_gamma((4 * l + 3) / 2.0)
        + log_gamma((4 * l + 13) / 2.0)
        - log_gamma(4 * l + 8)
    )
    return E_r, E_p


def fha_fisher(state):
    """(I_rho, I_pi) of any free-atom state (n, l, m) in closed form."""
    if not isinstance(state, QuantumState):
        raise DomainError("fha_fisher takes a QuantumState")
    n, l, m, Z = state.n, state.l, abs(state.m), state.Z
    I_rho = 4 * Z**2 / n**2 * (1 - m / n)
    I_pi = 2 * n**2 / Z**2 * ((5 * n**2 + 1 - 3 * l * (l + 1)) - m * (8 * n - 6 * l - 3))
    return I_rho, I_pi
