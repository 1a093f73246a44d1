"""Special-function kernels.

Everything here works in 64-bit floats. The orthogonal polynomials and the
spherical Bessel function accept numpy arrays for the continuous argument and
broadcast; the integer orders are plain ints.
"""

import math

import numpy as np

from .errors import ConvergenceError, DomainError

EULER_GAMMA = 0.57721566490153286060651209

# B_2k / (2k) for the digamma asymptotic series, k = 1..8
_DIGAMMA_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
)


def log_gamma(x):
    """Natural log of the gamma function for ``x > 0``."""
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    return math.lgamma(x)


def digamma(x):
    """Digamma function psi(x) = Gamma'(x)/Gamma(x) for ``x > 0``.

    Uses upward recurrence to x >= 12 followed by the Stirling-type
    asymptotic series.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"digamma needs x > 0, got {x}")
    shift = 0.0
    while x < 12.0:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for coeff in _DIGAMMA_ASYMPTOTIC:
        series += coeff * power
        power *= inv2
    return shift + math.log(x) - 0.5 / x - series


def harmonic_number(k):
    """Sum of 1/j for j = 1..k, summed directly."""
    return math.fsum(1.0 / j for j in range(1, int(k) + 1))


def assoc_laguerre(k, a, x):
    """Generalized Laguerre polynomial L_k^{(a)}(x) by three-term recurrence."""
    if k < 0:
        raise DomainError("Laguerre degree must be non-negative")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if k == 0:
        return prev if prev.ndim else float(prev)
    cur = 1.0 + a - x
    for j in range(1, k):
        prev, cur = cur, ((2 * j + 1 + a - x) * cur - (j + a) * prev) / (j + 1)
    return cur if np.ndim(cur) else float(cur)


def gegenbauer(k, eta, t):
    """Gegenbauer polynomial C_k^{(eta)}(t), eta > -1/2."""
    if k < 0:
        raise DomainError("Gegenbauer degree must be non-negative")
    if not eta > -0.5:
        raise DomainError("Gegenbauer parameter must exceed -1/2")
    t = np.asarray(t, dtype=float)
    prev = np.ones_like(t)
    if k == 0:
        return prev if prev.ndim else float(prev)
    cur = 2.0 * eta * t
    for j in range(1, k):
        prev, cur = cur, (2.0 * (j + eta) * t * cur - (j + 2.0 * eta - 1.0) * prev) / (j + 1)
    return cur if np.ndim(cur) else float(cur)


def assoc_legendre(l, m, x):
    """Associated Legendre function P_l^m(x) with the Condon-Shortley phase.

    Built upward in l from the closed-form P_m^m. Negative m uses
    P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
    """
    if l < 0 or abs(m) > l:
        raise DomainError(f"need 0 <= |m| <= l, got l={l}, m={m}")
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise DomainError("assoc_legendre needs |x| <= 1")
    if m < 0:
        mm = -m
        factor = (-1) ** mm * math.exp(math.lgamma(l - mm + 1) - math.lgamma(l + mm + 1))
        return factor * assoc_legendre(l, mm, x)
    somx2 = np.sqrt((1.0 - x) * (1.0 + x))
    pmm = np.ones_like(x)
    fact = 1.0
    for _ in range(m):
        pmm = -pmm * fact * somx2
        fact += 2.0
    if l == m:
        return pmm if pmm.ndim else float(pmm)
    pmmp1 = x * (2 * m + 1) * pmm
    if l == m + 1:
        return pmmp1 if pmmp1.ndim else float(pmmp1)
    for ll in range(m + 2, l + 1):
        pll = (x * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m)
        pmm, pmmp1 = pmmp1, pll
    return pmmp1 if pmmp1.ndim else float(pmmp1)


def _kummer_series(a, b, z, max_terms=10_000):
    """Power series of 1F1 with Neumaier summation; returns (sum, max |term|)."""
    total = 1.0
    comp = 0.0
    term = 1.0
    biggest = 1.0
    quiet = 0
    for k in range(max_terms):
        term *= (a + k) / (b + k) * z / (k + 1)
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        biggest = max(biggest, abs(term))
        if term == 0.0:
            return total + comp, biggest
        if abs(term) < 1e-16 * abs(total + comp):
            quiet += 1
            if quiet >= 30:
                return total + comp, biggest
        else:
            quiet = 0
    raise ConvergenceError(f"1F1({a}; {b}; {z}) series did not converge in {max_terms} terms")


def kummer_m(a, b, z):
    """Confluent hypergeometric function 1F1(a; b; z) for real arguments.

    Negative ``z`` goes through Kummer's transformation
    M(a, b, z) = e^z M(b - a, b, -z), which turns the alternating series into
    a positive one whenever b - a > 0.
    """
    if b <= 0 and float(b).is_integer():
        raise DomainError("1F1 undefined for b a non-positive integer")
    a, b, z = float(a), float(b), float(z)
    if float(a).is_integer() and a <= 0:
        return _kummer_series(a, b, z)[0]
    if z < 0.0 and b - a > 0.0:
        return math.exp(z) * _kummer_series(b - a, b, -z)[0]
    return _kummer_series(a, b, z)[0]


def kummer_m_conditioning(a, b, z):
    """Ratio of the largest series term to the result; large means cancellation."""
    a, b, z = float(a), float(b), float(z)
    if z < 0.0 and b - a > 0.0:
        value, biggest = _kummer_series(b - a, b, -z)
    else:
        value, biggest = _kummer_series(a, b, z)
    return biggest / abs(value) if value != 0.0 else math.inf


def spherical_bessel_j(l, x):
    """Spherical Bessel function j_l(x) for x >= 0.

    Upward recurrence from j_0, j_1 where x >= l (stable there); downward
    Miller recurrence normalized with sum_k (2k+1) j_k^2 = 1 where x < l.
    j_l(0) = delta_{l0}.
    """
    if l < 0:
        raise DomainError("spherical Bessel order must be non-negative")
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    if np.any(x < 0):
        raise DomainError("spherical_bessel_j needs x >= 0")
    out = np.zeros_like(x)
    zero = x == 0.0
    if l == 0:
        out[zero] = 1.0
    up = (x >= l) & ~zero
    if np.any(up):
        out[up] = _bessel_upward(l, x[up])
    down = (x < l) & ~zero
    if np.any(down):
        out[down] = _bessel_miller(l, x[down])
    return float(out[0]) if scalar else out


def _bessel_upward(l, x):
    s, c = np.sin(x), np.cos(x)
    j0 = s / x
    if l == 0:
        return j0
    j1 = s / (x * x) - c / x
    for k in range(1, l):
        j0, j1 = j1, (2 * k + 1) / x * j1 - j0
    return j1


def _bessel_miller(l, x):
    # start well above l; the recurrence damps the seed error geometrically
    start = l + 16 + int(math.sqrt(40.0 * (l + 1)))
    f_next = np.zeros_like(x)
    f_cur = np.full_like(x, 1e-30)
    want = np.zeros_like(x)
    norm = np.zeros_like(x)
    f0 = f1 = None
    for k in range(start, -1, -1):
        norm += (2 * k + 1) * f_cur * f_cur
        if k == l:
            want = f_cur.copy()
        if k == 1:
            f1 = f_cur.copy()
        if k == 0:
            f0 = f_cur.copy()
            break
        f_prev = (2 * k + 1) / x * f_cur - f_next
        f_next, f_cur = f_cur, f_prev
        big = np.abs(f_cur) > 1e150
        if np.any(big):
            scale = np.where(big, 1e-150, 1.0)
            f_cur = f_cur * scale
            f_next = f_next * scale
            want = want * scale
            norm = norm * scale * scale
            if f1 is not None:
                f1 = f1 * scale
    value = want / np.sqrt(norm)
    # fix the overall sign against whichever of j_0, j_1 is better conditioned
    j0 = np.sin(x) / x
    j1 = np.where(x > 1e-4, np.sin(x) / (x * x) - np.cos(x) / x, x / 3.0)
    ref, got = np.where(np.abs(j0) >= np.abs(j1), j0, j1), np.where(np.abs(j0) >= np.abs(j1), f0, f1)
    return np.where(ref * got < 0, -value, value)
