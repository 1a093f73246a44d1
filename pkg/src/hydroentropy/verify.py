"""The verification suite behind ``hydroentropy verify``.

Every check yields a :class:`~hydroentropy.oracle.CrosscheckReport`. Suites:

* ``energy``     shooting vs finite-difference matrix spectra
* ``fisher``     expectation-value Fisher vs the gradient functional
* ``moment``     Gauss-Legendre vs dense Simpson entropic moments
* ``circular``   closed forms vs the numerical pipeline, circular states
* ``shannon``    digamma vs log-moment-integral routes to S_p
* ``golden``     reference table cells (known-bad cells are skipped)
* ``bound``      Fisher, Shannon and conjugate Renyi uncertainty bounds

``fast`` restricts everything to n <= 3 and r_c in {0.5, 1, 5}.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import circular_analytic as ca
from . import golden
from . import hydrogenic as hy
from . import measures as me
from . import oracle as orc
from .config import RunConfig
from .errors import ConvergenceError


@dataclass(frozen=True)
class Matrix:
    n_max: int
    radii: tuple
    circular_n: int
    shannon_n: int
    free_n: int


SCOPES = {
    "fast": Matrix(3, (0.5, 1.0, 5.0), 3, 3, 3),
    "full": Matrix(4, (0.5, 1.0, 5.0, 40.0), 6, 11, 4),
}

ENERGY_REL = 1e-7
ENERGY_FLOOR = 1e-9
FISHER_REL = 1e-5
MOMENT_REL = 1e-9
CIRCULAR_REL = 1e-10
SHANNON_ABS = 1e-9


def _inequality(item, value, bound, above, slack=me.BOUND_SLACK):
    ok = value >= bound - slack * abs(bound) if above else value <= bound + slack * abs(bound)
    dev = abs(value - bound)
    rel = dev / abs(bound) if bound else math.inf
    return orc.CrosscheckReport(item, value, bound, dev, rel, slack, bool(ok))


def _failure(item, exc):
    return orc.CrosscheckReport(f"{item} [{type(exc).__name__}: {exc}]", math.nan, math.nan, math.inf, math.inf, 0.0, False)


def _confined(n, l, rc, config):
    return hy.confined_amplitudes(n, l, 1.0, float(rc), config.grid_size, config.momentum_points, config.p_max_value)


def _states(matrix):
    for rc in matrix.radii:
        for l in range(3):
            for n in range(l + 1, matrix.n_max + 1):
                yield n, l, rc


def energy_suite(matrix, config):
    out = []
    for rc in matrix.radii:
        for l in range(3):
            ns = list(range(l + 1, matrix.n_max + 1))
            if not ns:
                continue
            fd = orc.fd_matrix_energies(l, 1.0, rc, count=len(ns))
            for n, e_fd in zip(ns, fd):
                e = hy.cha_energy(n, l, 1.0, rc, grid_size=config.grid_size).energy
                label = hy.QuantumState(n, l).label
                out.append(orc.CrosscheckReport.compare(f"energy:{label}@rc={rc}", e, e_fd, ENERGY_REL, ENERGY_FLOOR))
    return out


def _free_extent(n, Z=1.0):
    # density ~ r^(2n-2) exp(-2Zr/n) is below 1e-40 of its peak well before this
    return (2.0 * n * n + 50.0 * n) / Z


def fisher_suite(matrix, config):
    out = []
    for n, l, rc in _states(matrix):
        label = hy.QuantumState(n, l).label
        item = f"fisher:{label}@rc={rc}"
        try:
            _, amp_r, amp_p = _confined(n, l, rc, config)
            prod = me.fisher(hy.expectation_values(amp_r, amp_p), l, 0).I_rho
            ref = orc.fisher_gradient_form(lambda r: amp_r(r) ** 2, l, rc)
            out.append(orc.CrosscheckReport.compare(item, prod, ref, FISHER_REL))
        except ConvergenceError as exc:
            out.append(_failure(item, exc))
    for n in range(1, matrix.free_n + 1):
        for l in range(n):
            amp_r, amp_p = hy.free_amplitudes(n, l, 1.0)
            prod = me.fisher(hy.expectation_values(amp_r, amp_p), l, 0).I_rho
            ref = orc.fisher_gradient_form(lambda r: amp_r(r) ** 2, l, _free_extent(n))
            out.append(orc.CrosscheckReport.compare(f"fisher:{hy.QuantumState(n, l).label}@free", prod, ref, FISHER_REL))
    return out


def _simpson_moments(amp, lams, upper):
    # one dense sampling per grid, reused for every order
    cache = {}

    def sampled(x):
        key = (x[0], x[-1], x.size)
        if key not in cache:
            cache[key] = np.abs(amp(x)) ** 2
        return cache[key]

    if math.isinf(amp.domain_end):
        # refine where the mass sits: split at a few multiples of the scale
        splits = tuple(c * amp.scale for c in (4.0, 16.0) if c * amp.scale < upper)
        pieces = [(0.0, upper, splits, tuple(amp.nodes))]
    else:
        pieces = [(0.0, amp.domain_end, (), tuple(amp.nodes))]
        if amp.tail is not None:
            pieces.append((amp.domain_end, amp.tail_end, (), ()))
    out = []
    for lam in lams:
        total = 0.0
        for a, b, splits, nodes in pieces:
            # nodes only matter for the kinks of fractional powers
            breaks = splits + (nodes if lam != int(lam) else ())
            total += orc.dense_grid_integrate(
                lambda x: np.where(sampled(x) > 0, sampled(x) ** lam, 0.0) * x * x, a, b, breaks=breaks
            )
        out.append(total)
    return out


def moment_suite(matrix, config):
    out = []
    cases = [(n, l, rc) for n, l, rc in _states(matrix)]
    cases += [(n, l, None) for n in range(1, matrix.free_n + 1) for l in range(n)]
    for n, l, rc in cases:
        label = hy.QuantumState(n, l).label
        if rc is None:
            amp_r, amp_p = hy.free_amplitudes(n, l, 1.0)
            where = "free"
        else:
            _, amp_r, amp_p = _confined(n, l, rc, config)
            where = f"rc={rc}"
        lams = (0.6, 2.0, 3.0)
        for lam, ref in zip(lams, _simpson_moments(amp_r, lams, _free_extent(n))):
            prod = me.entropic_moment_radial(amp_r, lam, tol=config.tol)
            out.append(orc.CrosscheckReport.compare(f"moment:r^{lam}:{label}@{where}", prod, ref, MOMENT_REL))
        lams = (2.0, 3.0)
        for lam, ref in zip(lams, _simpson_moments(amp_p, lams, 400.0 / n)):
            prod = me.entropic_moment_radial(amp_p, lam, tol=config.tol)
            out.append(orc.CrosscheckReport.compare(f"moment:p^{lam}:{label}@{where}", prod, ref, MOMENT_REL))
    return out


def circular_suite(matrix, config):
    out = []
    params = me.EntropicParams.make(config.alpha, config.beta)
    for n in range(1, matrix.circular_n + 1):
        cs = ca.CircularState(n)
        amp_r, amp_p = hy.free_amplitudes(n, n - 1, 1.0)
        label = hy.QuantumState(n, n - 1).label
        for lam in (0.6, 2.0, 3.0):
            for space, amp in (("r", amp_r), ("p", amp_p)):
                prod = ca.circ_moments(cs, lam, space)
                ref = me.entropic_moment_radial(amp, lam, tol=config.tol)
                out.append(orc.CrosscheckReport.compare(f"circular:{space}^{lam}:{label}", prod, ref, CIRCULAR_REL))
        rep = me.measure_state("free", n, n - 1, params=params, tol=config.tol)
        s_r, s_p = ca.circ_shannon(cs)
        out.append(orc.CrosscheckReport.compare(f"circular:S_r:{label}", s_r, rep.shannon.S_r, 1e-9))
        out.append(orc.CrosscheckReport.compare(f"circular:S_p:{label}", s_p, rep.shannon.S_p, 1e-9))
        r_r, r_p, _ = ca.circ_renyi(cs, params.alpha, params.beta)
        out.append(orc.CrosscheckReport.compare(f"circular:R_r:{label}", r_r, rep.renyi.R_r, 1e-9))
        out.append(orc.CrosscheckReport.compare(f"circular:R_p:{label}", r_p, rep.renyi.R_p, 1e-9))
    return out


def shannon_suite(matrix, config):
    out = []
    for n in range(1, matrix.shannon_n + 1):
        cs = ca.CircularState(n)
        a = ca.circ_shannon(cs)[1]
        b = ca.circ_shannon_p_alt(cs)
        out.append(orc.CrosscheckReport.compare(f"shannon-routes:n={n}", a, b, 0.0, SHANNON_ABS))
    return out


def _golden_report(item, computed, text, policy):
    tol = golden.tolerance(policy, text)
    ref = golden.value(text)
    dev = abs(computed - ref)
    return orc.CrosscheckReport(item, computed, ref, dev, dev / abs(ref), tol / abs(ref), bool(dev <= tol))


FREE_TABLES = {
    "FREE_R": ("R_r", "R_p"),
    "FREE_T": ("T_r", "T_p"),
    "FREE_S": ("S_r", "S_p"),
    "FREE_E": ("E_r", "E_p"),
}

CONFINED_TABLES = {
    "CONFINED_R": ("R_rho", "R_pi", "R_total"),
    "CONFINED_T": ("T_rho", "T_pi", "T_total"),
    "CONFINED_S": ("S_rho", "S_pi", "S_total"),
    "CONFINED_I": ("I_rho", "I_pi"),
    "CONFINED_E": ("E_rho", "E_pi"),
}

ANGULAR_KEYS = ("S_ang", "R_ang_alpha", "R_ang_beta", "T_ang_alpha", "T_ang_beta", "E_ang")


def angular_values(l, alpha=0.6, beta=3.0):
    wa = me.entropic_moment_angular(l, 0, alpha)
    wb = me.entropic_moment_angular(l, 0, beta)
    return (
        me.angular_shannon(l, 0),
        math.log(wa) / (1 - alpha),
        math.log(wb) / (1 - beta),
        (1 - wa) / (alpha - 1),
        (1 - wb) / (beta - 1),
        me.entropic_moment_angular(l, 0, 2.0),
    )


def golden_angular():
    out = []
    for row in golden.ANGULAR:
        l = row[0]
        for key, got, text in zip(ANGULAR_KEYS, angular_values(l), row[1:]):
            column = {"T_ang_alpha": "T_alpha", "T_ang_beta": "T_beta"}.get(key)
            if column and golden.is_known_bad("ANGULAR", l, None, column):
                continue
            out.append(_golden_report(f"golden:angular:{key}:l={l}", got, text, "angular"))
    return out


def golden_free(labels=None, config=None):
    """Free-atom cells; circular states use the closed forms."""
    config = config or RunConfig()
    out = []
    params = me.EntropicParams.make(0.6, 3.0)
    for label in golden.FREE_R:
        if labels is not None and label not in labels:
            continue
        st = hy.QuantumState.from_label(label)
        circular = st.n - st.l == 1
        if circular:
            cs = ca.CircularState(st.n)
            r_r, r_p, _ = ca.circ_renyi(cs, 0.6, 3.0)
            got = {
                "FREE_R": (r_r, r_p),
                "FREE_T": ca.circ_tsallis(cs, 0.6, 3.0),
                "FREE_S": ca.circ_shannon(cs),
                "FREE_E": ca.circ_onicescu(cs),
            }
        else:
            flat = me.measure_state("free", st.n, st.l, params=params, tol=config.tol).flat()
            got = {t: tuple(flat[c] for c in cols) for t, cols in FREE_TABLES.items()}
        policy = "circular" if circular else "free"
        for table, cols in FREE_TABLES.items():
            ref = getattr(golden, table)[label]
            for i, column in enumerate(golden.FREE_COLUMNS):
                if golden.is_known_bad(table, label, None, column):
                    continue
                out.append(_golden_report(f"golden:{cols[i]}:{label}", got[table][i], ref[i], policy))
    return out


def golden_confined(radii=None, config=None):
    config = config or RunConfig()
    out = []
    params = me.EntropicParams.make(0.6, 3.0)
    for table, cols in CONFINED_TABLES.items():
        ref = getattr(golden, table)
        policy = "fisher" if table == "CONFINED_I" else "confined"
        for label in ("1s", "2s"):
            st = hy.QuantumState.from_label(label)
            for rc, cells in golden.confined_rows(ref, label):
                if radii is not None and rc not in radii:
                    continue
                flat = me.measure_state(
                    "confined",
                    st.n,
                    st.l,
                    r_c=rc,
                    params=params,
                    grid_size=config.grid_size,
                    momentum_points=config.momentum_points,
                    p_max=config.p_max_value,
                    tol=config.tol,
                ).flat()
                for i, text in enumerate(cells):
                    if golden.is_known_bad(table, label, rc, golden.CONFINED_COLUMNS[i]):
                        continue
                    out.append(_golden_report(f"golden:{cols[i]}:{label}@rc={rc}", flat[cols[i]], text, policy))
    return out


def golden_variational(config=None):
    config = config or RunConfig()
    out = []
    for rc_text, (i_r, i_p) in golden.FISHER_VARIATIONAL.items():
        rc = float(rc_text)
        flat = me.measure_state(
            "confined", 1, 0, r_c=rc, grid_size=config.grid_size, momentum_points=config.momentum_points, tol=config.tol
        ).flat()
        out.append(_golden_report(f"variational:I_rho:1s@rc={rc}", flat["I_rho"], i_r, "variational"))
        out.append(_golden_report(f"variational:I_pi:1s@rc={rc}", flat["I_pi"], i_p, "variational"))
    return out


def golden_suite(matrix, config):
    fast = matrix is SCOPES["fast"]
    out = golden_angular()
    if fast:
        out += golden_free(labels={"1s", "2s", "2p", "3s", "3p", "3d"}, config=config)
        out += golden_confined(radii=set(matrix.radii), config=config)
    else:
        out += golden_free(config=config)
        out += golden_confined(config=config)
        out += golden_variational(config=config)
    return out


BOUND_STATES = ("1s", "2s", "2p", "3d")

BOUND_RADII = (0.1, 0.2, 0.3, 0.5, 0.6, 0.8, 1.0, 1.5, 2.5, 3.0, 5.0, 7.5, 10.0, 15.0, 20.0, 40.0)


def bound_reports(rep, tag):
    out = [
        _inequality(f"bound:fisher-lower:{tag}", rep.fisher.total, rep.fisher.lower, above=True),
        _inequality(f"bound:fisher-upper:{tag}", rep.fisher.total, rep.fisher.upper, above=False),
        _inequality(f"bound:shannon:{tag}", rep.shannon.total, rep.shannon.bound, above=True),
    ]
    if rep.renyi.bound is not None:
        out.append(_inequality(f"bound:renyi:{tag}", rep.renyi.total, rep.renyi.bound, above=True))
    return out


def bound_suite(matrix, config):
    out = []
    params = me.EntropicParams.make(config.alpha, config.beta)
    n_free = 10 if matrix is SCOPES["full"] else matrix.n_max
    for n in range(1, n_free + 1):
        for l in range(n):
            rep = me.measure_state("free", n, l, params=params, tol=config.tol)
            out += bound_reports(rep, f"{hy.QuantumState(n, l).label}@free")
    radii = BOUND_RADII if matrix is SCOPES["full"] else matrix.radii
    for label in BOUND_STATES:
        st = hy.QuantumState.from_label(label)
        for rc in radii:
            rep = me.measure_state(
                "confined",
                st.n,
                st.l,
                r_c=rc,
                params=params,
                grid_size=config.grid_size,
                momentum_points=config.momentum_points,
                p_max=config.p_max_value,
                tol=config.tol,
            )
            out += bound_reports(rep, f"{label}@rc={rc}")
    return out


SUITES = {
    "energy": energy_suite,
    "fisher": fisher_suite,
    "moment": moment_suite,
    "circular": circular_suite,
    "shannon": shannon_suite,
    "golden": golden_suite,
    "bound": bound_suite,
}


def run_verification(scope="fast", config=None, suites=None):
    """Run the named suites (all by default) and return every report."""
    matrix = SCOPES[scope]
    config = config or RunConfig()
    reports = []
    for name in suites or SUITES:
        try:
            reports += SUITES[name](matrix, config)
        except Exception as exc:  # a crashed suite is a failed check, not a crashed run
            reports.append(_failure(f"suite:{name}", exc))
    return reports
