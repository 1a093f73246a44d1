"""Regeneration of the reference tables, row for row.

Each builder returns ``(columns, rows)`` where ``rows`` are dicts keyed by
the fixed leading columns (system, n, l, m, Z, rc, alpha, beta) plus the
table's own measure columns. The (state, r_c) grids are fixed to the
reference grids in :mod:`hydroentropy.golden`.

Column order per table:

======  =======================================================
T3      S_ang, R_ang_alpha, R_ang_beta, T_ang_alpha, T_ang_beta, E_ang
T4      R_r, R_p                (free atom, radial)
T5      T_r, T_p
T6      S_r, S_p
T7      E_r, E_p
T8      R_rho, R_pi, R_total    (confined 1s and 2s)
T9      T_rho, T_pi, T_total
T10     S_rho, S_pi, S_total
T11     I_rho, I_pi
T12     E_rho, E_pi
TS1     S_p_digamma, S_p_integral, abs_diff  (circular n = 1..11)
======  =======================================================
"""

import math

from . import circular_analytic as ca
from . import golden
from . import hydrogenic as hy
from . import measures as me

LEAD = ("system", "n", "l", "m", "Z", "rc", "alpha", "beta")

TABLE_IDS = ("T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12", "TS1")

_FREE = {
    "T4": (golden.FREE_R, ("R_r", "R_p")),
    "T5": (golden.FREE_T, ("T_r", "T_p")),
    "T6": (golden.FREE_S, ("S_r", "S_p")),
    "T7": (golden.FREE_E, ("E_r", "E_p")),
}

_CONFINED = {
    "T8": (golden.CONFINED_R, ("R_rho", "R_pi", "R_total")),
    "T9": (golden.CONFINED_T, ("T_rho", "T_pi", "T_total")),
    "T10": (golden.CONFINED_S, ("S_rho", "S_pi", "S_total")),
    "T11": (golden.CONFINED_I, ("I_rho", "I_pi")),
    "T12": (golden.CONFINED_E, ("E_rho", "E_pi")),
}

_ANGULAR = ("S_ang", "R_ang_alpha", "R_ang_beta", "T_ang_alpha", "T_ang_beta", "E_ang")


def _lead(system, n, l, m, Z, rc, alpha, beta):
    return dict(zip(LEAD, (system, n, l, m, Z, rc, alpha, beta)))


def _params(config):
    return me.EntropicParams.make(config.alpha, config.beta)


def _angular_rows(config):
    a, b = config.alpha, config.beta
    rows = []
    for l in range(10):
        wa = me.entropic_moment_angular(l, 0, a)
        wb = me.entropic_moment_angular(l, 0, b)
        vals = (
            me.angular_shannon(l, 0),
            math.log(wa) / (1 - a),
            math.log(wb) / (1 - b),
            (1 - wa) / (a - 1),
            (1 - wb) / (b - 1),
            me.entropic_moment_angular(l, 0, 2.0),
        )
        rows.append({**_lead("angular", None, l, 0, None, None, a, b), **dict(zip(_ANGULAR, vals))})
    return list(_ANGULAR), rows


def _free_rows(table_id, config):
    ref, cols = _FREE[table_id]
    params = _params(config)
    rows = []
    for label in ref:
        st = hy.QuantumState.from_label(label)
        rep = me.measure_state("free", st.n, st.l, 0, 1.0, params=params, tol=config.tol)
        flat = rep.flat()
        row = _lead("free", st.n, st.l, 0, 1.0, None, params.alpha, params.beta)
        row.update({c: flat[c] for c in cols})
        rows.append(row)
    return list(cols), rows


def _confined_rows(table_id, config):
    ref, cols = _CONFINED[table_id]
    params = _params(config)
    rows = []
    for label in ("1s", "2s"):
        st = hy.QuantumState.from_label(label)
        for rc, _ in golden.confined_rows(ref, label):
            rep = me.measure_state(
                "confined",
                st.n,
                st.l,
                0,
                1.0,
                r_c=rc,
                params=params,
                grid_size=config.grid_size,
                momentum_points=config.momentum_points,
                p_max=config.p_max_value,
                tol=config.tol,
            )
            flat = rep.flat()
            row = _lead("confined", st.n, st.l, 0, 1.0, rc, params.alpha, params.beta)
            row.update({c: flat[c] for c in cols})
            rows.append(row)
    return list(cols), rows


def _shannon_routes_rows(config):
    cols = ["S_p_digamma", "S_p_integral", "abs_diff"]
    rows = []
    for n in range(1, 12):
        cs = ca.CircularState(n)
        s1 = ca.circ_shannon(cs)[1]
        s2 = ca.circ_shannon_p_alt(cs)
        rows.append({**_lead("free", n, n - 1, 0, 1.0, None, None, None), **dict(zip(cols, (s1, s2, abs(s1 - s2))))})
    return cols, rows


def build_table(table_id, config):
    """Regenerate one table; returns (measure columns, rows)."""
    key = table_id.upper()
    if key == "T3":
        return _angular_rows(config)
    if key in _FREE:
        return _free_rows(key, config)
    if key in _CONFINED:
        return _confined_rows(key, config)
    if key == "TS1":
        return _shannon_routes_rows(config)
    raise KeyError(f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)}")
