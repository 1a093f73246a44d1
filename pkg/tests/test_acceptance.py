"""The ten acceptance criteria, one test each.

Each test prints a PASS/FAIL line (also collected in the terminal summary).
Reference cells listed in ``golden.KNOWN_BAD`` are excluded from the literal
comparison; for every excluded cell the test instead asserts that the printed
value contradicts the rest of the printed data and that the computed value
agrees with the value the consistent data imply.
"""

import math

import pytest
from scipy.optimize import minimize_scalar

from hydroentropy import circular_analytic as ca
from hydroentropy import golden
from hydroentropy import measures as me
from hydroentropy import verify as vf
from hydroentropy.hydrogenic import QuantumState

CIRCULAR = ("1s", "2p", "3d", "4f", "10m")
PARAMS = me.EntropicParams.make(0.6, 3.0)


@pytest.fixture(scope="module")
def full():
    """Every report of the full verification matrix (about a minute)."""
    return vf.run_verification("full")


def _failed(reports):
    return [r for r in reports if not r.passed]


def _select(reports, prefix, where=lambda item: True):
    return [r for r in reports if r.item.startswith(prefix) and where(r.item)]


def _free_flat(label):
    st = QuantumState.from_label(label)
    return me.measure_state("free", st.n, st.l, params=PARAMS).flat()


def _excluded(table):
    return sorted(k for k in golden.KNOWN_BAD if k[0] == table)


def _excluded_note(keys):
    return "excluded: " + ", ".join(f"{k[0]}:{k[1]}{'' if k[2] is None else '@' + k[2]}:{k[3]}" for k in keys)


def _label(item):
    # "golden:R_r:10s" -> "10s"
    return item.rsplit(":", 1)[1].split("@")[0]


def _tsallis_evidence(label, column):
    """Failures for one flagged free Tsallis cell."""
    out = []
    implied, spread = golden.tsallis_from_renyi(label, column)
    printed = golden.FREE_T[label][golden.FREE_COLUMNS.index(column)]
    if abs(implied - golden.value(printed)) <= spread + golden.tolerance("free", printed):
        out.append(f"T_{column}({label}) is not inconsistent with its Renyi cell")
    computed = _free_flat(label)[f"T_{column}"]
    if abs(computed - implied) > spread + golden.tolerance("free", printed):
        out.append(f"T_{column}({label}) = {computed} misses the value {implied} implied by R")
    return out


# 1 -------------------------------------------------------------------------


def test_angular_table(verdict):
    reports = vf.golden_angular()
    failures = _failed(reports)
    bad = _excluded("ANGULAR")
    for _, l, _, column in bad:
        lam, r_idx, t_idx = (0.6, 2, 4) if column == "T_alpha" else (3.0, 3, 5)
        computed = vf.angular_values(l)[t_idx - 1]
        w = math.exp((1 - lam) * golden.value(golden.ANGULAR[l][r_idx]))
        implied = (1 - w) / (lam - 1)
        printed = golden.ANGULAR[l][t_idx]
        if abs(implied - golden.value(printed)) <= golden.tolerance("angular", printed):
            failures.append(f"angular {column} l={l} is not inconsistent with its Renyi cell")
        if abs(computed - implied) > 1e-10 * abs(implied):
            failures.append(f"angular {column} l={l}: {computed} vs implied {implied}")
    if len(reports) + len(bad) != 60:
        failures.append(f"expected 60 cells, compared {len(reports)} and excluded {len(bad)}")
    verdict(1, "angular measures, l = 0..9, 1e-8 relative", failures, f"{len(reports)} cells; {_excluded_note(bad)}")


# 2 -------------------------------------------------------------------------


def test_circular_closed_forms(verdict):
    reports = vf.golden_free(labels=set(CIRCULAR))
    failures = _failed(reports)
    bad = sorted(k for k in golden.KNOWN_BAD if k[0].startswith("FREE") and k[1] in CIRCULAR)
    for table, label, _, column in bad:
        if (table, label, column) == ("FREE_E", "2p", "r"):
            failures += _onicescu_2p_evidence()
        else:
            failures.append(f"unexpected exclusion {table}:{label}:{column}")
    if len(reports) + len(bad) != 4 * 2 * len(CIRCULAR):
        failures.append(f"expected 40 cells, compared {len(reports)} and excluded {len(bad)}")
    worst = max(r.rel_dev for r in reports)
    verdict(
        2,
        "circular free-atom states from closed forms, 1e-10 relative or one printed digit",
        failures,
        f"{len(reports)} cells, worst relative gap {worst:.1e}; {_excluded_note(bad)}",
    )


def _onicescu_2p_evidence():
    # the printed radial E_r(2p) is the radial value times the l = 1 angular factor
    out = []
    printed = golden.value(golden.FREE_E["2p"][0])
    computed = ca.circ_onicescu(ca.CircularState(2))[0]
    angular = golden.value(golden.ANGULAR[1][6])
    if abs(computed - 5 / 512) > 1e-15:
        out.append(f"E_r(2p) = {computed}, expected 5/512")
    if abs(computed * angular - printed) > 1e-8 * printed:
        out.append(f"E_r(2p) times the angular factor is {computed * angular}, printed {printed}")
    return out


# 3 -------------------------------------------------------------------------


def test_free_noncircular_states(verdict):
    labels = {label for label in golden.FREE_R if label not in CIRCULAR}
    reports = vf.golden_free(labels=labels)
    failures = _failed(reports)
    bad = [k for k in golden.KNOWN_BAD if k[0].startswith("FREE") and k[1] in labels]
    for table, label, _, column in bad:
        if table == "FREE_T":
            failures += _tsallis_evidence(label, column)
        else:
            failures.append(f"unexpected exclusion {table}:{label}:{column}")
    expected = 4 * 2 * len(labels) - len(bad)
    if len(reports) != expected:
        failures.append(f"expected {expected} cells, got {len(reports)}")
    s10 = _free_flat("10s")
    if abs(s10["S_r"] - 14.83421801) > 1e-8 or abs(s10["S_p"] + 8.5831) > 1e-4:
        failures.append(f"10s Shannon pair {s10['S_r']}, {s10['S_p']}")
    verdict(
        3,
        "non-circular free-atom states, printed precision or 1e-6 relative",
        failures,
        f"{len(reports)} cells; {_excluded_note(sorted(bad))}",
    )


# 4 -------------------------------------------------------------------------


def test_shannon_route_equivalence(verdict):
    gaps = {n: abs(ca.circ_shannon(ca.CircularState(n))[1] - ca.circ_shannon_p_alt(ca.CircularState(n))) for n in range(1, 12)}
    failures = [f"n={n}: {g:.2e}" for n, g in gaps.items() if not g <= 1e-9]
    verdict(4, "digamma and log-moment routes to S_p agree, n <= 11", failures, f"max gap {max(gaps.values()):.1e}")


# 5 -------------------------------------------------------------------------


def test_confined_entropies(verdict, full):
    prefixes = ("golden:R_", "golden:T_", "golden:S_", "golden:E_")
    reports = [r for r in _select(full, "golden:", lambda i: "@rc=" in i) if r.item.startswith(prefixes)]
    failures = _failed(reports)
    bad = [k for k in golden.KNOWN_BAD if k[0] in ("CONFINED_R", "CONFINED_T", "CONFINED_S", "CONFINED_E")]
    for table, label, rc, column in bad:
        rows = dict(golden.confined_rows(getattr(golden, table), label))
        cells = rows[float(rc)]
        if table == "CONFINED_S" and column == "total":
            printed_sum = golden.value(cells[0]) + golden.value(cells[1])
            if abs(printed_sum - golden.value(cells[2])) < 0.01:
                failures.append(f"{table}:{label}@{rc} total is consistent after all")
            n = int(label[0])
            computed = me.measure_state("confined", n, 0, r_c=float(rc)).flat()["S_total"]
            if abs(computed - printed_sum) > golden.tolerance("confined", cells[1]):
                failures.append(f"{table}:{label}@{rc}: {computed} vs printed parts {printed_sum}")
        else:
            failures.append(f"unexpected exclusion {table}:{label}@{rc}:{column}")
    expected = sum(
        len(row) - 1 for t in ("CONFINED_R", "CONFINED_T", "CONFINED_S", "CONFINED_E") for rows in getattr(golden, t).values() for row in rows
    ) - len(bad)
    if len(reports) != expected:
        failures.append(f"expected {expected} cells, got {len(reports)}")
    rho = [r for r in reports if r.item.startswith("golden:R_rho:1s@rc=0.1")]
    if not rho or abs(rho[0].production + 6.0449530234201) > 6.0449530234201e-5:
        failures.append("R_rho(1s, r_c = 0.1) anchor")
    verdict(
        5,
        "confined 1s/2s Renyi, Tsallis, Shannon, Onicescu at every printed r_c",
        failures,
        f"{len(reports)} cells; {_excluded_note(sorted(bad))}",
    )


# 6 -------------------------------------------------------------------------


def test_confined_fisher(verdict, full):
    cells = _select(full, "golden:I_")
    variational = _select(full, "variational:")
    failures = _failed(cells) + _failed(variational)
    expected = sum(2 * len(rows) for rows in golden.CONFINED_I.values())
    if len(cells) != expected:
        failures.append(f"expected {expected} Fisher cells, got {len(cells)}")
    if len(variational) != 2 * len(golden.FISHER_VARIATIONAL):
        failures.append("variational estimates missing")
    verdict(
        6,
        "confined Fisher information 1e-5 relative; variational estimates 1e-2",
        failures,
        f"{len(cells)} cells, {len(variational)} variational",
    )


# 7 -------------------------------------------------------------------------


def test_uncertainty_bounds(verdict, full):
    reports = _select(full, "bound:")
    failures = _failed(reports)
    free = {_label(r.item) for r in reports if r.item.endswith("@free")}
    confined = {r.item.split(":", 2)[2] for r in reports if "@rc=" in r.item}
    if len(free) != sum(range(1, 11)):
        failures.append(f"free matrix has {len(free)} states")
    if len(confined) != len(vf.BOUND_STATES) * len(vf.BOUND_RADII):
        failures.append(f"confined matrix has {len(confined)} points")
    verdict(
        7,
        "Fisher, Shannon and conjugate Renyi bounds over the state matrix",
        failures,
        f"{len(reports)} inequalities, {len(free)} free states, {len(confined)} confined points",
    )


# 8 -------------------------------------------------------------------------


MEASURE_KEYS = (
    "S_rho", "S_pi", "S_total", "R_rho", "R_pi", "R_total", "T_rho", "T_pi", "T_total",
    "E_rho", "E_pi", "E_total", "I_rho", "I_pi", "I_total",
)


def test_large_cavity_limit(verdict):
    failures = []
    worst = 0.0
    for label, n in (("1s", 1), ("2s", 2)):
        conf = me.measure_state("confined", n, 0, r_c=40.0, params=PARAMS).flat()
        free = me.measure_state("free", n, 0, params=PARAMS).flat()
        if n == 1:
            # the 1s reference comes from the closed forms
            cs = ca.CircularState(1)
            free["S_rho"] = ca.circ_shannon(cs)[0] + free["S_ang"]
            free["I_rho"], free["I_pi"] = ca.fha_fisher(QuantumState(1, 0))
        for key in MEASURE_KEYS:
            gap = abs(conf[key] - free[key]) / abs(free[key])
            worst = max(worst, gap)
            if not gap <= 1e-6:
                failures.append(f"{label} {key}: {conf[key]} vs {free[key]}")
    # 2s T_total fails: the exact cavity value (Kummer root, checked in
    # test_hydrogenic) is itself 1.2e-6 away from the free atom
    verdict(8, "r_c = 40 matches the free atom for 1s and 2s, 1e-6 relative", failures, f"worst gap {worst:.1e}")


# 9 -------------------------------------------------------------------------


def test_oracle_equivalence(verdict, full):
    groups = {
        "energy": (_select(full, "energy:"), 1e-7),
        "fisher": (_select(full, "fisher:"), 1e-5),
        "moment": (_select(full, "moment:"), 1e-9),
    }
    failures = []
    detail = []
    for name, (reports, tol) in groups.items():
        if not reports:
            failures.append(f"no {name} checks")
            continue
        failures += _failed(reports)
        failures += [f"{r.item} tolerance {r.tolerance}" for r in reports if r.tolerance > tol]
        detail.append(f"{name} {len(reports)} (worst {max(r.rel_dev for r in reports):.0e})")
    # crashed suites show up as failed "suite:" reports
    failures += _select(full, "suite:")
    verdict(9, "shooting/FD energies, expectation/gradient Fisher, GL/Simpson moments", failures, "; ".join(detail))


# 10 ------------------------------------------------------------------------


def test_trends(verdict):
    failures = []
    renyi = [ca.circ_renyi(ca.CircularState(n), 0.6, 3.0) for n in range(1, 7)]
    if not all(a[0] < b[0] for a, b in zip(renyi, renyi[1:])):
        failures.append("R_r not increasing with n")
    if not all(a[1] > b[1] for a, b in zip(renyi, renyi[1:])):
        failures.append("R_p not decreasing with n")

    radii = [rc for rc, _ in golden.confined_rows(golden.CONFINED_I, "1s")]
    flats = [me.measure_state("confined", 1, 0, r_c=rc).flat() for rc in radii]
    i_rho = [f["I_rho"] for f in flats]
    i_pi = [f["I_pi"] for f in flats]
    if not all(a > b for a, b in zip(i_rho, i_rho[1:])):
        failures.append("I_rho not decreasing with r_c")
    if not all(a < b for a, b in zip(i_pi, i_pi[1:])):
        failures.append("I_pi not increasing with r_c")

    def s_total(rc):
        return me.measure_state("confined", 1, 0, r_c=float(rc)).flat()["S_total"]

    best = minimize_scalar(s_total, bounds=(1.5, 3.0), method="bounded", options={"xatol": 1e-3})
    lo, hi = s_total(1.5), s_total(3.0)
    interior = 1.5 < best.x < 3.0 and best.fun < lo and best.fun < hi
    if not interior:
        failures.append(f"S minimum at r_c = {best.x} ({best.fun}); ends {lo}, {hi}")
    verdict(
        10,
        "trends in n and r_c; interior minimum of total S",
        failures,
        f"S_min = {best.fun:.6f} at r_c = {best.x:.3f}",
    )
