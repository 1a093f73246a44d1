"""Command-line front end: measure, table, sweep, spectrum and verify.

Every command writes CSV (default) or JSON. CSV rows start with the fixed
columns ``system,n,l,m,Z,rc,alpha,beta``; quantities that do not apply are
left as empty cells. Numbers carry 12 significant digits.
"""

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import hydrogenic as hy
from . import measures as me
from . import tables
from . import verify as vf
from .config import CONFIG_ENV, load_config
from .errors import BracketError, ConvergenceError, DomainError

LEAD = tables.LEAD

ALIASES = {"S": "S_total", "R": "R_total", "T": "T_total", "E": "E_total", "I": "I_total"}

REPORT_COLUMNS = ("item", "production", "oracle", "abs_dev", "rel_dev", "tolerance", "passed")


# ------------------------------------------------------------------ output


def _number(value):
    """Round to 12 significant digits; None for anything not finite."""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return float(f"{value:.12g}") if math.isfinite(value) else None
    return value


def _cell(value):
    value = _number(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def render_csv(columns, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def render_json(columns, rows):
    objs = [{c: _number(row.get(c)) for c in columns} for row in rows]
    return json.dumps(objs, indent=2, allow_nan=False) + "\n"


def emit(columns, rows, config):
    text = (render_json if config.format == "json" else render_csv)(list(columns), rows)
    if config.output in ("-", ""):
        sys.stdout.write(text)
    else:
        with open(config.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _lead(system, n, l, m, Z, rc, alpha, beta):
    return dict(zip(LEAD, (system, n, l, m, Z, rc, alpha, beta)))


# ---------------------------------------------------------------- commands


def _report_row(rep):
    p = rep.params
    row = _lead(rep.system, rep.state.n, rep.state.l, rep.state.m, rep.state.Z, rep.r_c, p.alpha, p.beta)
    row.update(rep.flat())
    return row


def cmd_measure(args, config):
    if args.system == "confined" and args.rc is None:
        raise DomainError("confined system needs --rc > 0")
    if args.system == "free" and args.rc is not None:
        raise DomainError("--rc only applies to the confined system")
    rep = me.measure_state(
        args.system,
        args.n,
        args.l,
        args.m,
        args.Z,
        r_c=args.rc,
        params=me.EntropicParams.make(config.alpha, config.beta),
        grid_size=config.grid_size,
        momentum_points=config.momentum_points,
        p_max=config.p_max_value,
        tol=config.tol,
    )
    row = _report_row(rep)
    emit(list(LEAD) + list(rep.flat()), [row], config)
    return 0


def cmd_table(args, config):
    cols, rows = tables.build_table(args.id, config)
    emit(list(LEAD) + list(cols), rows, config)
    return 0


def rc_grid(rc_min, rc_max, steps, log=False):
    """r_c values of a sweep, linear or logarithmic, endpoints included."""
    if not rc_min > 0:
        raise DomainError("rc_min must be positive")
    if not rc_max > rc_min:
        raise DomainError("rc_max must exceed rc_min")
    if steps < 2:
        raise DomainError("rc_steps must be >= 2")
    grid = np.geomspace(rc_min, rc_max, steps) if log else np.linspace(rc_min, rc_max, steps)
    return [float(x) for x in grid]


def parse_measures(text):
    """Comma list of measure columns; S, R, T, E, I stand for the totals."""
    names = [part.strip() for part in (text or "").split(",") if part.strip()]
    return [ALIASES.get(name, name) for name in names]


def _sweep_point(task):
    label, rc, measures, config = task
    st = hy.QuantumState.from_label(label)
    row = _lead("confined", st.n, st.l, 0, 1.0, rc, config.alpha, config.beta)
    try:
        rep = me.measure_state(
            "confined",
            st.n,
            st.l,
            0,
            1.0,
            r_c=rc,
            params=me.EntropicParams.make(config.alpha, config.beta),
            grid_size=config.grid_size,
            momentum_points=config.momentum_points,
            p_max=config.p_max_value,
            tol=config.tol,
        )
    except (ConvergenceError, BracketError, DomainError, FloatingPointError) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
        return row
    flat = rep.flat()
    row.update({name: flat[name] for name in measures})
    row["error"] = ""
    return row


def sweep_rows(states, rcs, measures, config, jobs=1):
    """One row per (state, r_c) in that order, whatever the completion order."""
    tasks = [(label, rc, measures, config) for label in states for rc in rcs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_sweep_point, tasks))
    return [_sweep_point(t) for t in tasks]


def cmd_sweep(args, config):
    measures = parse_measures(args.measures)
    known = set(_known_columns())
    bad = [m for m in measures if m not in known]
    if bad:
        raise DomainError(f"unknown measure(s): {', '.join(bad)}")
    states = [s.strip() for s in args.states.split(",") if s.strip()]
    for label in states:
        hy.QuantumState.from_label(label)
    rcs = rc_grid(args.rc_min, args.rc_max, args.rc_steps, log=args.log)
    columns = list(LEAD) + measures + ["error"]
    if not measures:
        emit(columns, [], config)
        return 0
    emit(columns, sweep_rows(states, rcs, measures, config, jobs=args.jobs), config)
    return 0


def _known_columns():
    rep = me.measure_state("free", 1, 0)
    return rep.flat().keys()


def spectrum_rows(l, Z, r_c, count, config, moments=True):
    """Lowest ``count`` confined levels of angular momentum l."""
    if count < 1:
        raise DomainError("count must be >= 1")
    rows = []
    for k in range(count):
        n = l + 1 + k
        row = _lead("confined", n, l, 0, Z, r_c, None, None)
        try:
            level = hy.cha_energy(n, l, Z, r_c, grid_size=config.grid_size)
            row.update(energy=level.energy, nodes=k, kummer_verified=level.kummer_verified)
            if moments:
                amp = hy.cha_radial_r(level)
                row["nodes"] = amp.node_count
                row["four_p2"] = 4.0 * hy.kinetic_second_moment(amp)
            row["error"] = ""
        except (ConvergenceError, BracketError) as exc:
            row["error"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    return rows


def cmd_spectrum(args, config):
    if not args.rc > 0:
        raise DomainError("--rc must be positive")
    rows = spectrum_rows(args.l, args.Z, args.rc, args.count, config, moments=not args.no_moments)
    emit(list(LEAD) + ["energy", "nodes", "kummer_verified", "four_p2", "error"], rows, config)
    return 0


def cmd_verify(args, config):
    reports = vf.run_verification(args.scope, config, suites=args.suite or None)
    rows = [dict(zip(REPORT_COLUMNS, (r.item, r.production, r.oracle, r.abs_dev, r.rel_dev, r.tolerance, r.passed))) for r in reports]
    emit(REPORT_COLUMNS, rows, config)
    failed = sum(not r.passed for r in reports)
    print(f"verify {args.scope}: {len(reports) - failed}/{len(reports)} passed", file=sys.stderr)
    return 1 if failed else 0


# ------------------------------------------------------------------ parser


def _common():
    parent = argparse.ArgumentParser(add_help=False)
    g = parent.add_argument_group("run configuration (flags override the config file)")
    g.add_argument("--config", help=f"key = value file; defaults to ${CONFIG_ENV}")
    g.add_argument("--tol", type=float, help="quadrature tolerance")
    g.add_argument("--grid-size", type=int, help="Numerov grid intervals")
    g.add_argument("--momentum-points", type=int, help="momentum grid size")
    g.add_argument("--p-max", help="'auto' or a fixed momentum cutoff")
    g.add_argument("--alpha", type=float, help="position-space order")
    g.add_argument("--beta", type=float, help="momentum-space order")
    g.add_argument("--format", choices=("csv", "json"), help="output format")
    g.add_argument("--output", help="output path, '-' for stdout")
    return parent


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(
        prog="hydroentropy",
        description="Entropic and Fisher measures of free and confined hydrogenic atoms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", parents=[common], help="all measures of one state")
    p.add_argument("--system", choices=("free", "confined"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--Z", type=float, default=1.0)
    p.add_argument("--rc", type=float, help="cavity radius (confined only)")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser(
        "table",
        parents=[common],
        help="regenerate a reference table",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=tables.__doc__.split("\n", 1)[1],
    )
    p.add_argument("id", choices=tables.TABLE_IDS, type=str.upper)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sweep", parents=[common], help="measures over a grid of cavity radii")
    p.add_argument("--states", required=True, help="comma list of labels, e.g. 1s,2s,2p")
    p.add_argument("--rc-min", type=float, required=True)
    p.add_argument("--rc-max", type=float, required=True)
    p.add_argument("--rc-steps", type=int, required=True)
    p.add_argument("--log", action="store_true", help="logarithmic r_c spacing")
    p.add_argument(
        "--measures",
        default="S,R,T,E,I",
        help="comma list of columns (S, R, T, E, I mean the totals); empty gives a header only",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("spectrum", parents=[common], help="lowest confined levels of one l")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--Z", type=float, default=1.0)
    p.add_argument("--rc", type=float, required=True)
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--no-moments", action="store_true", help="skip 4<p^2>")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", parents=[common], help="cross-check against independent oracles")
    p.add_argument("--scope", choices=tuple(vf.SCOPES), default="fast")
    p.add_argument("--suite", action="append", choices=tuple(vf.SUITES), help="restrict to a suite (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {
        "tol": args.tol,
        "grid_size": args.grid_size,
        "momentum_points": args.momentum_points,
        "p_max": args.p_max,
        "alpha": args.alpha,
        "beta": args.beta,
        "format": args.format,
        "output": args.output,
    }
    try:
        config = load_config(args.config, overrides)
        return args.func(args, config)
    except (ValueError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
