"""Command-line entry point: ``landau {u,figure1,figure2,matrix,sweep,verify}``.

Exit codes: 0 success, 2 configuration error, 3 numerical or truncation
failure (including a failed ``verify``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .config import FIGURE1_PRESETS, RunConfig, load_config
from .errors import ConfigError, NumericalError, StepSizeError, TruncationError
from .fourier import compute_u, u_spectrum_sweep
from .geometry import drift_path, phases
from .oracle import OracleReport, compare_with_analytic
from .physics import derive_scales
from .transitions import (
    alpha_from_u,
    survival_fejer,
    sweep_over_intensity,
    sweep_over_levels,
    transition_matrix,
)

EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL = 0, 2, 3

FIGURE_COLUMNS = ("survival", "transition", "fejer_transition")


def _fmt(value):
    return format(value, ".17g") if isinstance(value, float) else str(value)


def _write(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header, rows, comments=()):
    buf = io.StringIO()
    for line in comments:
        buf.write(f"# {line}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _emit_table(header, rows, args, comments=()):
    if args.format == "json":
        _write(json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n", args.out)
    else:
        _write(_csv_text(header, rows, comments), args.out)


def _gnuplot_script(csv_path, xcol, title):
    return (
        "set datafile separator ','\n"
        f"set title '{title}'\n"
        f"set xlabel '{xcol}'\n"
        "set ylabel 'probability'\n"
        "set key bottom right\n"
        f"plot '{csv_path}' using 1:3 skip 1 with lines title 'transition', \\\n"
        f"     '{csv_path}' using 1:4 skip 1 with lines dashtype 2 title 'Fejer'\n"
    )


def _config(args) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()
    if args.seed is not None:
        cfg = cfg.with_seed(args.seed)
    return cfg


def _require_field(cfg):
    if cfg.field is None:
        raise ConfigError("this command needs a [field] section in the config")
    return cfg.field


def cmd_u(args):
    cfg = _config(args)
    spec = _require_field(cfg)
    scales = derive_scales(cfg.physics, cfg.k_override)
    drive = compute_u(spec, scales, cfg.physics, cfg.t_final, cfg.quadrature)
    path_R = drift_path(spec, cfg.physics, drive.u_path.t)
    geo = phases(path_R, drive.u_path, cfg.physics)
    summary = {
        "u_re": drive.u.real,
        "u_im": drive.u.imag,
        "x": drive.x,
        "gamma": geo.gamma,
        "beta": geo.beta,
        "area_u": geo.area_u,
        "area_R": geo.area_R,
        "omega": scales.omega,
        "k": scales.k,
        "estimates": drive.resolution_report.to_dict(),
        "drift_warnings": list(path_R.warnings),
    }
    sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    if args.out:
        drive.u_path.to_csv(args.out, header=("t", "u_re", "u_im"))
    return EXIT_OK


def cmd_figure1(args):
    cfg = _config(args)
    x = args.x if args.x is not None else cfg.figure1.x
    if args.preset:
        x = FIGURE1_PRESETS[args.preset]
    if x is None:
        raise ConfigError("figure1 needs --x or --preset (body: x=8, caption: x=10)")
    n_max = args.n_max if args.n_max is not None else cfg.figure1.n_max
    if not x > 0 or n_max < 1:
        raise ConfigError("figure1 needs x > 0 and n_max >= 1")
    rows = []
    for n, transition in sweep_over_levels(x, range(n_max + 1)):
        fejer = 1.0 - survival_fejer(n, x)
        rows.append((n, 1.0 - transition, transition, fejer))
    _emit_table(("n",) + FIGURE_COLUMNS, rows, args)
    if args.gnuplot and args.out:
        _write(_gnuplot_script(args.out, "n", f"transition probability, x = {x:g}"), args.gnuplot)
    return EXIT_OK


def figure2_grid(x_max, points):
    return [x_max * (i / points) for i in range(1, points + 1)]


def cmd_figure2(args):
    cfg = _config(args)
    n = args.n if args.n is not None else cfg.figure2.n
    x_max = args.x_max if args.x_max is not None else cfg.figure2.x_max
    points = args.points if args.points is not None else cfg.figure2.points
    if n < 0 or not x_max > 0 or points < 1:
        raise ConfigError("figure2 needs n >= 0, x_max > 0, points >= 1")
    rows = []
    for x, transition in sweep_over_intensity(n, figure2_grid(x_max, points)):
        rows.append((x, 1.0 - transition, transition, 1.0 - survival_fejer(n, x)))
    _emit_table(("x",) + FIGURE_COLUMNS, rows, args)
    if args.gnuplot and args.out:
        _write(_gnuplot_script(args.out, "x", f"transition probability, n = {n}"), args.gnuplot)
    return EXIT_OK


def _matrix_alpha(args, cfg):
    t = cfg.transitions
    if args.x is not None:
        if args.x < 0:
            raise ConfigError("--x must be non-negative")
        return complex(math.sqrt(args.x)), "flag --x"
    if t.alpha_re is not None or t.alpha_im is not None:
        return complex(t.alpha_re or 0.0, t.alpha_im or 0.0), "config alpha"
    if t.x is not None:
        return complex(math.sqrt(t.x)), "config x"
    if cfg.field is not None:
        scales = derive_scales(cfg.physics, cfg.k_override)
        drive = compute_u(cfg.field, scales, cfg.physics, cfg.t_final, cfg.quadrature)
        return alpha_from_u(drive.u, scales.k), "field"
    raise ConfigError("matrix needs --x, [transitions] alpha/x, or a [field] section")


def cmd_matrix(args):
    cfg = _config(args)
    n = args.n if args.n is not None else cfg.transitions.n
    alpha, origin = _matrix_alpha(args, cfg)
    table = transition_matrix(n, alpha, cfg.transitions.m_max, cfg.transitions.tail_tolerance)
    if args.format == "json":
        _write(json.dumps({**table.to_dict(), "alpha_source": origin}, indent=2) + "\n", args.out)
        return EXIT_OK
    cumulative = np.cumsum(table.probabilities)
    rows = [(m, float(p), float(c)) for m, (p, c) in enumerate(zip(table.probabilities, cumulative))]
    comments = (
        f"n_source={table.n_source}",
        f"alpha={_fmt(alpha.real)},{_fmt(alpha.imag)}",
        f"x={_fmt(abs(alpha) ** 2)}",
        f"up_mass={_fmt(table.up_mass)}",
        f"down_mass={_fmt(table.down_mass)}",
        f"tail_mass={_fmt(table.tail_mass)}",
    )
    _write(_csv_text(("m", "probability", "cumulative"), rows, comments), args.out)
    return EXIT_OK


def cmd_sweep(args):
    cfg = _config(args)
    spec = _require_field(cfg)
    scales = derive_scales(cfg.physics, cfg.k_override)
    sw = cfg.sweep
    if sw.points < 1 or not sw.omega_min <= sw.omega_max:
        raise ConfigError("[sweep] needs points >= 1 and omega_min <= omega_max")
    omegas = list(np.linspace(sw.omega_min, sw.omega_max, sw.points)) if sw.points > 1 else [sw.omega_min]
    if not any(w == scales.omega for w in omegas):
        omegas = sorted(omegas + [scales.omega])
    result = u_spectrum_sweep(spec, scales, cfg.physics, cfg.t_final, omegas, cfg.quadrature)
    rows = [(w, a, int(w == scales.omega)) for w, a in result]
    _emit_table(("omega", "abs_u", "is_cyclotron"), rows, args)
    return EXIT_OK


def cmd_verify(args):
    cfg = _config(args)
    spec = _require_field(cfg)
    scales = derive_scales(cfg.physics, cfg.k_override)
    o = cfg.oracle
    levels = (args.n,) if args.n is not None else o.levels
    cases = []
    for n in levels:
        try:
            report, _, _ = compare_with_analytic(spec, cfg.physics, scales, n, o.dimension, o.step, cfg.quadrature)
            if report.max_abs_prob_error > o.tolerance:
                report = OracleReport(**{**report.__dict__, "error": "tolerance exceeded"})
        except StepSizeError as exc:
            report = _failed(spec, n, o, f"step-size: {exc}", norm_drift=exc.norm_drift)
        except TruncationError as exc:
            report = _failed(spec, n, o, f"truncation: {exc}", tail=exc.achieved_tail)
        cases.append(report)
    passed = all(c.passed for c in cases)
    body = {"passed": passed, "tolerance": o.tolerance, "cases": [c.to_dict() for c in cases]}
    _write(json.dumps(body, indent=2) + "\n", args.out)
    return EXIT_OK if passed else EXIT_NUMERICAL


def _failed(spec, n, o, message, norm_drift=None, tail=None):
    nan = float("nan")
    return OracleReport(
        field_hash=spec.digest(),
        n_initial=n,
        N=o.dimension,
        step=o.step if o.step is not None else nan,
        max_abs_prob_error=nan,
        norm_drift=nan if norm_drift is None else norm_drift,
        tail_mass=nan if tail is None else tail,
        error=message,
    )


COMMANDS = {
    "u": (cmd_u, "drive parameter u, intensity x and geometric phases for the configured field"),
    "figure1": (cmd_figure1, "transition probability versus level n at fixed x"),
    "figure2": (cmd_figure2, "transition probability versus x at fixed level n"),
    "matrix": (cmd_matrix, "full row of transition probabilities P(n -> m)"),
    "sweep": (cmd_sweep, "|u| with the cyclotron frequency swept over a range"),
    "verify": (cmd_verify, "RK4 oracle against the analytic transition probabilities"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="TOML or JSON run configuration")
    common.add_argument("--x", type=float, help="intensity |u k|^2")
    common.add_argument("--n", type=int, help="Landau level index")
    common.add_argument("--n-max", type=int, dest="n_max", help="largest level (figure1)")
    common.add_argument("--x-max", type=float, dest="x_max", help="largest intensity (figure2)")
    common.add_argument("--points", type=int, help="grid points (figure2)")
    common.add_argument("--preset", choices=sorted(FIGURE1_PRESETS), help="figure1 intensity preset")
    common.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--seed", type=int, help="re-seed white-noise field components")
    common.add_argument("--gnuplot", metavar="PATH", help="also write a gnuplot script for --out")

    parser = argparse.ArgumentParser(prog="landau", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (func, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"landau {args.command}: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalError as exc:
        print(f"landau {args.command}: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
