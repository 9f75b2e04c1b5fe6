"""Command-line driver.

Subcommands: run (single run with artifacts), converge (mesh refinement
study), cfl-sweep (stability/error scan), symbols (von Neumann gain sweep),
verify (fast self-checks). Thread count for the compiled kernels follows
NUMBA_NUM_THREADS; set ACTIVEFLUX_NUMBA=0 to force the pure-numpy backend.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import fieldio, problems, vonneumann
from .config import ConfigError, RunConfig, SCHEMES, apply_cli_overrides, load_config
from .grid import cell_nodes
from .stencils import CflViolationError
from .stepper import BlowupError, ConservationError, run_to_time

FLOAT_FMT = ".17g"


def _fmt(x):
    return format(float(x), FLOAT_FMT)


def _parse_mesh(text):
    parts = text.lower().split("x")
    try:
        dims = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad mesh spec {text!r} (use N or NXxNY)")
    if len(dims) not in (1, 2) or any(d < 3 for d in dims):
        raise argparse.ArgumentTypeError(f"bad mesh spec {text!r}")
    return dims


def _parse_int_list(text):
    return [int(p) for p in text.split(",") if p]


def _parse_float_list(text):
    return [float(p) for p in text.split(",") if p]


def _load_base_config(args):
    cfg = load_config(args.config) if getattr(args, "config", None) else RunConfig()
    return apply_cli_overrides(cfg, args)


def _build_problem(cfg):
    try:
        return problems.make_problem(cfg.problem, **cfg.problem_overrides)
    except TypeError as exc:
        raise ConfigError(f"bad problem override for {cfg.problem!r}: {exc}") from exc


def _common_flags(sub, mesh_help="mesh size N or NXxNY"):
    sub.add_argument("--config", help="INI config file (see docs/config.md)")
    sub.add_argument("--problem", choices=problems.PROBLEM_NAMES)
    sub.add_argument("--scheme", choices=SCHEMES)
    sub.add_argument("--mesh", type=_parse_mesh, help=mesh_help)
    sub.add_argument("--cfl", type=float)
    sub.add_argument("--dt", type=float)
    sub.add_argument("--tfinal", type=float)
    sub.add_argument("--out", help="output directory")
    sub.add_argument("--seed", type=int)
    sub.add_argument(
        "--override-cfl-guard",
        action="store_true",
        default=False,
        help="allow acoustic CFL above 0.5 (logged, accuracy degrades)",
    )


class _RunDiagnostics:
    """Collects per-step reports and periodic integral diagnostics."""

    def __init__(self, problem, every):
        self.problem = problem
        self.every = every
        self.reports = []
        self.rows = []

    def __call__(self, field, report, step):
        self.reports.append((step, report))
        self.rows.append(self.sample(field, report, step))

    def sample(self, field, report, step):
        h = field.mesh.h
        gas = self.problem.gas
        totals = field.avg.sum(axis=(0, 1)) * h * h
        resid = float(np.max(report.conservation_residual)) if report else 0.0
        nodes = cell_nodes(field, gas)
        return {
            "step": step,
            "time": field.time,
            "mass": totals[0],
            "mom_x": totals[1],
            "mom_y": totals[2],
            "energy": totals[3],
            "conservation_residual": resid,
            "vorticity_integral": problems.vorticity_integral(field, gas, nodes),
            "enstrophy": problems.enstrophy(field, gas, nodes),
            "entropy": problems.total_entropy(field, gas, nodes),
        }


def _write_diagnostics_csv(path, rows):
    cols = (
        "step", "time", "mass", "mom_x", "mom_y", "energy",
        "conservation_residual", "vorticity_integral", "enstrophy", "entropy",
    )
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(cols)
        for row in rows:
            writer.writerow([row["step"]] + [_fmt(row[c]) for c in cols[1:]])


def _write_steps_log(path, reports):
    with open(path, "w", encoding="utf-8") as fh:
        for step, rep in reports:
            fh.write(
                f"step={step} t={_fmt(rep.time)} dt={_fmt(rep.dt)} "
                f"cfl={_fmt(rep.cfl)} nu={_fmt(rep.max_nu)} "
                f"resid={_fmt(np.max(rep.conservation_residual))}\n"
            )


def _exact_averages(field, problem):
    return problems.gauss_cell_averages(
        lambda x, y: problem.exact(x, y, field.time), field.mesh, problem.gas
    )


def _error_metrics(field, problem):
    if problem.exact is None:
        return {}
    return {
        "l1_density_error": problems.l1_average_error(field, _exact_averages(field, problem)),
        "point_max_error": problems.point_max_error(field, problem.exact),
    }


def cmd_run(args):
    cfg = _load_base_config(args).validate()
    problem = _build_problem(cfg)
    t_final = cfg.t_final if cfg.t_final is not None else problem.t_final
    field = problems.init_field(problem, cfg.nx, cfg.ny)
    os.makedirs(cfg.out_dir, exist_ok=True)
    diag = _RunDiagnostics(problem, cfg.output_every)
    artifacts = []
    status = "complete"
    failure = None

    dumps = []
    state = {"field": field}

    def on_step(new_field, report, step):
        state["field"] = new_field
        diag(new_field, report, step)
        if cfg.output_every and step % cfg.output_every == 0:
            name = f"field_{step:07d}.dump"
            fieldio.write_dump(os.path.join(cfg.out_dir, name), new_field, cfg.scheme, cfg.problem)
            dumps.append(name)

    diag.rows.append(diag.sample(field, None, 0))
    try:
        field, nsteps = run_to_time(
            field,
            problem.gas,
            cfg.scheme,
            t_final,
            cfl=cfg.cfl,
            dt=cfg.dt,
            override_cfl_guard=cfg.override_cfl_guard,
            conservation_tol=cfg.conservation_tol,
            on_step=on_step,
        )
    except (BlowupError, ConservationError) as exc:
        status = "diverged"
        failure = str(exc)
        field = state["field"]
        nsteps = len(diag.reports)
        print(f"run diverged: {exc}", file=sys.stderr)
    else:
        last_report = diag.reports[-1][1] if diag.reports else None
        diag.rows.append(diag.sample(field, last_report, nsteps))
        name = "field_final.dump"
        fieldio.write_dump(os.path.join(cfg.out_dir, name), field, cfg.scheme, cfg.problem)
        dumps.append(name)

    _write_diagnostics_csv(os.path.join(cfg.out_dir, "diagnostics.csv"), diag.rows)
    _write_steps_log(os.path.join(cfg.out_dir, "steps.log"), diag.reports)
    artifacts += dumps + ["diagnostics.csv", "steps.log"]

    summary = {
        "status": status,
        "problem": cfg.problem,
        "scheme": cfg.scheme,
        "nx": cfg.nx,
        "ny": cfg.ny if cfg.ny is not None else field.mesh.ny,
        "cfl": cfg.cfl,
        "dt": cfg.dt,
        "t_final": t_final,
        "time_reached": field.time,
        "steps": nsteps,
    }
    if failure:
        summary["failure"] = failure
    if diag.rows:
        resid = max(r["conservation_residual"] for r in diag.rows)
        vort0 = diag.rows[0]["vorticity_integral"]
        summary["max_conservation_residual"] = resid
        summary["vorticity_drift"] = max(
            abs(r["vorticity_integral"] - vort0) for r in diag.rows
        )
        summary["enstrophy_initial"] = diag.rows[0]["enstrophy"]
        summary["entropy_initial"] = diag.rows[0]["entropy"]
        summary["entropy_final"] = diag.rows[-1]["entropy"]
    if status == "complete":
        summary.update(_error_metrics(field, problem))
    with open(os.path.join(cfg.out_dir, "summary.json"), "w", encoding="utf-8") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    artifacts.append("summary.json")
    fieldio.write_manifest(cfg.out_dir, artifacts, extra={"status": status})

    for key in ("l1_density_error", "point_max_error"):
        if key in summary:
            print(f"{key} = {summary[key]:.6e}")
    print(f"{status}: {cfg.problem}/{cfg.scheme} {cfg.nx}x{summary['ny']} "
          f"steps={nsteps} t={field.time:g} -> {cfg.out_dir}")
    return 0 if status == "complete" else 1


def _packet_one_step_error(problem, n, scheme, override):
    """Max-norm point error of a single step with dt = 0.45 h / c0."""
    from .euler import sound_speed
    field = problems.init_field(problem, n)
    c0 = float(sound_speed(np.asarray(problems.PACKET_BASE), problem.gas))
    dt = 0.45 * field.mesh.h / c0
    field, _ = run_to_time(
        field, problem.gas, scheme, dt, dt=dt, override_cfl_guard=override
    )
    return problems.point_max_error(field, problem.exact)


def cmd_converge(args):
    cfg = _load_base_config(args).validate()
    problem = _build_problem(cfg)
    meshes = args.meshes or [16, 32, 64]
    os.makedirs(cfg.out_dir, exist_ok=True)
    errors = []
    for n in meshes:
        if cfg.problem == "packet":
            err = _packet_one_step_error(problem, n, cfg.scheme, cfg.override_cfl_guard)
        else:
            if problem.exact is None:
                raise ConfigError(
                    f"{cfg.problem!r} has no exact solution; converge supports "
                    "packet and problems with exact fields"
                )
            t_final = cfg.t_final if cfg.t_final is not None else problem.t_final
            field = problems.init_field(problem, n, cfg.ny)
            field, _ = run_to_time(
                field, problem.gas, cfg.scheme, t_final,
                cfl=cfg.cfl, dt=cfg.dt,
                override_cfl_guard=cfg.override_cfl_guard,
                conservation_tol=cfg.conservation_tol,
            )
            err = problems.l1_average_error(field, _exact_averages(field, problem))
        errors.append(err)
        print(f"N={n:5d}  error={err:.6e}")

    path = os.path.join(cfg.out_dir, "convergence.csv")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("n", "h", "error", "rate"))
        for k, (n, err) in enumerate(zip(meshes, errors)):
            rate = ""
            if k > 0 and errors[k - 1] > 0 and err > 0:
                ratio = meshes[k] / meshes[k - 1]
                rate = _fmt(np.log(errors[k - 1] / err) / np.log(ratio))
            writer.writerow((n, _fmt(problem.lx / n), _fmt(err), rate))
    fieldio.write_manifest(cfg.out_dir, ["convergence.csv"])
    print(f"wrote {path}")
    return 0


def cmd_cfl_sweep(args):
    cfg = _load_base_config(args).validate()
    problem = _build_problem(cfg)
    cfls = args.cfls or [0.2, 0.3, 0.45, 0.6, 0.75, 0.9, 1.0]
    t_final = cfg.t_final if cfg.t_final is not None else problem.t_final
    os.makedirs(cfg.out_dir, exist_ok=True)
    rows = []
    for cfl in cfls:
        field = problems.init_field(problem, cfg.nx, cfg.ny)
        try:
            field, nsteps = run_to_time(
                field, problem.gas, cfg.scheme, t_final,
                cfl=cfl, override_cfl_guard=cfg.override_cfl_guard,
                conservation_tol=cfg.conservation_tol,
            )
        except (BlowupError, ConservationError) as exc:
            rows.append((cfl, "diverged", "", ""))
            print(f"cfl={cfl:g}  diverged ({exc})")
            continue
        err = ""
        if problem.exact is not None:
            err = _fmt(problems.l1_average_error(field, _exact_averages(field, problem)))
        rows.append((cfl, "complete", err, nsteps))
        print(f"cfl={cfl:g}  complete  steps={nsteps}  error={err or 'n/a'}")

    path = os.path.join(cfg.out_dir, "cfl_sweep.csv")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("cfl", "status", "error", "steps"))
        for cfl, status, err, nsteps in rows:
            writer.writerow((_fmt(cfl), status, err, nsteps))
    fieldio.write_manifest(cfg.out_dir, ["cfl_sweep.csv"])
    print(f"wrote {path}")
    return 0


def cmd_symbols(args):
    out_dir = args.out or "out"
    os.makedirs(out_dir, exist_ok=True)
    kwargs = {}
    if args.kh:
        kwargs["kh_values"] = tuple(args.kh)
    if args.nu:
        kwargs["nu_values"] = tuple(args.nu)
    text = vonneumann.sweep_csv(**kwargs)
    path = os.path.join(out_dir, "symbols.csv")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(text)
    fieldio.write_manifest(out_dir, ["symbols.csv"])
    print(f"wrote {path}")
    return 0


def cmd_verify(args):
    """Fast self-checks of the core operator identities."""
    from . import verifysuite

    failures = verifysuite.run_all(verbose=True)
    return 1 if failures else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="activeflux",
        description="Active Flux solver for the 2D compressible Euler equations.",
        epilog=(
            "Environment: NUMBA_NUM_THREADS limits compiled-kernel threads; "
            "ACTIVEFLUX_NUMBA=0 selects the pure-numpy backend."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="single run with artifacts")
    _common_flags(p_run)
    p_run.set_defaults(func=cmd_run)

    p_conv = sub.add_parser("converge", help="mesh refinement study")
    _common_flags(p_conv)
    p_conv.add_argument("--meshes", type=_parse_int_list, help="comma list, e.g. 8,16,32")
    p_conv.set_defaults(func=cmd_converge)

    p_cfl = sub.add_parser("cfl-sweep", help="stability/error scan over CFL")
    _common_flags(p_cfl)
    p_cfl.add_argument("--cfls", type=_parse_float_list, help="comma list, e.g. 0.3,0.5,1.0")
    p_cfl.set_defaults(func=cmd_cfl_sweep)

    p_sym = sub.add_parser("symbols", help="von Neumann gain sweep CSV")
    p_sym.add_argument("--out", help="output directory")
    p_sym.add_argument("--kh", type=_parse_float_list, help="comma list of K h values")
    p_sym.add_argument("--nu", type=_parse_float_list, help="comma list of acoustic CFL values")
    p_sym.set_defaults(func=cmd_symbols)

    p_ver = sub.add_parser("verify", help="fast operator/symbol self-checks")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except CflViolationError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
