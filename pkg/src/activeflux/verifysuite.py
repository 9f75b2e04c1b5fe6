"""Fast self-checks for `activeflux verify`.

Each check is a pure function returning (worst value, tolerance); the runner
prints one PASS/FAIL line per check. These are smoke-level identities (the
full oracle suite lives in the test tree): constant preservation, round
trips, conservation, and the symbol identities.
"""

from __future__ import annotations

import numpy as np

from . import problems, vonneumann
from .euler import GasModel, cons_to_prim, prim_to_cons
from .grid import DofField, Mesh, cell_centers
from .stepper import advance_step, conservation_residual, run_to_time


def _uniform_field(mesh, w0, gas):
    field = DofField.zeros(mesh)
    for arr in (field.vert, field.evert, field.ehorz):
        arr[:] = w0
    field.avg[:] = prim_to_cons(np.asarray(w0), gas)
    return field


def check_roundtrip():
    rng = np.random.default_rng(7)
    gas = GasModel(1.4)
    w = np.stack(
        [
            rng.uniform(0.5, 2.0, 64),
            rng.uniform(-1.0, 1.0, 64),
            rng.uniform(-1.0, 1.0, 64),
            rng.uniform(0.5, 2.0, 64),
        ],
        axis=-1,
    )
    back = cons_to_prim(prim_to_cons(w, gas), gas)
    return float(np.abs(back - w).max()), 1e-13


def check_constant_preservation():
    gas = GasModel(1.4)
    mesh = Mesh(8, 8, 1.0, 1.0)
    w0 = (1.3, 0.2, -0.4, 2.0)
    worst = 0.0
    for variant in ("rb", "rb-tai"):
        field = _uniform_field(mesh, w0, gas)
        new, _ = advance_step(field, gas, variant, 0.01)
        for arr, ref in (
            (new.avg, prim_to_cons(np.asarray(w0), gas)),
            (new.vert, w0),
            (new.evert, w0),
            (new.ehorz, w0),
        ):
            worst = max(worst, float(np.abs(arr - np.asarray(ref)).max()))
    return worst, 1e-13


def check_center_inversion():
    gas = GasModel(1.4)
    problem = problems.make_problem("vortex")
    field = problems.init_field(problem, 16)
    centers = cell_centers(field, gas)
    return float(0.0 if np.all(np.isfinite(centers)) else np.inf), 0.5


def check_conservation_one_period():
    gas = GasModel(1.4)
    problem = problems.make_problem("packet")
    field = problems.init_field(problem, 16)
    start = field.avg.copy()
    field, _ = run_to_time(field, gas, "rb-tai", 0.05, cfl=0.45)
    return float(conservation_residual(start, field.avg).max()), 1e-12


def check_symbol_agreement():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(20):
        cfg = vonneumann.WaveConfig(
            xi=rng.uniform(-3.0, 3.0),
            eta=rng.uniform(-3.0, 3.0),
            nu=rng.uniform(0.0, 0.5),
            s=int(rng.choice([-1, 1])),
        )
        a = vonneumann.acoustic_pressure_gain_contraction(cfg)
        b = vonneumann.acoustic_pressure_gain_collected(cfg)
        worst = max(worst, abs(a - b))
    return worst, 1e-12


def check_symbol_zero_cfl():
    cfg = vonneumann.WaveConfig(xi=0.7, eta=-0.4, nu=0.0)
    return abs(vonneumann.acoustic_pressure_gain_contraction(cfg) - 1.0), 1e-14


CHECKS = (
    ("primitive/conservative round trip", check_roundtrip),
    ("constant-state preservation", check_constant_preservation),
    ("center inversion finite on vortex", check_center_inversion),
    ("conservation over a short run", check_conservation_one_period),
    ("symbol contraction = collected form", check_symbol_agreement),
    ("symbol gain at zero CFL", check_symbol_zero_cfl),
)


def run_all(verbose=True):
    failures = []
    for name, fn in CHECKS:
        try:
            value, tol = fn()
            ok = value <= tol
        except Exception as exc:  # a crashed check is a failure, not an abort
            value, tol, ok = repr(exc), None, False
        if not ok:
            failures.append(name)
        if verbose:
            status = "PASS" if ok else "FAIL"
            detail = f"{value:.3e} <= {tol:.0e}" if tol is not None else str(value)
            print(f"[{status}] {name}: {detail}")
    if verbose:
        print(f"{len(CHECKS) - len(failures)}/{len(CHECKS)} checks passed")
    return failures
