"""Fully discrete time step and run driver.

One step: evolve the point values to t + dt/2 and t + dt from the time-n
reconstruction, form Simpson edge fluxes at the three time levels, combine
them with Simpson in time, and update the conservative cell averages in
flux form. The t^{n+1} points are the full-step point values as computed --
they are not recomputed after the average update.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .euler import euler_flux_x, euler_flux_y, sound_speed
from .grid import SIMPSON_1D, DofField, cell_nodes
from .pointupdate import step_points

DENSITY_FLOOR, DENSITY_CEIL = 1e-10, 1e10
PRESSURE_FLOOR, PRESSURE_CEIL = 1e-10, 1e10


class ConservationError(RuntimeError):
    """Average update failed the telescoping-sum conservation check."""


class BlowupError(RuntimeError):
    """Solution left the physically plausible range (divergence)."""

    def __init__(self, message, step=None, time=None):
        super().__init__(message)
        self.step = step
        self.time = time


@dataclass
class StepReport:
    time: float
    dt: float
    cfl: float
    max_nu: float
    conservation_residual: np.ndarray  # (4,) relative per component


def max_signal_speed(field, gas):
    """max over stored points of (max(|u|, |v|) + c)."""
    worst = 0.0
    for arr in (field.vert, field.evert, field.ehorz):
        c = sound_speed(arr, gas)
        s = np.maximum(np.abs(arr[..., 1]), np.abs(arr[..., 2])) + c
        worst = max(worst, float(s.max()))
    return worst


def max_sound_speed(field, gas):
    return max(
        float(sound_speed(arr, gas).max())
        for arr in (field.vert, field.evert, field.ehorz)
    )


def select_dt(field, gas, cfl):
    """Time step realizing the target CFL = dt/h * max(max(|u|,|v|) + c)."""
    return cfl * field.mesh.h / max_signal_speed(field, gas)


def edge_fluxes(points, gas):
    """Simpson edge fluxes from one set of point values.

    Returns (Fhat, Ghat): Fhat[i, j] the x-flux through the vertical edge at
    x_i spanning [y_j, y_{j+1}], Ghat[i, j] the y-flux through the horizontal
    edge at y_j spanning [x_i, x_{i+1}].
    """
    w0, w1, w2 = SIMPSON_1D
    fv = euler_flux_x(points["vert"], gas)
    fhat = w0 * fv + w2 * np.roll(fv, -1, axis=1) + w1 * euler_flux_x(points["evert"], gas)
    gv = euler_flux_y(points["vert"], gas)
    ghat = w0 * gv + w2 * np.roll(gv, -1, axis=0) + w1 * euler_flux_y(points["ehorz"], gas)
    return fhat, ghat


def time_averaged_flux(flux_n, flux_half, flux_full):
    """Simpson combination of the three time levels."""
    w0, w1, w2 = SIMPSON_1D
    return w0 * flux_n + w1 * flux_half + w2 * flux_full


def update_averages(avg, fhat, ghat, dt, h):
    """Flux-form average update; exactly conservative on the periodic mesh."""
    lam = dt / h
    return (
        avg
        - lam * (np.roll(fhat, -1, axis=0) - fhat)
        - lam * (np.roll(ghat, -1, axis=1) - ghat)
    )


def conservation_residual(avg_old, avg_new):
    """Relative drift of the four global invariants."""
    drift = np.abs(avg_new.sum(axis=(0, 1)) - avg_old.sum(axis=(0, 1)))
    scale = np.maximum(np.abs(avg_old).sum(axis=(0, 1)), 1e-300)
    return drift / scale


def advance_step(
    field,
    gas,
    variant,
    dt,
    override_cfl_guard=False,
    conservation_tol=1e-10,
):
    """One fully discrete step of size dt. Returns (new field, StepReport)."""
    mesh = field.mesh
    cellnodes = cell_nodes(field, gas)
    points_half = step_points(
        field, gas, 0.5 * dt, variant, override_cfl_guard, cellnodes
    )
    points_full = step_points(field, gas, dt, variant, override_cfl_guard, cellnodes)

    f_n, g_n = edge_fluxes(field.point_arrays(), gas)
    f_h, g_h = edge_fluxes(points_half, gas)
    f_f, g_f = edge_fluxes(points_full, gas)
    fhat = time_averaged_flux(f_n, f_h, f_f)
    ghat = time_averaged_flux(g_n, g_h, g_f)
    avg_new = update_averages(field.avg, fhat, ghat, dt, mesh.h)

    residual = conservation_residual(field.avg, avg_new)
    if conservation_tol is not None and np.any(residual > conservation_tol):
        raise ConservationError(
            f"conservation residual {residual} exceeds {conservation_tol} "
            f"at t = {field.time:.6g}"
        )

    new_field = DofField(
        mesh,
        avg_new,
        points_full["vert"],
        points_full["evert"],
        points_full["ehorz"],
        time=field.time + dt,
    )
    report = StepReport(
        time=new_field.time,
        dt=dt,
        cfl=dt / mesh.h * max_signal_speed(field, gas),
        max_nu=dt / mesh.h * max_sound_speed(field, gas),
        conservation_residual=residual,
    )
    return new_field, report


def check_finite(field, step=None):
    """Raise BlowupError on NaN/Inf or out-of-range density/pressure."""
    for name, arr in (("avg", field.avg),) + tuple(field.point_arrays().items()):
        if not np.all(np.isfinite(arr)):
            raise BlowupError(
                f"non-finite values in {name} at t = {field.time:.6g}",
                step=step,
                time=field.time,
            )
    for name, arr in field.point_arrays().items():
        rho, p = arr[..., 0], arr[..., 3]
        if (
            rho.min() < DENSITY_FLOOR
            or rho.max() > DENSITY_CEIL
            or p.min() < PRESSURE_FLOOR
            or p.max() > PRESSURE_CEIL
        ):
            raise BlowupError(
                f"{name} density/pressure left [{DENSITY_FLOOR}, {DENSITY_CEIL}] "
                f"at t = {field.time:.6g}",
                step=step,
                time=field.time,
            )


def run_to_time(
    field,
    gas,
    variant,
    t_final,
    cfl=None,
    dt=None,
    override_cfl_guard=False,
    conservation_tol=1e-10,
    max_steps=10_000_000,
    on_step=None,
):
    """March a field to t_final with either dynamic (cfl) or fixed dt.

    variant: "rb", "rb-tai" (fully discrete) or "semi" (SSPRK3 on the
    semi-discrete form). Returns (field, nsteps). Raises BlowupError if the
    solution diverges.
    """
    if (cfl is None) == (dt is None):
        raise ValueError("specify exactly one of cfl or dt")
    if variant == "semi":
        from .semidiscrete import ssprk3_step as _step

        def take(fld, step_dt):
            new = _step(fld, gas, step_dt)
            h = fld.mesh.h
            report = StepReport(
                time=new.time,
                dt=step_dt,
                cfl=step_dt / h * max_signal_speed(fld, gas),
                max_nu=step_dt / h * max_sound_speed(fld, gas),
                conservation_residual=conservation_residual(fld.avg, new.avg),
            )
            return new, report
    else:

        def take(fld, step_dt):
            return advance_step(
                fld,
                gas,
                variant,
                step_dt,
                override_cfl_guard=override_cfl_guard,
                conservation_tol=conservation_tol,
            )

    nsteps = 0
    tiny = 1e-12 * max(t_final, 1.0)
    while field.time < t_final - tiny:
        if nsteps >= max_steps:
            raise RuntimeError(f"exceeded {max_steps} steps before t = {t_final}")
        step_dt = dt if dt is not None else select_dt(field, gas, cfl)
        step_dt = min(step_dt, t_final - field.time)
        field, report = take(field, step_dt)
        nsteps += 1
        check_finite(field, step=nsteps)
        if on_step is not None:
            on_step(field, report, nsteps)
    return field, nsteps
