"""Benchmark problems (analytic initial data on periodic domains) and the
integral diagnostics used by the verification harness.

Cell averages are initialized with a 5x5 Gauss-Legendre rule per cell applied
to the conservative variables, so the stored averages are exact to well below
the scheme's truncation error. Point values sample the analytic primitives
directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .euler import GasModel, LinearEigenmode, packet_field, prim_to_cons, sound_speed
from .grid import SIMPSON_2D, DofField, Mesh, cell_nodes, lagrange_deriv

GL_NODES, GL_WEIGHTS = np.polynomial.legendre.leggauss(5)


@dataclass(frozen=True)
class Problem:
    name: str
    x0: float
    y0: float
    lx: float
    ly: float
    t_final: float
    gas: GasModel
    init: Callable  # (x, y) -> primitive (..., 4)
    exact: Optional[Callable] = None  # (x, y, t) -> primitive (..., 4)

    def mesh(self, nx, ny=None):
        if ny is None:
            ny = round(nx * self.ly / self.lx)
        return Mesh(nx, ny, self.lx, self.ly, self.x0, self.y0)


# ---------------------------------------------------------------------------
# problem definitions

PACKET_BASE = np.array(
    [1.0, 0.4 * np.cos(np.radians(25.0)), 0.4 * np.sin(np.radians(25.0)), 1.0]
)
PACKET_EPS = 1e-6


def packet_modes(eps=PACKET_EPS):
    tp = 2.0 * np.pi
    return (
        LinearEigenmode("entropy", tp * 1.0, tp * 2.0, eps),
        LinearEigenmode("shear", tp * 2.0, tp * 1.0, eps),
        LinearEigenmode("acoustic+", tp * 3.0, tp * 2.0, eps),
        LinearEigenmode("acoustic-", tp * 2.0, tp * 3.0, eps),
    )


def make_packet(gas=GasModel(1.4), eps=PACKET_EPS):
    """Mixed linear wave packet on [0,1]^2: one mode of each family."""
    modes = packet_modes(eps)

    def exact(x, y, t=0.0):
        return packet_field(modes, PACKET_BASE, gas, x, y, t)

    return Problem(
        "packet", 0.0, 0.0, 1.0, 1.0, 1.0, gas, lambda x, y: exact(x, y, 0.0), exact
    )


def make_vortex(gas=GasModel(1.4), beta=5.0):
    """Isentropic vortex advected by (1, 0) across [0,10] x [-5,5]; returns
    to its initial position at t = 10."""
    xc, yc = 5.0, 0.0
    u_inf, v_inf = 1.0, 0.0
    gamma = gas.gamma

    def init(x, y):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        r2 = (x - xc) ** 2 + (y - yc) ** 2
        envelope = beta / (2.0 * np.pi) * np.exp(0.5 * (1.0 - r2))
        temperature = 1.0 - (gamma - 1.0) * beta**2 / (8.0 * gamma * np.pi**2) * np.exp(
            1.0 - r2
        )
        w = np.empty(np.broadcast_shapes(x.shape, y.shape) + (4,))
        w[..., 0] = temperature ** (1.0 / (gamma - 1.0))
        w[..., 1] = u_inf - envelope * (y - yc)
        w[..., 2] = v_inf + envelope * (x - xc)
        w[..., 3] = w[..., 0] ** gamma
        return w

    def exact(x, y, t=0.0):
        x = np.asarray(x, dtype=np.float64)
        return init(np.mod(x - u_inf * t, 10.0), y)

    return Problem("vortex", 0.0, -5.0, 10.0, 10.0, 10.0, gas, init, exact)


def make_pulse(gas=GasModel(1.4)):
    """Radially symmetric density/pressure hump at rest on [-2.5, 2.5]^2."""
    gamma = gas.gamma

    def init(x, y):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        r2 = x**2 + y**2
        w = np.empty(np.broadcast_shapes(x.shape, y.shape) + (4,))
        w[..., 0] = 1.0 + 0.25 * np.exp(-20.0 * r2)
        w[..., 1] = 0.0
        w[..., 2] = 0.0
        w[..., 3] = w[..., 0] ** gamma / gamma
        return w

    return Problem("pulse", -2.5, -2.5, 5.0, 5.0, 2.5, gas, init)


SHEAR_R = 1e-3
SHEAR_MACH = 1e-2
SHEAR_DELTA = 0.1


def shear_profile(y):
    """Smoothed indicator of the band |y| < 1/4 (C^1, piecewise trig)."""
    y = np.asarray(y, dtype=np.float64)
    a = np.zeros_like(y)
    lo, hi = 7.0 / 32.0, 9.0 / 32.0
    rising = (y >= -hi) & (y < -lo)
    a = np.where(rising, 0.5 * (1.0 + np.sin(16.0 * np.pi * (y + 0.25))), a)
    a = np.where((y >= -lo) & (y < lo), 1.0, a)
    falling = (y >= lo) & (y < hi)
    a = np.where(falling, 0.5 * (1.0 - np.sin(16.0 * np.pi * (y - 0.25))), a)
    return a


def make_shear(gas=GasModel(1.4), mach=SHEAR_MACH, contrast=SHEAR_R, delta=SHEAR_DELTA):
    """Low-Mach double shear band on [0,2] x [-1/2, 1/2]."""
    gamma = gas.gamma

    def init(x, y):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        a = shear_profile(y)
        w = np.empty(np.broadcast_shapes(x.shape, y.shape) + (4,))
        w[..., 0] = gamma + contrast * (1.0 - 2.0 * a)
        w[..., 1] = mach * (1.0 - 2.0 * a)
        w[..., 2] = delta * mach * np.sin(2.0 * np.pi * x)
        w[..., 3] = 1.0
        return w

    return Problem("shear", 0.0, -0.5, 2.0, 1.0, 80.0, gas, init)


def make_kh(gas=GasModel(1.4)):
    """Kelvin-Helmholtz double shear layer on [-1, 1]^2."""

    def init(x, y):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        band = np.tanh(15.0 * y + 7.5) - np.tanh(15.0 * y - 7.5)
        w = np.empty(np.broadcast_shapes(x.shape, y.shape) + (4,))
        w[..., 0] = 0.5 + 0.75 * band
        w[..., 1] = 0.5 * (band - 1.0)
        w[..., 2] = 0.1 * np.sin(2.0 * np.pi * x)
        w[..., 3] = 1.0
        return w

    return Problem("kh", -1.0, -1.0, 2.0, 2.0, 15.0, gas, init)


_FACTORIES = {
    "packet": make_packet,
    "vortex": make_vortex,
    "pulse": make_pulse,
    "shear": make_shear,
    "kh": make_kh,
}

PROBLEM_NAMES = tuple(_FACTORIES)


def make_problem(name, **kwargs):
    try:
        factory = _FACTORIES[name]
    except KeyError:
        raise ValueError(f"unknown problem {name!r}; choose from {PROBLEM_NAMES}") from None
    return factory(**kwargs)


# ---------------------------------------------------------------------------
# field initialization

def gauss_cell_averages(func, mesh, gas):
    """Conservative cell averages of a primitive field by 5x5 Gauss-Legendre."""
    h = mesh.h
    gx = 0.5 * h * (GL_NODES + 1.0)
    x_cells = mesh.x0 + h * np.arange(mesh.nx)
    y_cells = mesh.y0 + h * np.arange(mesh.ny)
    xq = x_cells[:, None] + gx[None, :]  # (nx, 5)
    yq = y_cells[:, None] + gx[None, :]  # (ny, 5)
    w = func(xq[:, None, :, None], yq[None, :, None, :])  # (nx, ny, 5, 5, 4)
    cons = prim_to_cons(w, gas)
    wq = np.outer(GL_WEIGHTS, GL_WEIGHTS) / 4.0  # unit measure on the cell
    return np.einsum("ab,ijabc->ijc", wq, cons)


def init_field(problem, nx, ny=None, t=0.0):
    """Sample a problem onto a fresh DofField (points + quadrature averages)."""
    mesh = problem.mesh(nx, ny)
    if t != 0.0 and problem.exact is None:
        raise ValueError(f"problem {problem.name} has no exact solution for t != 0")
    func = problem.init if t == 0.0 else (lambda x, y: problem.exact(x, y, t))
    field = DofField(
        mesh,
        gauss_cell_averages(func, mesh, problem.gas),
        func(*mesh.vertex_xy()),
        func(*mesh.evert_xy()),
        func(*mesh.ehorz_xy()),
        time=t,
    )
    return field


def init_mixed_packet(mesh, gas=None):
    """Wave-packet DofField on a mesh (convenience wrapper for harnesses)."""
    prob = make_packet() if gas is None else make_packet(gas)
    return init_field(prob, mesh.nx, mesh.ny)


def mixed_packet_error(field, t=None, gas=None):
    """One-number packet error: max over stored points and 4 primitive vars."""
    prob = make_packet() if gas is None else make_packet(gas)
    return point_max_error(field, prob.exact, t)


# ---------------------------------------------------------------------------
# diagnostics

def _node_derivatives(nodes, h):
    """(v_x, u_y) at the 3x3 nodes of every cell, from the cell's own Q2."""
    dmat = lagrange_deriv(np.array([-1.0, 0.0, 1.0]))  # (node, basis)
    two_h = 2.0 / h
    vx = two_h * np.einsum("ka,ijabc->ijkbc", dmat, nodes)  # x-deriv at node row k
    uy = two_h * np.einsum("kb,ijabc->ijakc", dmat, nodes)  # y-deriv at node col k
    return vx[..., 2], uy[..., 1]


def vorticity_nodes(field, gas, nodes=None):
    """omega = v_x - u_y at the per-cell 3x3 nodes."""
    if nodes is None:
        nodes = cell_nodes(field, gas)
    vx, uy = _node_derivatives(nodes, field.mesh.h)
    return vx - uy


def vorticity_integral(field, gas, nodes=None):
    """Integral of vorticity over the domain (per-cell Simpson)."""
    om = vorticity_nodes(field, gas, nodes)
    return float(np.einsum("ab,ijab->", SIMPSON_2D, om) * field.mesh.h**2)


def enstrophy(field, gas, nodes=None):
    """Integral of omega^2 / 2 (per-cell Simpson of the Q2 vorticity)."""
    om = vorticity_nodes(field, gas, nodes)
    return float(np.einsum("ab,ijab->", SIMPSON_2D, 0.5 * om**2) * field.mesh.h**2)


def total_entropy(field, gas, nodes=None):
    """-integral of rho log(p / rho^gamma) (per-cell Simpson on Q2 nodes)."""
    if nodes is None:
        nodes = cell_nodes(field, gas)
    rho, p = nodes[..., 0], nodes[..., 3]
    s = -rho * np.log(p / rho**gas.gamma)
    return float(np.einsum("ab,ijab->", SIMPSON_2D, s) * field.mesh.h**2)


def l1_average_error(field, reference_avg, component=0):
    """Domain-integrated L1 error of one conservative average component."""
    diff = np.abs(field.avg[..., component] - reference_avg[..., component])
    return float(diff.sum() * field.mesh.h**2)


def point_max_error(field, exact, t=None):
    """Max-norm over all stored point DOFs and primitive components."""
    t = field.time if t is None else t
    mesh = field.mesh
    worst = 0.0
    for arr, xy in (
        (field.vert, mesh.vertex_xy()),
        (field.evert, mesh.evert_xy()),
        (field.ehorz, mesh.ehorz_xy()),
    ):
        ref = exact(xy[0], xy[1], t)
        worst = max(worst, float(np.abs(arr - ref).max()))
    return worst


def pulse_asymmetry(field, gas, ambient_pressure=None):
    """Departure of the pressure field from radial symmetry.

    All stored point values are grouped by radius (radii agreeing to within
    1e-9*h are pooled; on the half-integer point lattice distinct radii are
    separated by far more than that). The metric is the largest within-group
    pressure spread, normalized by the largest deviation of the group-mean
    profile from the ambient pressure. Zero for exactly radial data.
    """
    mesh = field.mesh
    if ambient_pressure is None:
        ambient_pressure = 1.0 / gas.gamma
    rs, ps = [], []
    for arr, xy in (
        (field.vert, mesh.vertex_xy()),
        (field.evert, mesh.evert_xy()),
        (field.ehorz, mesh.ehorz_xy()),
    ):
        rs.append(np.hypot(xy[0], xy[1]).ravel())
        ps.append(arr[..., 3].ravel())
    r = np.concatenate(rs)
    p = np.concatenate(ps)
    order = np.argsort(r, kind="stable")
    r, p = r[order], p[order]
    edges = np.flatnonzero(np.diff(r) > 1e-9 * mesh.h) + 1
    spread = 0.0
    profile = 0.0
    for chunk in np.split(p, edges):
        spread = max(spread, float(chunk.max() - chunk.min()))
        profile = max(profile, abs(float(chunk.mean()) - ambient_pressure))
    return spread / profile if profile > 0 else 0.0
