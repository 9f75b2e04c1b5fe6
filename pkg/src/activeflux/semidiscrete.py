"""Semi-discrete reference scheme: upwinded point derivatives + SSPRK3.

Points evolve by the primitive-variable residual dW/dt = -(A_x W_x + A_y W_y)
with the Jacobians frozen at the node. Derivatives normal to an interface are
upwinded through the characteristic split A = A+ + A-: the outgoing part A+
(right/up-moving) differentiates the reconstruction of the cell the waves
come from (left/bottom), A- the other side. Tangential derivatives use the
central difference of the two vertices bounding the edge. At vertices each
one-sided derivative is the average over the two cells on that side.

Averages evolve by the instantaneous Simpson edge fluxes in flux form.
"""

from __future__ import annotations

import numpy as np

from .euler import sound_speed
from .grid import DofField, cell_nodes
from .stepper import edge_fluxes

# d/ds of the quadratic Lagrange basis at the endpoints s = -1, +1
DL_M = np.array([-1.5, 2.0, -0.5])
DL_P = np.array([0.5, -2.0, 1.5])


def jac_x(w, gas):
    """Primitive x-Jacobian, frozen at w; shape (..., 4, 4)."""
    rho, u, p = w[..., 0], w[..., 1], w[..., 3]
    c2 = gas.gamma * p / rho
    A = np.zeros(w.shape[:-1] + (4, 4), dtype=w.dtype)
    A[..., 0, 0] = u
    A[..., 0, 1] = rho
    A[..., 1, 1] = u
    A[..., 1, 3] = 1.0 / rho
    A[..., 2, 2] = u
    A[..., 3, 1] = rho * c2
    A[..., 3, 3] = u
    return A


def jac_y(w, gas):
    """Primitive y-Jacobian, frozen at w; shape (..., 4, 4)."""
    rho, v, p = w[..., 0], w[..., 2], w[..., 3]
    c2 = gas.gamma * p / rho
    A = np.zeros(w.shape[:-1] + (4, 4), dtype=w.dtype)
    A[..., 0, 0] = v
    A[..., 0, 2] = rho
    A[..., 1, 1] = v
    A[..., 2, 2] = v
    A[..., 2, 3] = 1.0 / rho
    A[..., 3, 2] = rho * c2
    A[..., 3, 3] = v
    return A


def _wave_speeds(vel, c):
    return np.abs(vel - c), np.abs(vel + c), np.abs(vel)


def abs_jac_x(w, gas):
    """|A_x| = R |Lambda| R^-1 in closed form (eigenvalues u, u, u +- c)."""
    rho, u = w[..., 0], w[..., 1]
    c = sound_speed(w, gas)
    a, b, m = _wave_speeds(u, c)
    A = np.zeros(w.shape[:-1] + (4, 4), dtype=w.dtype)
    A[..., 0, 0] = m
    A[..., 0, 1] = rho * (b - a) / (2.0 * c)
    A[..., 0, 3] = (a + b) / (2.0 * c**2) - m / c**2
    A[..., 1, 1] = 0.5 * (a + b)
    A[..., 1, 3] = (b - a) / (2.0 * rho * c)
    A[..., 2, 2] = m
    A[..., 3, 1] = 0.5 * rho * c * (b - a)
    A[..., 3, 3] = 0.5 * (a + b)
    return A


def abs_jac_y(w, gas):
    """|A_y| = R |Lambda| R^-1 in closed form (eigenvalues v, v, v +- c)."""
    rho, v = w[..., 0], w[..., 2]
    c = sound_speed(w, gas)
    a, b, m = _wave_speeds(v, c)
    A = np.zeros(w.shape[:-1] + (4, 4), dtype=w.dtype)
    A[..., 0, 0] = m
    A[..., 0, 2] = rho * (b - a) / (2.0 * c)
    A[..., 0, 3] = (a + b) / (2.0 * c**2) - m / c**2
    A[..., 1, 1] = m
    A[..., 2, 2] = 0.5 * (a + b)
    A[..., 2, 3] = (b - a) / (2.0 * rho * c)
    A[..., 3, 2] = 0.5 * rho * c * (b - a)
    A[..., 3, 3] = 0.5 * (a + b)
    return A


def _apply(mat, vec):
    return np.einsum("...ij,...j->...i", mat, vec)


def _roll(arr, di, dj):
    out = arr
    if di:
        out = np.roll(out, di, axis=0)
    if dj:
        out = np.roll(out, dj, axis=1)
    return out


def point_rhs(field, gas, cellnodes=None):
    """dW/dt at the three point families; returns {vert, evert, ehorz}."""
    if cellnodes is None:
        cellnodes = cell_nodes(field, gas)
    mesh = field.mesh
    h = mesh.h
    two_h = 2.0 / h
    cn = cellnodes
    out = {}

    # vertical-edge midpoints: node (0, 1) of the right cell (i, j),
    # node (2, 1) of the left cell (i-1, j)
    w = field.evert
    cn_l = _roll(cn, 1, 0)
    wx_r = two_h * (DL_M[0] * cn[:, :, 0, 1] + DL_M[1] * cn[:, :, 1, 1] + DL_M[2] * cn[:, :, 2, 1])
    wx_l = two_h * (DL_P[0] * cn_l[:, :, 0, 1] + DL_P[1] * cn_l[:, :, 1, 1] + DL_P[2] * cn_l[:, :, 2, 1])
    wy = (_roll(field.vert, 0, -1) - field.vert) / h
    ax = jac_x(w, gas)
    sx = abs_jac_x(w, gas)
    rhs = _apply(0.5 * (ax + sx), wx_l) + _apply(0.5 * (ax - sx), wx_r)
    rhs += _apply(jac_y(w, gas), wy)
    out["evert"] = -rhs

    # horizontal-edge midpoints: node (1, 0) of the top cell (i, j),
    # node (1, 2) of the bottom cell (i, j-1)
    w = field.ehorz
    cn_b = _roll(cn, 0, 1)
    wy_t = two_h * (DL_M[0] * cn[:, :, 1, 0] + DL_M[1] * cn[:, :, 1, 1] + DL_M[2] * cn[:, :, 1, 2])
    wy_b = two_h * (DL_P[0] * cn_b[:, :, 1, 0] + DL_P[1] * cn_b[:, :, 1, 1] + DL_P[2] * cn_b[:, :, 1, 2])
    wx = (_roll(field.vert, -1, 0) - field.vert) / h
    ay = jac_y(w, gas)
    sy = abs_jac_y(w, gas)
    rhs = _apply(0.5 * (ay + sy), wy_b) + _apply(0.5 * (ay - sy), wy_t)
    rhs += _apply(jac_x(w, gas), wx)
    out["ehorz"] = -rhs

    # vertices: one-sided derivatives averaged over the two cells per side
    w = field.vert
    cn_ne = cn
    cn_nw = _roll(cn, 1, 0)
    cn_sw = _roll(cn, 1, 1)
    cn_se = _roll(cn, 0, 1)
    wx_right = 0.5 * two_h * (
        (DL_M[0] * cn_ne[:, :, 0, 0] + DL_M[1] * cn_ne[:, :, 1, 0] + DL_M[2] * cn_ne[:, :, 2, 0])
        + (DL_M[0] * cn_se[:, :, 0, 2] + DL_M[1] * cn_se[:, :, 1, 2] + DL_M[2] * cn_se[:, :, 2, 2])
    )
    wx_left = 0.5 * two_h * (
        (DL_P[0] * cn_nw[:, :, 0, 0] + DL_P[1] * cn_nw[:, :, 1, 0] + DL_P[2] * cn_nw[:, :, 2, 0])
        + (DL_P[0] * cn_sw[:, :, 0, 2] + DL_P[1] * cn_sw[:, :, 1, 2] + DL_P[2] * cn_sw[:, :, 2, 2])
    )
    wy_top = 0.5 * two_h * (
        (DL_M[0] * cn_ne[:, :, 0, 0] + DL_M[1] * cn_ne[:, :, 0, 1] + DL_M[2] * cn_ne[:, :, 0, 2])
        + (DL_M[0] * cn_nw[:, :, 2, 0] + DL_M[1] * cn_nw[:, :, 2, 1] + DL_M[2] * cn_nw[:, :, 2, 2])
    )
    wy_bottom = 0.5 * two_h * (
        (DL_P[0] * cn_se[:, :, 0, 0] + DL_P[1] * cn_se[:, :, 0, 1] + DL_P[2] * cn_se[:, :, 0, 2])
        + (DL_P[0] * cn_sw[:, :, 2, 0] + DL_P[1] * cn_sw[:, :, 2, 1] + DL_P[2] * cn_sw[:, :, 2, 2])
    )
    ax = jac_x(w, gas)
    sx = abs_jac_x(w, gas)
    ay = jac_y(w, gas)
    sy = abs_jac_y(w, gas)
    rhs = _apply(0.5 * (ax + sx), wx_left) + _apply(0.5 * (ax - sx), wx_right)
    rhs += _apply(0.5 * (ay + sy), wy_bottom) + _apply(0.5 * (ay - sy), wy_top)
    out["vert"] = -rhs
    return out


def average_rhs(points, gas, h):
    """d<U>/dt from the instantaneous Simpson edge fluxes."""
    fhat, ghat = edge_fluxes(points, gas)
    return -(np.roll(fhat, -1, axis=0) - fhat + np.roll(ghat, -1, axis=1) - ghat) / h


def _rhs(field, gas):
    prhs = point_rhs(field, gas)
    arhs = average_rhs(field.point_arrays(), gas, field.mesh.h)
    return prhs, arhs


def _euler_stage(field, dt, prhs, arhs, time):
    return DofField(
        field.mesh,
        field.avg + dt * arhs,
        field.vert + dt * prhs["vert"],
        field.evert + dt * prhs["evert"],
        field.ehorz + dt * prhs["ehorz"],
        time=time,
    )


def ssprk3_step(field, gas, dt):
    """One three-stage strong-stability-preserving RK3 step."""
    t0 = field.time
    prhs, arhs = _rhs(field, gas)
    u1 = _euler_stage(field, dt, prhs, arhs, t0 + dt)

    prhs, arhs = _rhs(u1, gas)
    u2 = _euler_stage(u1, dt, prhs, arhs, t0 + dt)
    u2 = DofField(
        field.mesh,
        0.75 * field.avg + 0.25 * u2.avg,
        0.75 * field.vert + 0.25 * u2.vert,
        0.75 * field.evert + 0.25 * u2.evert,
        0.75 * field.ehorz + 0.25 * u2.ehorz,
        time=t0 + 0.5 * dt,
    )

    prhs, arhs = _rhs(u2, gas)
    u3 = _euler_stage(u2, dt, prhs, arhs, t0 + dt)
    return DofField(
        field.mesh,
        field.avg / 3.0 + 2.0 / 3.0 * u3.avg,
        field.vert / 3.0 + 2.0 / 3.0 * u3.vert,
        field.evert / 3.0 + 2.0 / 3.0 * u3.evert,
        field.ehorz / 3.0 + 2.0 / 3.0 * u3.ehorz,
        time=t0 + dt,
    )
