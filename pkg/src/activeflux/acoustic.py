"""Exact evolution of the frozen acoustic system on the Q2 reconstruction.

About a frozen state (rho*, c*) the linear acoustics for (u, v, p) admit an
exact solution by spherical means. Evaluated on the piecewise-biquadratic
reconstruction this collapses to the polynomial stencils of
:mod:`activeflux.stencils`; the contraction below applies them with the
impedance weighting, and recovers density through the acoustic invariant
rho' - rho* = (p' - p*) / c*^2 (entropy does not move in the frozen system).

Coefficient coupling: writing <A, F> for the Frobenius product of a stencil
matrix with one cell's 3x3 node values of field F, each adjacent cell K
contributes

    u' += <A_uu, U> + <A_uv, V> + <A_up, P> / Z*
    v' += <A_uv, U> + <A_vv, V> + <A_vp, P> / Z*
    p' += Z* <A_up, U> + Z* <A_vp, V> + <A_pp, P>

with Z* = rho* c*. The same six matrices serve both coupling directions: the
asymmetric parts of any per-cell split are supported on the interface nodes
shared by the contributing cells, where the globally continuous data makes
them cancel in the assembled sum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend, stencils
from ._stencil_data import STENCILS
from .euler import sound_speed


@dataclass(frozen=True)
class FrozenAcoustics:
    """Frozen background for one acoustic update (arrays broadcast per point).

    Construction validates nu = c* tau / h in [0, 1/2]; pass
    allow_extrapolation=True to evaluate the stencil polynomials beyond that
    (logged once per context).
    """

    rho_star: np.ndarray
    p_star: np.ndarray
    c_star: np.ndarray
    nu: np.ndarray
    allow_extrapolation: bool = False
    context: str = "acoustic update"

    def __post_init__(self):
        stencils.check_nu(self.nu, override=self.allow_extrapolation, context=self.context)

    @property
    def z_star(self):
        return self.rho_star * self.c_star

    @classmethod
    def from_state(cls, w, gas, tau, h, override_cfl_guard=False, context="acoustic update"):
        w = np.asarray(w, dtype=np.float64)
        c = sound_speed(w, gas)
        return cls(w[..., 0], w[..., 3], c, c * tau / h, override_cfl_guard, context)


def _contract(cells, frozen):
    """Sum stencil contributions over adjacent cells.

    cells: iterable of (geometry name, node tensor (..., 3, 3, 4)).
    Returns the evolved primitive point values (..., 4).
    """
    nu = np.asarray(frozen.nu, dtype=np.float64)
    z = np.asarray(frozen.z_star, dtype=np.float64)
    lead = np.broadcast_shapes(
        nu.shape, z.shape, *(np.shape(nodes)[:-3] for _, nodes in cells)
    )
    n = int(np.prod(lead, dtype=np.int64)) if lead else 1
    nu_f = np.ascontiguousarray(np.broadcast_to(nu, lead).reshape(n))
    z_f = np.ascontiguousarray(np.broadcast_to(z, lead).reshape(n))
    out = np.zeros((n, 3))
    for geometry, nodes in cells:
        nodes = np.asarray(nodes, dtype=np.float64)
        nodes_f = np.broadcast_to(nodes, lead + (3, 3, 4)).reshape(n, 3, 3, 4)
        backend.contract_stencil(STENCILS[geometry], nodes_f, nu_f, z_f, out)
    u = out[:, 0].reshape(lead)
    v = out[:, 1].reshape(lead)
    p = out[:, 2].reshape(lead)
    rho = frozen.rho_star + (p - frozen.p_star) / frozen.c_star**2
    return np.stack([rho, u, v, p], axis=-1)


def acoustic_update_vertical_edge(nodes_left, nodes_right, frozen):
    """Evolve the point value at a vertical-edge midpoint."""
    return _contract(
        [("edge_v_left", nodes_left), ("edge_v_right", nodes_right)], frozen
    )


def acoustic_update_horizontal_edge(nodes_bottom, nodes_top, frozen):
    """Evolve the point value at a horizontal-edge midpoint."""
    return _contract(
        [("edge_h_bottom", nodes_bottom), ("edge_h_top", nodes_top)], frozen
    )


def acoustic_update_vertex(nodes_ne, nodes_nw, nodes_sw, nodes_se, frozen):
    """Evolve the point value at a vertex."""
    return _contract(
        [
            ("vertex_ne", nodes_ne),
            ("vertex_nw", nodes_nw),
            ("vertex_sw", nodes_sw),
            ("vertex_se", nodes_se),
        ],
        frozen,
    )


def acoustic_update_center(nodes, frozen):
    """Evolve the cell-center point value (single full-disk cell)."""
    return _contract([("center", nodes)], frozen)


def acoustic_increment(w_new, w_old, frozen):
    """Increment w_new - w_old with density tied to the acoustic invariant."""
    delta = np.asarray(w_new) - np.asarray(w_old)
    delta = delta.copy()
    delta[..., 0] = delta[..., 3] / frozen.c_star**2
    return delta


# ---------------------------------------------------------------------------
# whole-mesh sweeps

def _adjacent(nodes, di, dj):
    out = nodes
    if di:
        out = np.roll(out, di, axis=0)
    if dj:
        out = np.roll(out, dj, axis=1)
    return out


def evolve_points(cellnodes, field, gas, tau, override_cfl_guard=False):
    """Acoustic evolution of every lattice point value.

    cellnodes is the (nx, ny, 3, 3, 4) primitive node tensor of the current
    level (centers filled). The background is frozen at each target point's
    own current value. Returns ({vert, evert, ehorz} arrays, frozen dict).
    """
    h = field.mesh.h
    frozen = {
        "vert": FrozenAcoustics.from_state(
            field.vert, gas, tau, h, override_cfl_guard, context="vertex update"
        ),
        "evert": FrozenAcoustics.from_state(
            field.evert, gas, tau, h, override_cfl_guard, context="vertical-edge update"
        ),
        "ehorz": FrozenAcoustics.from_state(
            field.ehorz, gas, tau, h, override_cfl_guard, context="horizontal-edge update"
        ),
    }
    evolved = {
        "vert": acoustic_update_vertex(
            cellnodes,
            _adjacent(cellnodes, 1, 0),
            _adjacent(cellnodes, 1, 1),
            _adjacent(cellnodes, 0, 1),
            frozen["vert"],
        ),
        "evert": acoustic_update_vertical_edge(
            _adjacent(cellnodes, 1, 0), cellnodes, frozen["evert"]
        ),
        "ehorz": acoustic_update_horizontal_edge(
            _adjacent(cellnodes, 0, 1), cellnodes, frozen["ehorz"]
        ),
    }
    return evolved, frozen


def evolve_centers(cellnodes, gas, tau, h, override_cfl_guard=False):
    """Acoustic evolution of the cell-center values, frozen at the
    Simpson-inverted centers. Returns (new_centers, frozen)."""
    centers = cellnodes[:, :, 1, 1]
    frozen = FrozenAcoustics.from_state(
        centers, gas, tau, h, override_cfl_guard, context="center update"
    )
    return acoustic_update_center(cellnodes, frozen), frozen
