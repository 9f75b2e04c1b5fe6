"""Evaluation of the exact-evolution acoustic stencils.

The frozen acoustic system (sound speed c*, impedance Z* = rho* c*) advanced
over a time tau has an exact solution by spherical means. Applied to the
globally continuous piecewise-Q2 reconstruction, the point value at any
lattice node after time tau is a linear combination of the 3x3 node arrays of
the adjacent cells, with coefficients that are polynomials of degree <= 4 in
nu = c* tau / h.

tools/derive_stencils.py performs that reduction symbolically and freezes the
polynomial coefficients into _stencil_data.py; this module evaluates them
(Horner, vectorized over points) and enforces the nu <= 1/2 domain of the
derivation (the sonic disk must stay inside the adjacent cells).
"""

from __future__ import annotations

import logging

import numpy as np

from ._stencil_data import MATRIX_KEYS, STENCILS

log = logging.getLogger(__name__)

NU_MAX = 0.5
GEOMETRIES = tuple(STENCILS.keys())
MATRIX_INDEX = {key: i for i, key in enumerate(MATRIX_KEYS)}

# matrix slot -> (output component, input component); Z* weighting applied in
# the contraction, see acoustic.point_value. The same six tables serve both
# coupling directions (uv drives u<-v and v<-u, etc.).
UU, UV, UP, VV, VP, PP = (MATRIX_INDEX[k] for k in MATRIX_KEYS)


class CflViolationError(ValueError):
    """Acoustic CFL domain nu <= 1/2 exceeded."""


_warned_contexts = set()


def check_nu(nu, override=False, context="acoustic stencil"):
    """Validate nu in [0, 1/2]; with override, log once per context and go on."""
    nu = np.asarray(nu)
    if np.any(~np.isfinite(nu)) or np.any(nu < 0.0):
        raise CflViolationError(f"{context}: nu must be finite and >= 0, got min {nu.min()}")
    worst = float(nu.max()) if nu.size else 0.0
    if worst > NU_MAX + 1e-12:
        if not override:
            raise CflViolationError(
                f"{context}: nu = {worst:.6g} exceeds {NU_MAX}; the sonic disk leaves "
                "the adjacent cells. Pass override_cfl_guard to extrapolate anyway."
            )
        if context not in _warned_contexts:
            _warned_contexts.add(context)
            log.warning(
                "%s: nu = %.6g exceeds %.2f; evaluating the stencil polynomials "
                "outside their derivation domain.",
                context,
                worst,
                NU_MAX,
            )
    return worst


def stencil_matrices(geometry, nu):
    """Evaluate one geometry's six stencil matrices at nu.

    Returns shape (6, 3, 3) for scalar nu, or nu.shape + (6, 3, 3) for an
    array of per-point nu values. Matrix rows index the x-direction node of
    the contributing cell, columns the y-direction node.
    """
    coeffs = STENCILS[geometry]  # (6, 3, 3, 5)
    nu = np.asarray(nu, dtype=np.float64)
    nu_b = nu[..., None, None, None]
    out = np.broadcast_to(coeffs[..., 4], nu.shape + (6, 3, 3)).copy()
    for k in (3, 2, 1, 0):
        out *= nu_b
        out += coeffs[..., k]
    return out


def stencils_vertical_edge(nu):
    """(right-cell, left-cell) matrix sets for a vertical-edge midpoint."""
    return stencil_matrices("edge_v_right", nu), stencil_matrices("edge_v_left", nu)


def stencils_horizontal_edge(nu):
    """(top-cell, bottom-cell) matrix sets for a horizontal-edge midpoint."""
    return stencil_matrices("edge_h_top", nu), stencil_matrices("edge_h_bottom", nu)


def stencils_vertex(nu):
    """(NE, NW, SW, SE) cell matrix sets for a vertex node."""
    return tuple(
        stencil_matrices(g, nu) for g in ("vertex_ne", "vertex_nw", "vertex_sw", "vertex_se")
    )


def stencil_center(nu):
    """Single-cell matrix set for the cell-center point."""
    return stencil_matrices("center", nu)
