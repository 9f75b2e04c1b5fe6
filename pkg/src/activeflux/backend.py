"""Backend dispatch between the numba kernels and pure-numpy fallbacks.

Set ACTIVEFLUX_NUMBA=0 to force the numpy path (useful for debugging and for
the backend-parity tests). The choice is resolved once at import. Thread
count for numba follows the usual NUMBA_NUM_THREADS; the kernels here are
single-threaded loops, so the setting only matters if numba parallelism is
added later.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("ACTIVEFLUX_NUMBA", "1").strip().lower()
if _FLAG in ("0", "false", "no", "off"):
    _kernels = None
else:
    try:
        from . import _numba_kernels as _kernels
    except ImportError:
        _kernels = None

USE_NUMBA = _kernels is not None


def _eval_q2_points_numpy(nodes, x0, y0, h, xs, ys):
    nx, ny = nodes.shape[0], nodes.shape[1]
    sx = (xs - x0) / h
    sy = (ys - y0) / h
    fi = np.floor(sx)
    fj = np.floor(sy)
    xi = 2.0 * (sx - fi) - 1.0
    eta = 2.0 * (sy - fj) - 1.0
    i = fi.astype(np.int64) % nx
    j = fj.astype(np.int64) % ny
    wx = np.stack([0.5 * xi * (xi - 1.0), 1.0 - xi * xi, 0.5 * xi * (xi + 1.0)], axis=-1)
    wy = np.stack([0.5 * eta * (eta - 1.0), 1.0 - eta * eta, 0.5 * eta * (eta + 1.0)], axis=-1)
    cells = nodes[i, j]  # (N, 3, 3, m)
    return np.einsum("na,nb,nabc->nc", wx, wy, cells)


def eval_q2_points(nodes, x0, y0, h, xs, ys):
    """Piecewise-Q2 evaluation at scattered points (periodic lattice).

    nodes: (nx, ny, 3, 3, m); xs, ys: (N,). Returns (N, m). Complex node
    arrays always take the numpy path (the kernels are float64-only).
    """
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    if np.iscomplexobj(nodes):
        return _eval_q2_points_numpy(np.asarray(nodes), x0, y0, h, xs, ys)
    nodes = np.ascontiguousarray(nodes, dtype=np.float64)
    if USE_NUMBA:
        out = np.empty((xs.shape[0], nodes.shape[4]))
        _kernels.eval_q2_points(nodes, x0, y0, h, xs, ys, out)
        return out
    return _eval_q2_points_numpy(nodes, x0, y0, h, xs, ys)


def _contract_stencil_numpy(coeffs, nodes, nu, z, out):
    from .stencils import PP, UP, UU, UV, VP, VV

    mats = np.moveaxis(
        np.polynomial.polynomial.polyval(nu, np.moveaxis(coeffs, -1, 0)), -1, 0
    )  # (N, 6, 3, 3)
    fields = np.stack([nodes[..., 1], nodes[..., 2], nodes[..., 3]], axis=-3)
    hh = np.einsum("nmab,nfab->nmf", mats, fields)
    out[:, 0] += hh[:, UU, 0] + hh[:, UV, 1] + hh[:, UP, 2] / z
    out[:, 1] += hh[:, UV, 0] + hh[:, VV, 1] + hh[:, VP, 2] / z
    out[:, 2] += z * hh[:, UP, 0] + z * hh[:, VP, 1] + hh[:, PP, 2]


def contract_stencil(coeffs, nodes, nu, z, out):
    """Accumulate one geometry's acoustic contraction into out (N, 3)."""
    if np.iscomplexobj(nodes) or np.iscomplexobj(out):
        _contract_stencil_numpy(coeffs, np.asarray(nodes), nu, z, out)
        return out
    if USE_NUMBA:
        _kernels.contract_stencil(
            np.ascontiguousarray(coeffs, dtype=np.float64),
            np.ascontiguousarray(nodes, dtype=np.float64),
            np.ascontiguousarray(nu, dtype=np.float64),
            np.ascontiguousarray(z, dtype=np.float64),
            out,
        )
    else:
        _contract_stencil_numpy(coeffs, nodes, nu, z, out)
    return out
