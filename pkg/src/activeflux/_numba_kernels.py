"""Numba JIT kernels for the hot loops.

Import of this module requires numba; :mod:`activeflux.backend` falls back to
the pure-numpy implementations when numba is unavailable or disabled via
ACTIVEFLUX_NUMBA=0. Kernels are written against flat arrays so they stay
independent of the container types.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def eval_q2_points(nodes, x0, y0, h, xs, ys, out):
    """Fused locate + gather + tensor-Lagrange evaluation.

    nodes: (nx, ny, 3, 3, m) cell tensor; xs, ys: (N,) coordinates;
    out: (N, m) filled with the piecewise-Q2 values.
    """
    nx = nodes.shape[0]
    ny = nodes.shape[1]
    m = nodes.shape[4]
    inv_h = 1.0 / h
    for n in range(xs.shape[0]):
        sx = (xs[n] - x0) * inv_h
        sy = (ys[n] - y0) * inv_h
        fi = np.floor(sx)
        fj = np.floor(sy)
        xi = 2.0 * (sx - fi) - 1.0
        eta = 2.0 * (sy - fj) - 1.0
        i = int(fi) % nx
        j = int(fj) % ny
        wx0 = 0.5 * xi * (xi - 1.0)
        wx1 = 1.0 - xi * xi
        wx2 = 0.5 * xi * (xi + 1.0)
        wy0 = 0.5 * eta * (eta - 1.0)
        wy1 = 1.0 - eta * eta
        wy2 = 0.5 * eta * (eta + 1.0)
        cell = nodes[i, j]
        for c in range(m):
            out[n, c] = (
                wx0 * (wy0 * cell[0, 0, c] + wy1 * cell[0, 1, c] + wy2 * cell[0, 2, c])
                + wx1 * (wy0 * cell[1, 0, c] + wy1 * cell[1, 1, c] + wy2 * cell[1, 2, c])
                + wx2 * (wy0 * cell[2, 0, c] + wy1 * cell[2, 1, c] + wy2 * cell[2, 2, c])
            )


@njit(cache=True)
def contract_stencil(coeffs, nodes, nu, z, out):
    """Accumulate one geometry's stencil contraction into out.

    coeffs: (6, 3, 3, 5) polynomial tables in nu (slots uu, uv, up, vv, vp,
    pp); nodes: (N, 3, 3, 4) primitive node arrays of the contributing cell;
    nu, z: (N,); out: (N, 3) accumulating (u, v, p). Horner evaluation is
    fused with the Frobenius products so the per-point matrices are never
    materialized.
    """
    npts = nodes.shape[0]
    for n in range(npts):
        t = nu[n]
        h_uu_u = 0.0
        h_uv_u = 0.0
        h_uv_v = 0.0
        h_up_u = 0.0
        h_up_p = 0.0
        h_vv_v = 0.0
        h_vp_v = 0.0
        h_vp_p = 0.0
        h_pp_p = 0.0
        for a in range(3):
            for b in range(3):
                uval = nodes[n, a, b, 1]
                vval = nodes[n, a, b, 2]
                pval = nodes[n, a, b, 3]
                c = coeffs[0, a, b]
                e = (((c[4] * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0]
                h_uu_u += e * uval
                c = coeffs[1, a, b]
                e = (((c[4] * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0]
                h_uv_u += e * uval
                h_uv_v += e * vval
                c = coeffs[2, a, b]
                e = (((c[4] * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0]
                h_up_u += e * uval
                h_up_p += e * pval
                c = coeffs[3, a, b]
                e = (((c[4] * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0]
                h_vv_v += e * vval
                c = coeffs[4, a, b]
                e = (((c[4] * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0]
                h_vp_v += e * vval
                h_vp_p += e * pval
                c = coeffs[5, a, b]
                e = (((c[4] * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0]
                h_pp_p += e * pval
        zi = z[n]
        out[n, 0] += h_uu_u + h_uv_v + h_up_p / zi
        out[n, 1] += h_uv_u + h_vv_v + h_vp_p / zi
        out[n, 2] += zi * h_up_u + zi * h_vp_v + h_pp_p
