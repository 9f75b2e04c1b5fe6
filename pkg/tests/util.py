"""Shared helpers for the test suite."""
import numpy as np

from activeflux.euler import GasModel, prim_to_cons, sound_speed
from activeflux.grid import SIMPSON_2D, DofField, Mesh, assemble_cell_tensor

GAS = GasModel(1.4)


def sample_field(wfunc, nx, ny=None, lx=1.0, ly=None, gas=GAS):
    """DofField with all points and centers sampled from wfunc(x, y) -> (..., 4).

    Averages are the Simpson quadrature of the sampled node tensor, so the
    center inversion reproduces the sampled centers exactly.
    """
    ny = ny if ny is not None else nx
    mesh = Mesh(nx, ny, lx, ly if ly is not None else lx * ny / nx)
    fld = DofField.zeros(mesh)
    fld.vert[:] = wfunc(*mesh.vertex_xy())
    fld.evert[:] = wfunc(*mesh.evert_xy())
    fld.ehorz[:] = wfunc(*mesh.ehorz_xy())
    centers = wfunc(*mesh.center_xy())
    nodes = assemble_cell_tensor(fld.vert, fld.evert, fld.ehorz, centers)
    fld.avg[:] = np.einsum("ab,ijabc->ijc", SIMPSON_2D, prim_to_cons(nodes, gas))
    return fld


def smooth_field(nx=8, amp=0.05, seed=4):
    """Valid random smooth periodic state on [0, 1]^2."""
    rng = np.random.default_rng(seed)
    ph = rng.uniform(0, 2 * np.pi, size=(4, 2, 2))

    def w(x, y):
        out = np.empty(np.broadcast_shapes(np.shape(x), np.shape(y)) + (4,))
        base = (1.0, 0.2, -0.15, 1.0)
        for k in range(4):
            pert = (
                np.cos(2 * np.pi * x + ph[k, 0, 0]) * np.cos(2 * np.pi * y + ph[k, 0, 1])
                + 0.5 * np.sin(4 * np.pi * x + ph[k, 1, 0]) * np.cos(2 * np.pi * y + ph[k, 1, 1])
            )
            out[..., k] = base[k] + amp * pert
        return out

    return sample_field(w, nx)


def stable_tau(fld, cfl=0.4, gas=GAS):
    speed = max(
        np.abs(arr[..., 1:3]).max() + sound_speed(arr, gas).max()
        for arr in (fld.vert, fld.evert, fld.ehorz)
    )
    return cfl * fld.mesh.h / speed
