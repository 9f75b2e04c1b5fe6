"""Cartesian mesh, degree-of-freedom storage, and the continuous piecewise-
biquadratic (Q2) reconstruction.

Per cell the reconstruction interpolates a 3x3 node array: the four corner
vertices, the four edge midpoints, and a cell-center value recovered from the
cell average by inverting the Simpson quadrature rule. Point degrees of
freedom live on the shared lattice (vertices, vertical-edge midpoints,
horizontal-edge midpoints) so the reconstruction is globally continuous.

Node array convention used throughout: axis 0 is the x-direction node index
(0, 1, 2 at local coordinates xi = -1, 0, +1) and axis 1 the y-direction
index. Local coordinates (xi, eta) in [-1, 1]^2 map the cell.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .euler import cons_to_prim, prim_to_cons

# Simpson weights on [-1, 1], normalized to unit total
SIMPSON_1D = np.array([1.0 / 6.0, 4.0 / 6.0, 1.0 / 6.0])
SIMPSON_2D = np.outer(SIMPSON_1D, SIMPSON_1D)  # corner 1/36, edge 1/9, center 4/9
CENTER_WEIGHT = SIMPSON_2D[1, 1]  # 4/9


class LocateError(ValueError):
    pass


class CenterInversionError(ValueError):
    pass


@dataclass(frozen=True)
class Mesh:
    """Uniform periodic Cartesian mesh of square cells.

    Cell (i, j) covers [x0 + i h, x0 + (i+1) h] x [y0 + j h, y0 + (j+1) h].
    Vertex (i, j) sits at the cell's lower-left corner; vertical-edge midpoint
    (i, j) on the cell's left edge; horizontal-edge midpoint (i, j) on the
    bottom edge.
    """

    nx: int
    ny: int
    lx: float
    ly: float
    x0: float = 0.0
    y0: float = 0.0

    def __post_init__(self):
        if self.nx < 3 or self.ny < 3:
            raise ValueError("need at least 3 cells per direction")
        hx = self.lx / self.nx
        hy = self.ly / self.ny
        if not np.isclose(hx, hy, rtol=1e-12, atol=0.0):
            raise ValueError(f"cells must be square: hx={hx} hy={hy}")

    @property
    def h(self):
        return self.lx / self.nx

    def vertex_xy(self):
        x = self.x0 + self.h * np.arange(self.nx)
        y = self.y0 + self.h * np.arange(self.ny)
        return np.meshgrid(x, y, indexing="ij")

    def evert_xy(self):
        x = self.x0 + self.h * np.arange(self.nx)
        y = self.y0 + self.h * (np.arange(self.ny) + 0.5)
        return np.meshgrid(x, y, indexing="ij")

    def ehorz_xy(self):
        x = self.x0 + self.h * (np.arange(self.nx) + 0.5)
        y = self.y0 + self.h * np.arange(self.ny)
        return np.meshgrid(x, y, indexing="ij")

    def center_xy(self):
        x = self.x0 + self.h * (np.arange(self.nx) + 0.5)
        y = self.y0 + self.h * (np.arange(self.ny) + 0.5)
        return np.meshgrid(x, y, indexing="ij")


@dataclass
class DofField:
    """One time level of the solution.

    avg holds conservative cell averages (nx, ny, 4); vert/evert/ehorz hold
    primitive point values (nx, ny, 4) on the periodic lattice.
    """

    mesh: Mesh
    avg: np.ndarray
    vert: np.ndarray
    evert: np.ndarray
    ehorz: np.ndarray
    time: float = 0.0

    @classmethod
    def zeros(cls, mesh):
        shape = (mesh.nx, mesh.ny, 4)
        return cls(mesh, *(np.zeros(shape) for _ in range(4)))

    def copy(self):
        return DofField(
            self.mesh,
            self.avg.copy(),
            self.vert.copy(),
            self.evert.copy(),
            self.ehorz.copy(),
            self.time,
        )

    def point_arrays(self):
        return {"vert": self.vert, "evert": self.evert, "ehorz": self.ehorz}


def simpson_average(nodes):
    """Simpson cell average of a 3x3(x...) node array (axes 0, 1 = nodes)."""
    nodes = np.asarray(nodes)
    return np.tensordot(SIMPSON_2D, nodes, axes=([0, 1], [0, 1]))


def invert_simpson_center(cell_avg, boundary_sum):
    """Center value such that Simpson quadrature reproduces cell_avg.

    boundary_sum is the weighted sum over the eight boundary nodes,
    sum_{(a,b) != (1,1)} SIMPSON_2D[a, b] * node[a, b].
    """
    return (cell_avg - boundary_sum) / CENTER_WEIGHT


def _roll_view(arr, dx, dy):
    out = arr
    if dx:
        out = np.roll(out, -dx, axis=0)
    if dy:
        out = np.roll(out, -dy, axis=1)
    return out


def assemble_cell_tensor(vert, evert, ehorz, center=None):
    """Gather per-lattice point arrays into the (nx, ny, 3, 3, m) cell tensor.

    Node (a, b) of cell (i, j): a indexes x (vertex column i, midline, column
    i+1), b indexes y. The center slot (1, 1) is zero unless center is given.
    """
    nx, ny = vert.shape[:2]
    dtype = np.result_type(vert, evert, ehorz)
    nodes = np.zeros((nx, ny, 3, 3) + vert.shape[2:], dtype=dtype)
    nodes[:, :, 0, 0] = vert
    nodes[:, :, 2, 0] = _roll_view(vert, 1, 0)
    nodes[:, :, 0, 2] = _roll_view(vert, 0, 1)
    nodes[:, :, 2, 2] = _roll_view(vert, 1, 1)
    nodes[:, :, 1, 0] = ehorz
    nodes[:, :, 1, 2] = _roll_view(ehorz, 0, 1)
    nodes[:, :, 0, 1] = evert
    nodes[:, :, 2, 1] = _roll_view(evert, 1, 0)
    if center is not None:
        nodes[:, :, 1, 1] = center
    return nodes


def cell_boundary_nodes(field):
    """(nx, ny, 3, 3, 4) primitive boundary nodes per cell; center slot zero."""
    return assemble_cell_tensor(field.vert, field.evert, field.ehorz)


def cell_centers(field, gas, boundary=None):
    """Primitive cell-center values from Simpson-inverting the averages."""
    if boundary is None:
        boundary = cell_boundary_nodes(field)
    # Invert in conservative variables (the averages are conservative), then
    # convert the recovered center to primitive.
    bsum_cons = np.zeros_like(field.avg)
    for a in range(3):
        for b in range(3):
            if a == 1 and b == 1:
                continue
            bsum_cons += SIMPSON_2D[a, b] * prim_to_cons(boundary[:, :, a, b], gas)
    center_cons = invert_simpson_center(field.avg, bsum_cons)
    try:
        return cons_to_prim(center_cons, gas)
    except Exception as exc:  # re-raise with the offending cell attached
        raise CenterInversionError(f"center inversion produced an invalid state: {exc}") from exc


def cell_nodes(field, gas, boundary=None, centers=None):
    """Full (nx, ny, 3, 3, 4) primitive node tensor including centers."""
    if boundary is None:
        boundary = cell_boundary_nodes(field)
    if centers is None:
        centers = cell_centers(field, gas, boundary)
    nodes = boundary.copy()
    nodes[:, :, 1, 1] = centers
    return nodes


def build_cell_nodes(field, gas, i, j):
    """Node tensor of a single cell (convenience; see cell_nodes)."""
    return cell_nodes(field, gas)[i, j]


# ---------------------------------------------------------------------------
# Q2 evaluation

def lagrange_weights(s):
    """Quadratic Lagrange basis on nodes {-1, 0, +1}, shape (..., 3)."""
    s = np.asarray(s, dtype=np.float64)
    return np.stack([0.5 * s * (s - 1.0), 1.0 - s * s, 0.5 * s * (s + 1.0)], axis=-1)


def lagrange_deriv(s):
    """d/ds of the quadratic Lagrange basis, shape (..., 3)."""
    s = np.asarray(s, dtype=np.float64)
    return np.stack([s - 0.5, -2.0 * s, s + 0.5], axis=-1)


def q2_eval(nodes, xi, eta):
    """Evaluate the tensor quadratic through one 3x3(x ncomp) node array.

    xi/eta may be scalars or arrays; they broadcast against each other and
    the result gains their shape as leading axes.
    """
    nodes = np.asarray(nodes)
    wx = lagrange_weights(xi)
    wy = lagrange_weights(eta)
    if nodes.ndim == 2:
        return np.einsum("...a,...b,ab->...", wx, wy, nodes)
    return np.einsum("...a,...b,abc->...c", wx, wy, nodes)


def locate(mesh, x, y):
    """Map points to (cell i, cell j, xi, eta) with periodic wrapping.

    Cells are half-open: a point exactly on a cell boundary belongs to the
    cell on the right/upper side.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if np.any(~np.isfinite(x)) or np.any(~np.isfinite(y)):
        raise LocateError("non-finite coordinates passed to locate()")
    sx = (x - mesh.x0) / mesh.h
    sy = (y - mesh.y0) / mesh.h
    i = np.floor(sx).astype(np.int64)
    j = np.floor(sy).astype(np.int64)
    xi = 2.0 * (sx - i) - 1.0
    eta = 2.0 * (sy - j) - 1.0
    i = np.mod(i, mesh.nx)
    j = np.mod(j, mesh.ny)
    return i, j, xi, eta


class Q2Field:
    """Globally continuous piecewise-Q2 evaluator over one time level.

    Precomputes the per-cell node tensor once; evaluation is a vectorized
    gather plus tensor Lagrange combination. Works for the solution field
    (via cell_nodes) or for any custom node tensor (e.g. increments).
    """

    def __init__(self, mesh, nodes):
        self.mesh = mesh
        self.nodes = nodes  # (nx, ny, 3, 3, ncomp)

    @classmethod
    def from_field(cls, field, gas):
        return cls(field.mesh, cell_nodes(field, gas))

    def __call__(self, x, y):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        if np.any(~np.isfinite(x)) or np.any(~np.isfinite(y)):
            raise LocateError("non-finite coordinates passed to Q2Field")
        shape = np.broadcast_shapes(x.shape, y.shape)
        xs = np.broadcast_to(x, shape).ravel()
        ys = np.broadcast_to(y, shape).ravel()
        m = self.mesh
        out = backend.eval_q2_points(self.nodes, m.x0, m.y0, m.h, xs, ys)
        return out.reshape(shape + (self.nodes.shape[-1],))

    def deriv_x(self, x, y):
        i, j, xi, eta = locate(self.mesh, x, y)
        cell = self.nodes[i, j]
        wx = lagrange_deriv(xi) * (2.0 / self.mesh.h)
        wy = lagrange_weights(eta)
        return np.einsum("...a,...b,...abc->...c", wx, wy, cell)

    def deriv_y(self, x, y):
        i, j, xi, eta = locate(self.mesh, x, y)
        cell = self.nodes[i, j]
        wx = lagrange_weights(xi)
        wy = lagrange_deriv(eta) * (2.0 / self.mesh.h)
        return np.einsum("...a,...b,...abc->...c", wx, wy, cell)


def eval_global(field, gas, x, y):
    """Evaluate the reconstructed primitive solution at arbitrary points."""
    return Q2Field.from_field(field, gas)(x, y)
