"""Mesh, Simpson coupling, and Q2 reconstruction tests."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from activeflux.euler import GasModel, prim_to_cons
from activeflux.grid import (
    CENTER_WEIGHT,
    SIMPSON_2D,
    DofField,
    LocateError,
    Mesh,
    Q2Field,
    assemble_cell_tensor,
    cell_centers,
    cell_nodes,
    eval_global,
    invert_simpson_center,
    lagrange_deriv,
    lagrange_weights,
    locate,
    q2_eval,
    simpson_average,
)

GAS = GasModel(1.4)


def random_field(nx, ny, seed=0, lx=1.0, ly=None):
    rng = np.random.default_rng(seed)
    mesh = Mesh(nx, ny, lx, ly if ly is not None else lx * ny / nx)
    fld = DofField.zeros(mesh)
    for arr in (fld.vert, fld.evert, fld.ehorz):
        arr[..., 0] = 1.0 + 0.3 * rng.random((nx, ny))
        arr[..., 1] = 0.5 * rng.standard_normal((nx, ny))
        arr[..., 2] = 0.5 * rng.standard_normal((nx, ny))
        arr[..., 3] = 1.0 + 0.3 * rng.random((nx, ny))
    # averages consistent with a positive center: Simpson of the boundary
    # plus a perturbed center value
    nodes = assemble_cell_tensor(fld.vert, fld.evert, fld.ehorz)
    center = np.empty((nx, ny, 4))
    center[..., 0] = 1.0 + 0.3 * rng.random((nx, ny))
    center[..., 1] = 0.5 * rng.standard_normal((nx, ny))
    center[..., 2] = 0.5 * rng.standard_normal((nx, ny))
    center[..., 3] = 1.0 + 0.3 * rng.random((nx, ny))
    bsum = np.zeros((nx, ny, 4))
    for a in range(3):
        for b in range(3):
            if (a, b) != (1, 1):
                bsum += SIMPSON_2D[a, b] * prim_to_cons(nodes[:, :, a, b], GAS)
    fld.avg[:] = bsum + CENTER_WEIGHT * prim_to_cons(center, GAS)
    return fld, center


def test_simpson_weights():
    assert np.isclose(SIMPSON_2D.sum(), 1.0)
    assert np.isclose(SIMPSON_2D[0, 0], 1.0 / 36.0)
    assert np.isclose(SIMPSON_2D[1, 0], 1.0 / 9.0)
    assert CENTER_WEIGHT == SIMPSON_2D[1, 1] == pytest.approx(4.0 / 9.0)


def test_simpson_exact_on_bicubics():
    # 3-point Simpson integrates cubics exactly in each direction
    s = np.array([0.0, 0.5, 1.0])
    f = (s**3 - 0.5 * s + 2.0)[:, None] * (2.0 * s**2 + s)[None, :]
    exact = (1.0 / 4.0 - 0.25 + 2.0) * (2.0 / 3.0 + 0.5)
    assert np.isclose(simpson_average(f), exact, rtol=1e-14)


def test_center_inversion_roundtrip():
    rng = np.random.default_rng(3)
    nodes = rng.standard_normal((3, 3))
    avg = simpson_average(nodes)
    bsum = avg * 0.0
    for a in range(3):
        for b in range(3):
            if (a, b) != (1, 1):
                bsum += SIMPSON_2D[a, b] * nodes[a, b]
    assert np.isclose(invert_simpson_center(avg, bsum), nodes[1, 1], rtol=1e-13)


@given(st.floats(min_value=-1.0, max_value=1.0, allow_nan=False))
@settings(max_examples=100, deadline=None)
def test_lagrange_partition_of_unity(s):
    assert np.isclose(lagrange_weights(s).sum(), 1.0, atol=1e-14)
    assert np.isclose(lagrange_deriv(s).sum(), 0.0, atol=1e-14)


def test_lagrange_nodal_delta():
    w = lagrange_weights(np.array([-1.0, 0.0, 1.0]))
    assert np.allclose(w, np.eye(3))


@given(
    st.floats(min_value=-1.0, max_value=1.0, allow_nan=False),
    st.floats(min_value=-1.0, max_value=1.0, allow_nan=False),
)
@settings(max_examples=50, deadline=None)
def test_q2_eval_reproduces_biquadratics(xi, eta):
    rng = np.random.default_rng(11)
    cx = rng.standard_normal(3)
    cy = rng.standard_normal(3)

    def f(a, b):
        return (cx[0] + cx[1] * a + cx[2] * a**2) * (cy[0] + cy[1] * b + cy[2] * b**2)

    s = np.array([-1.0, 0.0, 1.0])
    nodes = f(s[:, None], s[None, :])
    assert np.isclose(q2_eval(nodes, xi, eta), f(xi, eta), rtol=1e-12, atol=1e-12)


def test_lagrange_deriv_differentiates_quadratics():
    s = 0.37
    c = np.array([0.4, -1.2, 0.7])
    vals = c[0] + c[1] * np.array([-1.0, 0.0, 1.0]) + c[2] * np.array([1.0, 0.0, 1.0])
    d = lagrange_deriv(s) @ vals
    assert np.isclose(d, c[1] + 2.0 * c[2] * s, rtol=1e-13)


def test_assemble_adjacency():
    """Neighbouring cells must share their boundary nodes (periodically)."""
    fld, _ = random_field(5, 4, seed=7, lx=1.0, ly=0.8)
    nodes = assemble_cell_tensor(fld.vert, fld.evert, fld.ehorz)
    right = np.roll(nodes, -1, axis=0)
    top = np.roll(nodes, -1, axis=1)
    assert np.array_equal(nodes[:, :, 2, :], right[:, :, 0, :])
    assert np.array_equal(nodes[:, :, :, 2], top[:, :, :, 0])


def test_mesh_validation():
    with pytest.raises(ValueError):
        Mesh(4, 4, 1.0, 2.0)  # non-square cells
    with pytest.raises(ValueError):
        Mesh(2, 4, 1.0, 2.0)  # too few cells
    m = Mesh(8, 4, 2.0, 1.0)
    assert np.isclose(m.h, 0.25)


def test_locate_cells_and_wrapping():
    m = Mesh(4, 4, 1.0, 1.0, x0=0.0, y0=0.0)
    # vertex coordinates are owned by the cell to the upper right
    i, j, xi, eta = locate(m, 0.25, 0.5)
    assert (i, j) == (1, 2) and xi == -1.0 and eta == -1.0
    # cell interior
    i, j, xi, eta = locate(m, 0.125, 0.9375)
    assert (i, j) == (0, 3)
    assert np.isclose(xi, 0.0) and np.isclose(eta, 0.5)
    # wraps below the domain
    i, j, xi, eta = locate(m, -0.0625, 1.0625)
    assert (i, j) == (3, 0)
    assert np.isclose(xi, 0.5) and np.isclose(eta, -0.5)
    with pytest.raises(LocateError):
        locate(m, np.nan, 0.0)


def test_center_inversion_consistency():
    """cell_centers must return exactly the center used to build the average."""
    fld, center = random_field(6, 6, seed=1)
    rec = cell_centers(fld, GAS)
    assert np.abs(rec - center).max() < 1e-12


def test_simpson_of_cell_nodes_reproduces_average():
    fld, _ = random_field(5, 5, seed=2)
    nodes = cell_nodes(fld, GAS)
    cons = prim_to_cons(nodes, GAS)
    avg = np.einsum("ab,ijabc->ijc", SIMPSON_2D, cons)
    assert np.abs(avg - fld.avg).max() < 1e-13


def test_q2field_reproduces_lattice_values():
    fld, center = random_field(5, 4, seed=5, lx=1.0, ly=0.8)
    q2 = Q2Field.from_field(fld, GAS)
    xv, yv = fld.mesh.vertex_xy()
    assert np.abs(q2(xv, yv) - fld.vert).max() < 1e-12
    xe, ye = fld.mesh.evert_xy()
    assert np.abs(q2(xe, ye) - fld.evert).max() < 1e-12
    xh, yh = fld.mesh.ehorz_xy()
    assert np.abs(q2(xh, yh) - fld.ehorz).max() < 1e-12
    xc, yc = fld.mesh.center_xy()
    assert np.abs(q2(xc, yc) - center).max() < 1e-12


def test_q2field_continuity_across_edges():
    fld, _ = random_field(4, 4, seed=9)
    q2 = Q2Field.from_field(fld, GAS)
    nodes = q2.nodes
    # evaluate on a shared vertical edge from the two adjacent cell tensors
    etas = np.linspace(-1.0, 1.0, 9)
    for i in range(4):
        left = q2_eval(nodes[i - 1, 2], 1.0, etas)
        right = q2_eval(nodes[i, 2], -1.0, etas)
        assert np.abs(left - right).max() < 1e-13


def test_q2field_derivatives_match_fd():
    fld, _ = random_field(4, 4, seed=12)
    q2 = Q2Field.from_field(fld, GAS)
    x = np.array([0.31, 0.62])
    y = np.array([0.11, 0.86])
    d = 1e-7
    dx_fd = (q2(x + d, y) - q2(x - d, y)) / (2 * d)
    dy_fd = (q2(x, y + d) - q2(x, y - d)) / (2 * d)
    assert np.abs(q2.deriv_x(x, y) - dx_fd).max() < 1e-5
    assert np.abs(q2.deriv_y(x, y) - dy_fd).max() < 1e-5


def test_eval_global_constant_state():
    mesh = Mesh(5, 5, 1.0, 1.0)
    fld = DofField.zeros(mesh)
    w = np.array([1.2, 0.3, -0.4, 2.0])
    for arr in (fld.vert, fld.evert, fld.ehorz):
        arr[:] = w
    fld.avg[:] = prim_to_cons(w, GAS)
    rng = np.random.default_rng(0)
    x = rng.random(40)
    y = rng.random(40)
    out = eval_global(fld, GAS, x, y)
    assert np.abs(out - w).max() < 1e-13


def test_doffield_copy_is_independent():
    fld, _ = random_field(4, 4)
    cp = fld.copy()
    cp.vert[0, 0, 0] += 1.0
    assert fld.vert[0, 0, 0] != cp.vert[0, 0, 0]
