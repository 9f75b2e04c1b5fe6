"""Benchmark problem definitions and integral diagnostics."""

import numpy as np
import pytest

from activeflux.euler import prim_to_cons
from activeflux.grid import DofField, Mesh, cell_nodes
from activeflux.problems import (
    PROBLEM_NAMES,
    SHEAR_DELTA,
    SHEAR_MACH,
    SHEAR_R,
    enstrophy,
    gauss_cell_averages,
    init_field,
    init_mixed_packet,
    l1_average_error,
    make_kh,
    make_problem,
    make_pulse,
    make_shear,
    make_vortex,
    mixed_packet_error,
    point_max_error,
    pulse_asymmetry,
    shear_profile,
    total_entropy,
    vorticity_integral,
    vorticity_nodes,
)

from util import GAS, sample_field

GAMMA = GAS.gamma


# ---------------------------------------------------------------------------
# spot values of the initial data


def test_vortex_center_state():
    prob = make_vortex()
    w = prob.init(5.0, 0.0)
    temp = 1.0 - (GAMMA - 1.0) * 25.0 / (8.0 * GAMMA * np.pi**2) * np.e
    assert w[0] == pytest.approx(temp ** (1.0 / (GAMMA - 1.0)), rel=1e-14)
    assert w[1] == pytest.approx(1.0, abs=1e-15)
    assert w[2] == pytest.approx(0.0, abs=1e-15)
    assert w[3] == pytest.approx(w[0] ** GAMMA, rel=1e-14)


def test_vortex_far_field_is_free_stream():
    prob = make_vortex()
    w = prob.init(0.0, 5.0)  # r^2 = 50 from the center
    assert np.allclose(w, [1.0, 1.0, 0.0, 1.0], atol=1e-8)


def test_vortex_returns_at_t10():
    prob = make_vortex()
    x = np.linspace(0.2, 9.7, 13)[:, None]
    y = np.linspace(-4.6, 4.6, 11)[None, :]
    assert np.allclose(prob.exact(x, y, 10.0), prob.init(x, y), atol=1e-11)
    # quarter period: the vortex sits at x = 7.5
    w = prob.exact(7.5, 0.0, 2.5)
    assert w[0] == pytest.approx(prob.init(5.0, 0.0)[0], rel=1e-13)


def test_pulse_center_and_ambient():
    prob = make_pulse()
    w = prob.init(0.0, 0.0)
    assert w[0] == pytest.approx(1.25, abs=1e-15)
    assert w[3] == pytest.approx(1.25**GAMMA / GAMMA, rel=1e-15)
    far = prob.init(2.5, 2.5)
    assert np.allclose(far, [1.0, 0.0, 0.0, 1.0 / GAMMA], atol=1e-14)
    assert prob.exact is None


def test_shear_band_states():
    prob = make_shear()
    inside = prob.init(0.1, 0.0)
    assert inside[0] == pytest.approx(GAMMA - SHEAR_R, abs=1e-15)
    assert inside[1] == pytest.approx(-SHEAR_MACH, abs=1e-17)
    outside = prob.init(0.1, 0.5)
    assert outside[0] == pytest.approx(GAMMA + SHEAR_R, abs=1e-15)
    assert outside[1] == pytest.approx(SHEAR_MACH, abs=1e-17)
    assert prob.init(0.0, 0.3)[2] == pytest.approx(0.0, abs=1e-17)
    assert prob.init(0.25, 0.3)[2] == pytest.approx(SHEAR_DELTA * SHEAR_MACH, rel=1e-14)
    assert np.all(prob.init(np.linspace(0, 2, 9), 0.1)[..., 3] == 1.0)


def test_shear_profile_is_c1():
    # value and slope continuity across the four ramp seams
    eps = 1e-7
    for seam in (-9 / 32, -7 / 32, 7 / 32, 9 / 32):
        lo, hi = shear_profile(seam - eps), shear_profile(seam + eps)
        assert abs(hi - lo) < 1e-6  # continuous: jump is O(slope*eps) = O(eps^2)
        slope_l = (shear_profile(seam - eps) - shear_profile(seam - 2 * eps)) / eps
        slope_r = (shear_profile(seam + 2 * eps) - shear_profile(seam + eps)) / eps
        # one-sided slopes differ by O(a'' * eps) with a'' ~ (16 pi)^2 / 2
        assert abs(slope_l - slope_r) < 8e-4
    assert shear_profile(0.0) == 1.0
    assert shear_profile(0.5) == 0.0
    assert shear_profile(-0.5) == 0.0


def test_kh_layer_states():
    prob = make_kh()
    band0 = 2.0 * np.tanh(7.5)
    w = prob.init(0.0, 0.0)
    assert w[0] == pytest.approx(0.5 + 0.75 * band0, rel=1e-15)
    assert w[1] == pytest.approx(0.5 * (band0 - 1.0), rel=1e-14)
    assert abs(w[0] - 2.0) < 1e-5 and abs(w[1] - 0.5) < 1e-5
    outer = prob.init(0.0, -1.0)
    assert abs(outer[0] - 0.5) < 1e-5
    assert abs(outer[1] + 0.5) < 1e-5
    assert prob.init(0.25, 0.7)[2] == pytest.approx(0.1, rel=1e-14)


def test_problem_mesh_aspect():
    assert make_vortex().mesh(16).ny == 16
    m = make_shear().mesh(64)
    assert (m.nx, m.ny) == (64, 32)
    assert m.h == pytest.approx(2.0 / 64)
    assert make_kh().mesh(48).ny == 48


def test_make_problem_dispatch():
    assert make_problem("pulse").name == "pulse"
    assert set(PROBLEM_NAMES) == {"packet", "vortex", "pulse", "shear", "kh"}
    with pytest.raises(ValueError, match="unknown problem"):
        make_problem("sod")


# ---------------------------------------------------------------------------
# quadrature initialization


def _monomial_avg(lo, h, a):
    """Exact average of x^a over [lo, lo+h]."""
    return ((lo + h) ** (a + 1) - lo ** (a + 1)) / ((a + 1) * h)


def test_gauss_cell_averages_polynomial_exact():
    # zero velocity: conservative averages are (avg rho, 0, 0, avg p/(gm1))
    mesh = Mesh(5, 4, 1.0, 0.8, -0.3, 0.2)

    def wfunc(x, y):
        x, y = np.asarray(x, float), np.asarray(y, float)
        w = np.empty(np.broadcast_shapes(x.shape, y.shape) + (4,))
        w[..., 0] = 2.0 + x**3 * y - 0.5 * y**4
        w[..., 1] = 0.0
        w[..., 2] = 0.0
        w[..., 3] = 1.0 + 0.25 * x**2 * y**2
        return w

    avg = gauss_cell_averages(wfunc, mesh, GAS)
    h = mesh.h
    xs = mesh.x0 + h * np.arange(mesh.nx)
    ys = mesh.y0 + h * np.arange(mesh.ny)
    for i, j in [(0, 0), (2, 3), (4, 1)]:
        mx = [_monomial_avg(xs[i], h, a) for a in range(5)]
        my = [_monomial_avg(ys[j], h, a) for a in range(5)]
        rho = 2.0 + mx[3] * my[1] - 0.5 * my[4]
        p = 1.0 + 0.25 * mx[2] * my[2]
        assert avg[i, j, 0] == pytest.approx(rho, rel=1e-14)
        assert avg[i, j, 1] == 0.0
        assert avg[i, j, 2] == 0.0
        assert avg[i, j, 3] == pytest.approx(p / (GAMMA - 1.0), rel=1e-14)


def test_gauss_cell_averages_with_velocity():
    # rho const, u = a x, v = b y: momentum and kinetic terms are monomials
    mesh = Mesh(4, 4, 2.0, 2.0, 0.5, -1.0)
    a, b = 0.3, -0.7

    def wfunc(x, y):
        x, y = np.asarray(x, float), np.asarray(y, float)
        w = np.empty(np.broadcast_shapes(x.shape, y.shape) + (4,))
        w[..., 0] = 2.0
        w[..., 1] = a * x
        w[..., 2] = b * y
        w[..., 3] = 1.0
        return w

    avg = gauss_cell_averages(wfunc, mesh, GAS)
    h = mesh.h
    for i, j in [(0, 0), (3, 2)]:
        x0 = mesh.x0 + i * h
        y0 = mesh.y0 + j * h
        x1, x2 = _monomial_avg(x0, h, 1), _monomial_avg(x0, h, 2)
        y1, y2 = _monomial_avg(y0, h, 1), _monomial_avg(y0, h, 2)
        assert avg[i, j, 1] == pytest.approx(2.0 * a * x1, rel=1e-14)
        assert avg[i, j, 2] == pytest.approx(2.0 * b * y1, rel=1e-14)
        energy = 1.0 / (GAMMA - 1.0) + 0.5 * 2.0 * (a**2 * x2 + b**2 * y2)
        assert avg[i, j, 3] == pytest.approx(energy, rel=1e-14)


def test_init_field_points_sample_analytic_data():
    prob = make_vortex()
    fld = init_field(prob, 12)
    assert fld.time == 0.0
    mesh = fld.mesh
    assert np.array_equal(fld.vert, prob.init(*mesh.vertex_xy()))
    assert np.array_equal(fld.evert, prob.init(*mesh.evert_xy()))
    # averages agree with the points to truncation accuracy, not exactly
    mid = prob.init(mesh.x0 + mesh.h * 0.5, mesh.y0 + mesh.h * 0.5)
    assert abs(fld.avg[0, 0, 0] - mid[0]) < 1e-3


def test_init_field_exact_time_shift():
    prob = make_vortex()
    fld = init_field(prob, 8, t=10.0)
    ref = init_field(prob, 8)
    assert fld.time == 10.0
    assert np.allclose(fld.avg, ref.avg, atol=1e-11)
    assert np.allclose(fld.vert, ref.vert, atol=1e-11)


def test_init_field_rejects_time_without_exact():
    with pytest.raises(ValueError, match="no exact solution"):
        init_field(make_pulse(), 8, t=1.0)


def test_mixed_packet_wrappers():
    mesh = Mesh(8, 8, 1.0, 1.0, 0.0, 0.0)
    fld = init_mixed_packet(mesh)
    assert mixed_packet_error(fld) < 1e-15
    # evaluating against the wrong time must register the packet motion
    assert mixed_packet_error(fld, t=0.1) > 1e-8


# ---------------------------------------------------------------------------
# diagnostics


def _rotation_nodes(mesh, omega, rho=1.0, pres=1.0):
    """Per-cell 3x3 primitive nodes of a rigid rotation about the domain center."""
    h = mesh.h
    off = np.array([0.0, 0.5, 1.0])  # ascending: slot 2 is the +h side of the cell
    xs = mesh.x0 + h * (np.arange(mesh.nx)[:, None] + off[None, :])  # (nx, 3)
    ys = mesh.y0 + h * (np.arange(mesh.ny)[:, None] + off[None, :])  # (ny, 3)
    xc, yc = mesh.x0 + 0.5 * mesh.lx, mesh.y0 + 0.5 * mesh.ly
    x = xs[:, None, :, None]
    y = ys[None, :, None, :]
    nodes = np.empty((mesh.nx, mesh.ny, 3, 3, 4))
    nodes[..., 0] = rho
    nodes[..., 1] = -omega * (y - yc)
    nodes[..., 2] = omega * (x - xc)
    nodes[..., 3] = pres
    return nodes


def test_rotation_nodes_convention_matches_cell_nodes():
    # pin the slot layout against the production assembly on interior cells
    fld = sample_field(
        lambda x, y: np.stack(
            [np.ones_like(x + y), 0.2 * (y - 0.5), -0.2 * (x - 0.5), np.ones_like(x + y)],
            axis=-1,
        ),
        6,
    )
    produced = cell_nodes(fld, GAS)
    analytic = _rotation_nodes(fld.mesh, -0.2, 1.0, 1.0)
    interior = np.s_[: fld.mesh.nx - 1, : fld.mesh.ny - 1]
    assert np.allclose(produced[interior], analytic[interior], atol=1e-13)


def test_vorticity_of_rigid_rotation():
    prob = make_vortex()
    fld = init_field(prob, 6)  # only supplies the mesh handle
    omega = 0.8
    nodes = _rotation_nodes(fld.mesh, omega)
    om = vorticity_nodes(fld, GAS, nodes=nodes)
    assert np.allclose(om, 2.0 * omega, atol=1e-12)
    area = fld.mesh.lx * fld.mesh.ly
    assert vorticity_integral(fld, GAS, nodes=nodes) == pytest.approx(
        2.0 * omega * area, rel=1e-13
    )
    assert enstrophy(fld, GAS, nodes=nodes) == pytest.approx(
        0.5 * (2.0 * omega) ** 2 * area, rel=1e-13
    )


def test_total_entropy_uniform_and_isentropic():
    rho0, p0 = 1.3, 0.9
    uni = sample_field(
        lambda x, y: np.broadcast_to(
            np.array([rho0, 0.1, -0.2, p0]), np.broadcast_shapes(x.shape, y.shape) + (4,)
        ).copy(),
        5,
    )
    expect = -rho0 * np.log(p0 / rho0**GAMMA)
    assert total_entropy(uni, GAS) == pytest.approx(expect, rel=1e-13)

    def isentropic(x, y):
        x, y = np.asarray(x, float), np.asarray(y, float)
        rho = 1.0 + 0.3 * np.sin(2 * np.pi * x) * np.cos(2 * np.pi * y)
        w = np.empty(np.broadcast_shapes(x.shape, y.shape) + (4,))
        w[..., 0] = rho
        w[..., 1] = 0.05 * np.cos(2 * np.pi * y)
        w[..., 2] = 0.0
        w[..., 3] = rho**GAMMA
        return w

    ise = sample_field(isentropic, 7)
    assert abs(total_entropy(ise, GAS)) < 1e-13


def test_l1_average_error_is_integrated():
    fld = init_field(make_pulse(), 10)
    ref = fld.avg.copy()
    fld.avg[..., 0] += 1e-3
    area = fld.mesh.lx * fld.mesh.ly
    assert l1_average_error(fld, ref) == pytest.approx(1e-3 * area, rel=1e-12)
    assert l1_average_error(fld, ref, component=3) == 0.0


def test_point_max_error_picks_worst_point():
    prob = make_problem("packet")
    fld = init_field(prob, 6)
    assert point_max_error(fld, prob.exact) < 1e-15
    fld.ehorz[2, 3, 1] += 1e-3
    assert point_max_error(fld, prob.exact) == pytest.approx(1e-3, rel=1e-9)


def test_pulse_asymmetry_zero_for_radial_data():
    prob = make_pulse()
    for n in (50, 64):
        fld = init_field(prob, n)
        assert pulse_asymmetry(fld, prob.gas) < 1e-13


def test_pulse_asymmetry_detects_angular_perturbation():
    prob = make_pulse()
    fld = init_field(prob, 40)
    mesh = fld.mesh
    eps = 1e-4
    for arr, xy in (
        (fld.vert, mesh.vertex_xy()),
        (fld.evert, mesh.evert_xy()),
        (fld.ehorz, mesh.ehorz_xy()),
    ):
        th = np.arctan2(xy[1], xy[0])
        r2 = xy[0] ** 2 + xy[1] ** 2
        arr[..., 3] += eps * np.cos(4.0 * th) * np.exp(-20.0 * r2)
    asym = pulse_asymmetry(fld, prob.gas)
    # amplitude of the radial profile is ~0.26; spread is a small multiple of eps
    assert 5e-5 < asym < 5e-3
