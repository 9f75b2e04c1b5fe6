"""Semi-discrete reference scheme: RHS structure, upwinding, SSPRK3."""
import numpy as np
import pytest

from activeflux.euler import GasModel, prim_to_cons
from activeflux.grid import DofField, Mesh
from activeflux.semidiscrete import (
    abs_jac_x,
    abs_jac_y,
    average_rhs,
    jac_x,
    jac_y,
    point_rhs,
    ssprk3_step,
)
from activeflux.vonneumann import semidiscrete_symbol

from util import GAS, sample_field, smooth_field, stable_tau


def test_uniform_field_has_zero_rhs():
    mesh = Mesh(6, 6, 1.0, 1.0)
    fld = DofField.zeros(mesh)
    w = np.array([1.1, 0.3, -0.2, 0.9])
    for arr in (fld.vert, fld.evert, fld.ehorz):
        arr[:] = w
    fld.avg[:] = prim_to_cons(w, GAS)
    prhs = point_rhs(fld, GAS)
    for name, arr in prhs.items():
        assert np.abs(arr).max() < 1e-13, name
    arhs = average_rhs(fld.point_arrays(), GAS, mesh.h)
    assert np.abs(arhs).max() < 1e-13
    new = ssprk3_step(fld, GAS, 1e-2)
    assert np.abs(new.avg - fld.avg).max() < 1e-14


def jac_pair(A, S):
    # |A| is characterized by: same invariant subspaces (commutes with A),
    # S^2 = A^2, and S positive semidefinite in the eigenbasis
    assert np.abs(A @ A - S @ S).max() < 1e-12
    assert np.abs(A @ S - S @ A).max() < 1e-12
    eig = np.linalg.eigvals(S)
    assert np.abs(eig.imag).max() < 1e-10
    assert eig.real.min() > -1e-10


def test_abs_jacobian_characterization():
    w = np.array([1.2, 0.37, -0.45, 0.8])
    jac_pair(jac_x(w, GAS), abs_jac_x(w, GAS))
    jac_pair(jac_y(w, GAS), abs_jac_y(w, GAS))
    # eigenvalues of the primitive x-jacobian: u, u, u +- c
    c = np.sqrt(1.4 * w[3] / w[0])
    lam = np.sort(np.linalg.eigvals(jac_x(w, GAS)).real)
    ref = np.sort([w[1], w[1], w[1] - c, w[1] + c])
    assert np.abs(lam - ref).max() < 1e-12


def test_advection_reduction_is_exact_on_quadratics():
    """Constant u, v, p and quadratic rho: RHS = -u . grad rho exactly."""
    u0, v0, p0 = 0.3, 0.2, 1.0

    def q(x, y):
        return 1.5 + 0.2 * x + 0.3 * y + 0.1 * x * x

    def qx(x, y):
        return 0.2 + 0.2 * x

    def qy(x, y):
        return 0.3 + 0.0 * x

    def w(x, y):
        out = np.empty(np.broadcast_shapes(np.shape(x), np.shape(y)) + (4,))
        out[..., 0] = q(x, y)
        out[..., 1] = u0
        out[..., 2] = v0
        out[..., 3] = p0
        return out

    fld = sample_field(w, 8)
    prhs = point_rhs(fld, GAS)
    mesh = fld.mesh
    # periodic wrap corrupts the seam cells; check the interior only
    sl = (slice(2, 6), slice(2, 6))
    for name, xy in (
        ("vert", mesh.vertex_xy()),
        ("evert", mesh.evert_xy()),
        ("ehorz", mesh.ehorz_xy()),
    ):
        x, y = xy
        ref = -(u0 * qx(x, y) + v0 * qy(x, y))
        got = prhs[name]
        assert np.abs(got[sl + (0,)] - ref[sl]).max() < 1e-12, name
        assert np.abs(got[sl + (slice(1, None),)]).max() < 1e-12, name
    # average rates match the exact cell average of the flux divergence
    arhs = average_rhs(fld.point_arrays(), GAS, mesh.h)
    xc, yc = mesh.center_xy()
    ref_mass = -(u0 * qx(xc, yc) + v0 * qy(xc, yc))
    assert np.abs(arhs[sl + (0,)] - ref_mass[sl]).max() < 1e-12
    assert np.abs(arhs[sl + (1,)] - u0 * ref_mass[sl]).max() < 1e-12


def test_average_rhs_sums_to_zero():
    fld = smooth_field(nx=8)
    arhs = average_rhs(fld.point_arrays(), GAS, fld.mesh.h)
    total = arhs.sum(axis=(0, 1))
    assert np.abs(total).max() < 1e-12 * np.abs(fld.avg).sum(axis=(0, 1)).max()


def test_ssprk3_conserves_averages():
    fld = smooth_field(nx=8)
    dt = stable_tau(fld, cfl=0.2)
    new = ssprk3_step(fld, GAS, dt)
    drift = np.abs(new.avg.sum(axis=(0, 1)) - fld.avg.sum(axis=(0, 1)))
    assert drift.max() < 1e-12 * np.abs(fld.avg).sum(axis=(0, 1)).max()
    assert new.time == pytest.approx(fld.time + dt)


# ---------------------------------------------------------------------------
# linearization vs the Fourier generator symbol

BASE = np.array([1.0, 0.4 * np.cos(np.radians(25.0)), 0.4 * np.sin(np.radians(25.0)), 1.0])


def cons_jacobian(w):
    J = np.empty((4, 4))
    for k in range(4):
        d = np.zeros(4)
        d[k] = 1.0
        J[:, k] = np.imag(prim_to_cons(w + 1e-100j * d, GAS)) / 1e-100
    return J


def mode_state(mesh, a, kx, ky, eps, phase):
    """base + eps * a * cos(k.x + phase) at all DOFs, averages to O(eps)."""
    fld = DofField.zeros(mesh)
    for name, xy in (
        ("vert", mesh.vertex_xy()),
        ("evert", mesh.evert_xy()),
        ("ehorz", mesh.ehorz_xy()),
    ):
        x, y = xy
        getattr(fld, name)[:] = BASE + eps * a * np.cos(kx * x + ky * y + phase)[..., None]
    sigma = np.sinc(kx * mesh.h / (2 * np.pi)) * np.sinc(ky * mesh.h / (2 * np.pi))
    xc, yc = mesh.center_xy()
    J = cons_jacobian(BASE)
    fld.avg[:] = prim_to_cons(BASE, GAS) + eps * sigma * np.cos(
        kx * xc + ky * yc + phase
    )[..., None] * (J @ a)
    return fld


def linearized_evert_rate(mesh, a, kx, ky, phase):
    """d/d eps of the evert RHS at eps = 0 by Richardson-extrapolated FD."""
    out = {}
    for eps in (1e-2, 5e-3, 2.5e-3):
        plus = point_rhs(mode_state(mesh, a, kx, ky, eps, phase), GAS)["evert"]
        minus = point_rhs(mode_state(mesh, a, kx, ky, -eps, phase), GAS)["evert"]
        out[eps] = (plus - minus) / (2 * eps)
    d1, d2, d4 = out[1e-2], out[5e-3], out[2.5e-3]
    r1 = (4.0 * d2 - d1) / 3.0
    r2 = (4.0 * d4 - d2) / 3.0
    return (16.0 * r2 - r1) / 15.0


def test_edge_rhs_matches_generator_symbol():
    mesh = Mesh(8, 8, 1.0, 1.0)
    kx, ky = 2 * np.pi * 1, 2 * np.pi * 2
    xi, eta = kx * mesh.h, ky * mesh.h
    rng = np.random.default_rng(2)
    a = rng.standard_normal(4)
    d_cos = linearized_evert_rate(mesh, a, kx, ky, 0.0)
    d_sin = linearized_evert_rate(mesh, a, kx, ky, -np.pi / 2.0)
    got = d_cos + 1j * d_sin
    M = semidiscrete_symbol(xi, eta, background=tuple(BASE), gamma=1.4)
    x, y = mesh.evert_xy()
    ref = np.exp(1j * (kx * x + ky * y))[..., None] * (M @ a) / mesh.h
    scale = np.abs(ref).max()
    assert np.abs(got - ref).max() < 1e-12 * scale


# ---------------------------------------------------------------------------
# SSPRK3 combinatorics on an exactly linear configuration

def advective_state(rho_dofs):
    """Field with constant (u, v, p) and the given rho DOFs; on this manifold
    the full semi-discrete map is linear in rho (the density rides the
    constant velocity as a passive eigenmode of the upwind split)."""
    u0, v0, p0 = 0.3, 0.2, 1.0
    mesh = Mesh(8, 8, 1.0, 1.0)
    fld = DofField.zeros(mesh)
    vert, evert, ehorz, m = rho_dofs
    for name, rho in (("vert", vert), ("evert", evert), ("ehorz", ehorz)):
        arr = getattr(fld, name)
        arr[..., 0] = rho
        arr[..., 1] = u0
        arr[..., 2] = v0
        arr[..., 3] = p0
    ke = 0.5 * (u0 * u0 + v0 * v0)
    fld.avg[..., 0] = m
    fld.avg[..., 1] = u0 * m
    fld.avg[..., 2] = v0 * m
    fld.avg[..., 3] = p0 / 0.4 + ke * m
    return fld, (u0, v0, ke)


def rho_rates(rho_dofs):
    fld, (u0, v0, ke) = advective_state(rho_dofs)
    prhs = point_rhs(fld, GAS)
    arhs = average_rhs(fld.point_arrays(), GAS, fld.mesh.h)
    return (
        prhs["vert"][..., 0],
        prhs["evert"][..., 0],
        prhs["ehorz"][..., 0],
        arhs[..., 0],
    )


def test_ssprk3_is_phi3_of_the_linear_generator():
    rng = np.random.default_rng(7)
    x = np.linspace(0, 1, 8, endpoint=False)
    base = 2.0 + 0.5 * np.cos(2 * np.pi * x)[:, None] * np.sin(
        2 * np.pi * (x + 0.1)
    )[None, :] + 0.1 * rng.random((8, 8))
    d0 = (base, np.roll(base, 3, axis=0), np.roll(base, 2, axis=1), base + 0.05)

    # powers of the generator via linearity: M(c + v) = M v for constant c
    def apply_M(vec):
        scale = 0.05 * min(arr.min() for arr in d0) / max(np.abs(v).max() for v in vec)
        shifted = tuple(c + scale * v for c, v in zip(d0, vec))
        r_shift = rho_rates(shifted)
        r_base = rho_rates(d0)
        return tuple((a - b) / scale for a, b in zip(r_shift, r_base))

    k1 = rho_rates(d0)
    k2 = apply_M(k1)
    k3 = apply_M(k2)
    dt = 0.3 * (1.0 / 8.0) / (0.3 + np.sqrt(1.4))
    fld, _ = advective_state(d0)
    new = ssprk3_step(fld, GAS, dt)
    got = (
        new.vert[..., 0],
        new.evert[..., 0],
        new.ehorz[..., 0],
        new.avg[..., 0],
    )
    for g, u, m1, m2, m3 in zip(got, d0, k1, k2, k3):
        ref = u + dt * m1 + dt**2 / 2.0 * m2 + dt**3 / 6.0 * m3
        assert np.abs(g - ref).max() < 1e-11
