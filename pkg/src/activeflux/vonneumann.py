"""Fourier symbol calculus for the vertical-edge point operator.

Nondimensional wavenumbers xi = k_x h, eta = k_y h and acoustic CFL
nu = c0 dt / h. Phase arrays collect e^{i k . (node - P)} over a cell's 3x3
nodes relative to the edge midpoint P, with the center slot replaced by the
center-node Fourier factor C_h (the symbol of the Simpson center inversion
applied to a sampled mode). Contracting the acoustic stencils against the
phase arrays yields the one-step pressure gain of a single acoustic branch;
the collected closed form of the same scalar is kept as an independent
transcription for cross-checking.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .stencils import MATRIX_INDEX, stencil_matrices

_PP = MATRIX_INDEX["pp"]
_UP = MATRIX_INDEX["up"]
_VP = MATRIX_INDEX["vp"]

# background of the mixed-packet experiment; default for sweeps
DEFAULT_BACKGROUND = (1.0, 0.4 * np.cos(np.radians(25.0)), 0.4 * np.sin(np.radians(25.0)), 1.0)
DEFAULT_GAMMA = 1.4

SWEEP_KH = (0.25, 0.5, 0.75, 1.0)
SWEEP_NU = (0.25, 0.5)
SWEEP_THETA_DEG = tuple(range(0, 360, 5))


@dataclass(frozen=True)
class WaveConfig:
    """One Fourier sample: wavenumbers, CFL, acoustic branch, background."""

    xi: float
    eta: float
    nu: float
    s: int = 1
    background: tuple = DEFAULT_BACKGROUND
    gamma: float = DEFAULT_GAMMA

    @property
    def kappa(self):
        return float(np.hypot(self.xi, self.eta))

    @property
    def c0(self):
        rho0, _, _, p0 = self.background
        return float(np.sqrt(self.gamma * p0 / rho0))

    @property
    def foot_shift(self):
        """Foot displacement (dt * velocity / h) in units of h."""
        _, u0, v0, _ = self.background
        scale = self.nu / self.c0
        return (scale * u0, scale * v0)


@dataclass(frozen=True)
class GainResult:
    gain: complex
    exact: complex
    error: float

    @property
    def amplification(self):
        return abs(self.gain)


def _half_sinc(x):
    """sin(x/2) / (x/2), = 1 at x = 0."""
    return np.sinc(x / (2.0 * np.pi))


def center_fourier_factor(xi, eta, ox, oy):
    """Symbol of the Simpson center inversion for a cell at offset (ox, oy).

    (ox, oy) is the cell center relative to the reference point P in units
    of h. The average of the mode over the cell is sigma * e^{i k . x_c}.
    """
    sigma = _half_sinc(xi) * _half_sinc(eta)
    phase_c = np.exp(1j * (xi * ox + eta * oy))
    corners = sum(
        np.exp(1j * (xi * (ox + sx) + eta * (oy + sy)))
        for sx in (-0.5, 0.5)
        for sy in (-0.5, 0.5)
    )
    mids = sum(
        np.exp(1j * (xi * (ox + sx) + eta * (oy + sy)))
        for sx, sy in ((-0.5, 0.0), (0.5, 0.0), (0.0, -0.5), (0.0, 0.5))
    )
    return 2.25 * (sigma * phase_c - corners / 36.0 - mids / 9.0)


def phase_array(xi, eta, ox, oy):
    """3x3 array of node phases for the cell at center offset (ox, oy).

    Rows index the x-direction node (matching the stencil convention); the
    center slot holds the center-node factor.
    """
    phi = np.empty((3, 3), dtype=np.complex128)
    for a in range(3):
        for b in range(3):
            dx = ox + 0.5 * (a - 1)
            dy = oy + 0.5 * (b - 1)
            phi[a, b] = np.exp(1j * (xi * dx + eta * dy))
    phi[1, 1] = center_fourier_factor(xi, eta, ox, oy)
    return phi


def phase_arrays(xi, eta):
    """(right-cell, left-cell) phase arrays for a vertical-edge midpoint."""
    return phase_array(xi, eta, 0.5, 0.0), phase_array(xi, eta, -0.5, 0.0)


def acoustic_pressure_gain_contraction(cfg):
    """Pressure gain of one acoustic branch from the stencil contraction.

    The mode's velocity amplitudes are s k^ / Z0 per unit pressure; the Z0
    factors cancel against the impedance weighting of the contraction.
    """
    kappa = cfg.kappa
    if kappa <= 0.0:
        raise ValueError("acoustic branch needs kappa > 0")
    khx, khy = cfg.xi / kappa, cfg.eta / kappa
    phi_r, phi_l = phase_arrays(cfg.xi, cfg.eta)
    g = 0.0 + 0.0j
    for geometry, phi in (("edge_v_right", phi_r), ("edge_v_left", phi_l)):
        mats = stencil_matrices(geometry, cfg.nu)
        g += (mats[_PP] * phi).sum()
        g += cfg.s * khx * (mats[_UP] * phi).sum()
        g += cfg.s * khy * (mats[_VP] * phi).sum()
    return complex(g)


def _collected_coefficients(nu, sigma):
    """Closed-form polynomial coefficients of the collected pressure gain."""
    p0 = -(nu - 1.0) * (4.0 * nu**3 - 4.0 * nu**2 - 3.0 * nu + 1.0)
    p_x = -nu * (2.0 * nu - 1.0) * (2.0 * nu**2 - nu - 2.0) / 2.0
    p_sig = 1.5 * nu * sigma * (4.0 * nu**3 - 6.0 * nu**2 - 3.0 * nu + 3.0)
    p_y = nu * (4.0 * nu**3 - 10.0 * nu**2 + 9.0 * nu - 1.0) / 4.0
    p_xy = nu * (4.0 * nu**3 - 2.0 * nu**2 + nu - 1.0) / 8.0
    p_hy = -nu * (4.0 * nu**3 - 6.0 * nu**2 - nu + 1.0) / 2.0
    u_xy = nu * (9.0 * nu**3 - 4.0 * nu**2 + 3.0 * nu - 3.0) / 24.0
    u_x = -nu * (9.0 * nu**3 - 8.0 * nu**2 - 9.0 * nu + 6.0) / 6.0
    u_hy = -nu * (3.0 * nu**3 - 4.0 * nu**2 - nu + 1.0) / 2.0
    u_sig = 1.5 * nu * sigma * (3.0 * nu**3 - 4.0 * nu**2 - 3.0 * nu + 3.0)
    v_xy = nu**2 * (4.0 * nu - 3.0) / 12.0
    v_hy = -(nu**2) * (2.0 * nu - 3.0) / 3.0
    v_y = nu * (4.0 * nu**2 - 9.0 * nu + 6.0) / 6.0
    return {
        "p0": p0, "p_x": p_x, "p_sig": p_sig, "p_y": p_y, "p_xy": p_xy,
        "p_hy": p_hy, "u_xy": u_xy, "u_x": u_x, "u_hy": u_hy, "u_sig": u_sig,
        "v_xy": v_xy, "v_hy": v_hy, "v_y": v_y,
    }


def acoustic_pressure_gain_collected(cfg):
    """The same branch gain in collected trigonometric form,
    g = P - i s (k^_x U + k^_y V)."""
    kappa = cfg.kappa
    if kappa <= 0.0:
        raise ValueError("acoustic branch needs kappa > 0")
    khx, khy = cfg.xi / kappa, cfg.eta / kappa
    xi, eta, nu = cfg.xi, cfg.eta, cfg.nu
    sigma = _half_sinc(xi) * _half_sinc(eta)
    c = _collected_coefficients(nu, sigma)
    cos_xi, cos_hxi = np.cos(xi), np.cos(0.5 * xi)
    sin_xi, sin_hxi = np.sin(xi), np.sin(0.5 * xi)
    cos_heta, sin_heta = np.cos(0.5 * eta), np.sin(0.5 * eta)
    press = (
        c["p0"]
        + 2.0 * c["p_x"] * cos_xi
        + 2.0 * c["p_sig"] * cos_hxi
        + 2.0 * c["p_y"] * cos_heta
        + 4.0 * c["p_xy"] * cos_xi * cos_heta
        + 4.0 * c["p_hy"] * cos_hxi * cos_heta
    )
    uu = (
        4.0 * c["u_xy"] * sin_xi * cos_heta
        + 2.0 * c["u_x"] * sin_xi
        + 4.0 * c["u_hy"] * sin_hxi * cos_heta
        + 2.0 * c["u_sig"] * sin_hxi
    )
    vv = (
        4.0 * c["v_xy"] * cos_xi * sin_heta
        + 4.0 * c["v_hy"] * cos_hxi * sin_heta
        + 2.0 * c["v_y"] * sin_heta
    )
    return complex(press - 1j * cfg.s * (khx * uu + khy * vv))


def exact_gains(cfg):
    """(frozen-frame acoustic gain, convected gain) of the branch."""
    acoustic_phase = cfg.s * cfg.nu * cfg.kappa
    dx, dy = cfg.foot_shift
    advect_phase = cfg.xi * dx + cfg.eta * dy
    return (
        complex(np.exp(-1j * acoustic_phase)),
        complex(np.exp(-1j * (advect_phase + acoustic_phase))),
    )


def advection_symbol(xi, eta, dx, dy):
    """Symbol of the discrete footpoint operator for a foot shift (dx, dy).

    Applies the frozen-velocity footpoint (exact for constant velocity) and
    the global Q2 evaluation to a sampled Fourier mode; the returned complex
    number is the ratio (value at foot) / (value at P) for the vertical-edge
    lattice around P. Requires |dx|, |dy| < 1 (foot within the adjacent cell
    ring, i.e. advective CFL below 1).
    """
    if abs(dx) >= 1.0 or abs(dy) >= 1.0:
        raise ValueError("foot shift must stay within one cell")
    xf, yf = -dx, -dy
    ic = int(np.floor(xf))
    jc = int(np.floor(yf + 0.5))
    xi_loc = 2.0 * (xf - ic) - 1.0
    eta_loc = 2.0 * (yf - jc + 0.5) - 1.0
    wx = np.array([0.5 * xi_loc * (xi_loc - 1.0), 1.0 - xi_loc**2, 0.5 * xi_loc * (xi_loc + 1.0)])
    wy = np.array([0.5 * eta_loc * (eta_loc - 1.0), 1.0 - eta_loc**2, 0.5 * eta_loc * (eta_loc + 1.0)])
    phi = phase_array(xi, eta, ic + 0.5, float(jc))
    return complex(np.einsum("a,b,ab->", wx, wy, phi))


def full_gain(cfg, adv_symbol, scheme="rb"):
    """One-step pressure gain of the composed point update.

    Additive scheme: A_adv + g_ac - 1. Transported-increment scheme: the
    composition A_adv * g_ac (the increment field is carried to the foot).
    """
    g_ac = acoustic_pressure_gain_contraction(cfg)
    if scheme == "rb":
        return adv_symbol + g_ac - 1.0
    if scheme == "rb-tai":
        return adv_symbol * g_ac
    raise ValueError(f"unknown scheme {scheme!r}")


def scheme_gain(cfg, scheme):
    """Full convected gain of one scheme (or the exact convected gain)."""
    if scheme == "exact":
        return exact_gains(cfg)[1]
    dx, dy = cfg.foot_shift
    adv = advection_symbol(cfg.xi, cfg.eta, dx, dy)
    return full_gain(cfg, adv, scheme)


# ---------------------------------------------------------------------------
# semi-discrete generator symbol

def derivative_symbols(xi, eta):
    """(D_x from left cell, D_x from right cell, tangential D_y) at the edge
    node, in units of 1/h."""
    c_r = center_fourier_factor(xi, eta, 0.5, 0.0)
    c_l = center_fourier_factor(xi, eta, -0.5, 0.0)
    dx_r = 2.0 * (-1.5 + 2.0 * c_r - 0.5 * np.exp(1j * xi))
    dx_l = 2.0 * (0.5 * np.exp(-1j * xi) - 2.0 * c_l + 1.5)
    d_y = np.exp(0.5j * eta) - np.exp(-0.5j * eta)
    return dx_l, dx_r, d_y


def semidiscrete_symbol(xi, eta, background=DEFAULT_BACKGROUND, gamma=DEFAULT_GAMMA):
    """4x4 generator of the edge-node semi-discrete update on a mode,
    M = -[(A_x)+ D_xL + (A_x)- D_xR + A_y D_y], in units of 1/h."""
    from .euler import GasModel
    from .semidiscrete import abs_jac_x, jac_x, jac_y

    gas = GasModel(gamma)
    w = np.asarray(background, dtype=np.float64)
    ax = jac_x(w, gas)
    sx = abs_jac_x(w, gas)
    ay = jac_y(w, gas)
    dx_l, dx_r, d_y = derivative_symbols(xi, eta)
    return -(0.5 * (ax + sx) * dx_l + 0.5 * (ax - sx) * dx_r + ay * d_y)


# ---------------------------------------------------------------------------
# sweeps

SWEEP_HEADER = ("scheme", "nu", "Kh", "theta_deg", "re_g", "im_g", "abs_g", "error")


def sweep_rows(
    schemes=("rb", "rb-tai", "exact"),
    kh_values=SWEEP_KH,
    nu_values=SWEEP_NU,
    theta_deg=SWEEP_THETA_DEG,
    s=1,
    background=DEFAULT_BACKGROUND,
    gamma=DEFAULT_GAMMA,
):
    """Angle sweeps of the one-step gains; returns rows per SWEEP_HEADER."""
    rows = []
    for scheme in schemes:
        for nu in nu_values:
            for kh in kh_values:
                for theta in theta_deg:
                    rad = np.radians(theta)
                    cfg = WaveConfig(
                        xi=kh * np.cos(rad),
                        eta=kh * np.sin(rad),
                        nu=nu,
                        s=s,
                        background=background,
                        gamma=gamma,
                    )
                    g = scheme_gain(cfg, scheme)
                    exact = exact_gains(cfg)[1]
                    rows.append(
                        (
                            scheme,
                            nu,
                            kh,
                            theta,
                            g.real,
                            g.imag,
                            abs(g),
                            abs(g - exact),
                        )
                    )
    return rows


def sweep_csv(**kwargs):
    """The sweep as deterministic CSV text (17 significant digits)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for scheme, nu, kh, theta, re_g, im_g, abs_g, err in sweep_rows(**kwargs):
        writer.writerow(
            [
                scheme,
                format(nu, ".17g"),
                format(kh, ".17g"),
                format(theta, ".17g"),
                format(re_g, ".17g"),
                format(im_g, ".17g"),
                format(abs_g, ".17g"),
                format(err, ".17g"),
            ]
        )
    return buf.getvalue()
