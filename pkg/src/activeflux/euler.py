"""Euler state algebra: primitive/conservative conversions, fluxes, and the
linearized eigenmodes used by the wave-packet tests and Fourier analysis.

States are numpy arrays with the component axis last: primitive (rho, u, v, p)
or conservative (rho, rho*u, rho*v, E). All functions broadcast over leading
axes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

RHO, U, V, P = 0, 1, 2, 3  # primitive component indices
MX, MY, EN = 1, 2, 3       # conservative component indices


class InvalidStateError(ValueError):
    """Raised when a state has non-positive density or pressure/energy."""

    def __init__(self, message, where=None):
        if where is not None:
            message = f"{message} (first offending index: {where})"
        super().__init__(message)
        self.where = where


@dataclass(frozen=True)
class GasModel:
    gamma: float = 1.4

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ValueError(f"gamma must exceed 1, got {self.gamma}")


def _first_bad(mask):
    idx = np.argwhere(mask)
    return tuple(idx[0]) if idx.size else None


def _check_positive(arr, name, context):
    # .real: complex-step probes carry an infinitesimal imaginary part that
    # must not affect admissibility
    bad = ~(np.real(arr) > 0.0)
    if np.any(bad):
        raise InvalidStateError(f"non-positive {name} in {context}", _first_bad(bad))


def _as_state(w):
    w = np.asarray(w)
    if not np.iscomplexobj(w):
        w = w.astype(np.float64, copy=False)
    return w


def prim_to_cons(w, gas):
    """(rho, u, v, p) -> (rho, rho u, rho v, E) with E = p/(g-1) + rho|V|^2/2."""
    w = _as_state(w)
    _check_positive(w[..., RHO], "density", "prim_to_cons")
    _check_positive(w[..., P], "pressure", "prim_to_cons")
    out = np.empty_like(w)
    out[..., RHO] = w[..., RHO]
    out[..., MX] = w[..., RHO] * w[..., U]
    out[..., MY] = w[..., RHO] * w[..., V]
    out[..., EN] = w[..., P] / (gas.gamma - 1.0) + 0.5 * w[..., RHO] * (
        w[..., U] ** 2 + w[..., V] ** 2
    )
    return out


def cons_to_prim(cons, gas):
    """Exact algebraic inverse of prim_to_cons."""
    cons = _as_state(cons)
    _check_positive(cons[..., RHO], "density", "cons_to_prim")
    out = np.empty_like(cons)
    out[..., RHO] = cons[..., RHO]
    out[..., U] = cons[..., MX] / cons[..., RHO]
    out[..., V] = cons[..., MY] / cons[..., RHO]
    kinetic = 0.5 * (cons[..., MX] ** 2 + cons[..., MY] ** 2) / cons[..., RHO]
    out[..., P] = (gas.gamma - 1.0) * (cons[..., EN] - kinetic)
    _check_positive(out[..., P], "pressure", "cons_to_prim")
    return out


def sound_speed(w, gas):
    return np.sqrt(gas.gamma * w[..., P] / w[..., RHO])


def euler_flux_x(w, gas):
    """x-flux of the conservative variables, from a primitive state."""
    w = _as_state(w)
    rho, u, v, p = w[..., RHO], w[..., U], w[..., V], w[..., P]
    E = p / (gas.gamma - 1.0) + 0.5 * rho * (u**2 + v**2)
    out = np.empty_like(w)
    out[..., 0] = rho * u
    out[..., 1] = rho * u * u + p
    out[..., 2] = rho * u * v
    out[..., 3] = u * (E + p)
    return out


def euler_flux_y(w, gas):
    """y-flux of the conservative variables, from a primitive state."""
    w = _as_state(w)
    rho, u, v, p = w[..., RHO], w[..., U], w[..., V], w[..., P]
    E = p / (gas.gamma - 1.0) + 0.5 * rho * (u**2 + v**2)
    out = np.empty_like(w)
    out[..., 0] = rho * v
    out[..., 1] = rho * u * v
    out[..., 2] = rho * v * v + p
    out[..., 3] = v * (E + p)
    return out


# ---------------------------------------------------------------------------
# linearized eigenmodes about a uniform base state

MODE_KINDS = ("entropy", "shear", "acoustic+", "acoustic-")


@dataclass(frozen=True)
class LinearEigenmode:
    """One Fourier eigenmode of the Euler equations linearized about a
    uniform base state: kind in MODE_KINDS, wavevector k, amplitude eps."""

    kind: str
    kx: float
    ky: float
    eps: float

    def __post_init__(self):
        if self.kind not in MODE_KINDS:
            raise ValueError(f"unknown mode kind {self.kind!r}")
        if self.kind != "entropy" and self.kx == 0.0 and self.ky == 0.0:
            raise ValueError("shear/acoustic modes need a nonzero wavevector")

    @property
    def K(self):
        return np.hypot(self.kx, self.ky)

    def branch_sign(self):
        return {"acoustic+": 1.0, "acoustic-": -1.0}.get(self.kind, 0.0)


def eigenmode_amplitudes(mode, base, gas):
    """Primitive right-eigenvector amplitude 4-vector (rho', u', v', p')."""
    rho0, p0 = base[RHO], base[P]
    c0 = np.sqrt(gas.gamma * p0 / rho0)
    e = mode.eps
    if mode.kind == "entropy":
        return np.array([e, 0.0, 0.0, 0.0])
    khat_x, khat_y = mode.kx / mode.K, mode.ky / mode.K
    if mode.kind == "shear":
        return np.array([0.0, -e * khat_y, e * khat_x, 0.0])
    s = mode.branch_sign()
    return np.array([e / c0**2, s * e * khat_x / (rho0 * c0), s * e * khat_y / (rho0 * c0), e])


def eigenmode_perturbation(mode, base, gas, x, y, t=0.0):
    """Primitive perturbation field of one mode at time t.

    Under the linearization frozen at the base state each mode advects with
    phase omega = u0 kx + v0 ky (+ s c0 |k| for the acoustic branches).
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    omega = base[U] * mode.kx + base[V] * mode.ky
    if mode.kind.startswith("acoustic"):
        c0 = np.sqrt(gas.gamma * base[P] / base[RHO])
        omega = omega + mode.branch_sign() * c0 * mode.K
    phase = np.cos(mode.kx * x + mode.ky * y - omega * t)
    amp = eigenmode_amplitudes(mode, base, gas)
    return phase[..., None] * amp


def packet_field(modes, base, gas, x, y, t=0.0):
    """Superposition of linear modes on the uniform base, at time t."""
    shape = np.broadcast_shapes(np.shape(x), np.shape(y))
    w = np.broadcast_to(np.asarray(base, dtype=np.float64), shape + (4,)).copy()
    for mode in modes:
        w += eigenmode_perturbation(mode, base, gas, x, y, t)
    return w
