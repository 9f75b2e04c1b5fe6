"""Derive the frozen-acoustic nodal stencils for every node geometry.

The point updates need the exact evolution operator of the linear acoustic
system

    du/dt = -c dpi/dx,   dv/dt = -c dpi/dy,   dpi/dt = -c (du/dx + dv/dy)

applied to the global piecewise-biquadratic (Q2) reconstruction and evaluated
at a node P after time tau.  Writing r = c*tau and descending from the 3D
Kirchhoff formula (data constant in the third coordinate), the solution at P
is a combination of weighted integrals over the sonic disk of radius r:

    J[g] = (1/(2 pi r)) \\int_{|z|<r} g(P+z) / sqrt(r^2 - |z|^2) dz

    pi(P,tau) = J[pi0 + z.grad pi0] - r J[div V0]
    V(P,tau)  = V0(P) - \\int_0^r { J_s[grad pi0 + (z.grad) grad pi0]
                                   - s J_s[grad div V0] } ds  + D

where J_s uses disk radius s and D collects the distributional part of
grad(div V0): the reconstruction is only C^0 across grid lines, so div V0
jumps there and its gradient carries a line delta.  Only the grid lines
passing through P itself intersect the shrinking disks, giving

    D = (1/(2 pi)) \\int_0^r sum_rays n_ray
        \\int_0^s [[div V0]](rho) / sqrt(s^2 - rho^2) drho ds.

Because the disk of radius r <= h/2 never crosses any grid line except those
through P, the integrals split into wedges (half planes for edge midpoints,
quadrants for vertices, the full disk for cell centers), each covered by a
single cell's polynomial.  On polynomial data every integral reduces to
closed-form radial/angular moments, so the whole operator collapses to 3x3
nodal stencil matrices with entries polynomial in nu = c*tau/h of degree
<= 4.

Gauge freedom.  Nodes on the grid lines through P are shared by adjacent
cells and carry identical values, so the split of their total weight between
the per-cell matrices is a convention; only the assembled sum is physical.
Two conventions appear below:

  * canonical: ray jumps reduced by continuity to the normal derivative of
    the normal velocity component.  This makes every coupling matrix exactly
    symmetric between the two roles it plays in the contraction (the u<-v
    matrix equals the v<-u matrix, and so on), which is the form used for
    the vertex and center geometries.
  * interface: ray jumps keep the full [[div V]] split per cell, and the
    normal-momentum/pressure coupling additionally carries the interface
    term +-(1/2) M[pi] with M the Chebyshev-weighted mean of the pressure
    trace along the shared edge over the sonic span (the 2D descendant of
    the d'Alembert (pi_L - pi_R)/2 interface term).  This is the standard
    printed form of the half-plane edge stencils; the extra pieces are
    supported on shared rows and cancel identically in the assembled sum.

The script verifies: the terminating Taylor series exp(nu C) on shared
polynomial data, the mirror/transpose symmetries, the gauge equivalence of
the two conventions, and the assembled symmetry of every coupling.  It then
freezes the tables into src/activeflux/_stencil_data.py.

Run from the repo root:  python3 tools/derive_stencils.py
"""

from __future__ import annotations

import sys
from collections import defaultdict
from pathlib import Path

import sympy as sp

NU = sp.Symbol("nu", positive=True)
X, Y = sp.symbols("x y", real=True)

NODES = (-1, 0, 1)


def lag(a, s):
    """Quadratic Lagrange basis on [-1, 1] with nodes -1, 0, +1."""
    return {-1: s * (s - 1) / 2, 0: 1 - s**2, 1: s * (s + 1) / 2}[a]


# radial moments  I_k = int_0^1 t^(k+1) (1-t^2)^(-1/2) dt
# ray moments     Q_k = int_0^1 t^k     (1-t^2)^(-1/2) dt
_t = sp.Symbol("t", positive=True)
I_MOM = [sp.integrate(_t ** (k + 1) / sp.sqrt(1 - _t**2), (_t, 0, 1)) for k in range(7)]
Q_MOM = [sp.integrate(_t**k / sp.sqrt(1 - _t**2), (_t, 0, 1)) for k in range(7)]

_ANG_CACHE: dict = {}


def ang_mom(m, n, th1, th2):
    """int_{th1}^{th2} cos^m(theta) sin^n(theta) dtheta."""
    key = (m, n, th1, th2)
    if key not in _ANG_CACHE:
        th = sp.Symbol("theta")
        _ANG_CACHE[key] = sp.integrate(sp.cos(th) ** m * sp.sin(th) ** n, (th, th1, th2))
    return _ANG_CACHE[key]


def wedge_J(expr, th1, th2, r):
    """J over one wedge: (1/(2 pi r)) iint expr(z) / sqrt(r^2-|z|^2) dz.

    expr must be polynomial in X, Y; the result is polynomial in r.
    """
    expr = sp.expand(expr)
    if expr == 0:
        return sp.Integer(0)
    out = sp.Integer(0)
    poly = sp.Poly(expr, X, Y)
    for (m, n), c in poly.terms():
        out += c * I_MOM[m + n] * r ** (m + n) * ang_mom(m, n, th1, th2)
    return out / (2 * sp.pi)


class Cell:
    """One cell adjacent to the target node P (origin), with its wedge."""

    def __init__(self, name, x0, y0, th1, th2):
        # the cell occupies [x0, x0+1] x [y0, y0+1] in units of h, P at origin
        self.name = name
        self.x0, self.y0 = sp.sympify(x0), sp.sympify(y0)
        self.xi = 2 * (X - self.x0) - 1  # cell-local coordinates in [-1, 1]
        self.eta = 2 * (Y - self.y0) - 1
        self.th1, self.th2 = th1, th2
        self.syms = {
            f: [[sp.Symbol(f"{f}_{name}_{i}{j}") for j in range(3)] for i in range(3)]
            for f in ("u", "v", "q")  # q = acoustic pressure variable
        }
        # node (i, j) of the stencil matrix sits at local coords (NODES[i], NODES[j])
        self.data = {
            f: sp.expand(
                sum(
                    self.syms[f][i][j] * lag(NODES[i], self.xi) * lag(NODES[j], self.eta)
                    for i in range(3)
                    for j in range(3)
                )
            )
            for f in ("u", "v", "q")
        }
        # index of the node of this cell that coincides with P
        self.p_node = (int(-2 * self.x0), int(-2 * self.y0))

    def node_pos(self, i, j):
        """Global coordinates of node (i, j), P at origin."""
        return (self.x0 + sp.Rational(NODES[i] + 1, 2), self.y0 + sp.Rational(NODES[j] + 1, 2))


def evolve(cells, rays, delta_mode):
    """Exact acoustic evolution at P as linear forms in the nodal symbols.

    rays: list of (normal_axis, plus_cell, minus_cell, along_axis, sign)
    describing the grid-line rays through P that carry div-V jumps.
    delta_mode: "canonical" reduces each ray jump by continuity to the
    normal derivative of the normal velocity component; "full" keeps the
    complete [[div V]] split per cell.  Both give the same assembled
    operator on continuous data.
    Returns (u_out, v_out, q_out).
    """
    coverage = sum((c.th2 - c.th1) for c in cells)
    assert sp.simplify(coverage - 2 * sp.pi) == 0

    q_out = sp.Integer(0)
    for c in cells:
        q0 = c.data["q"]
        div = sp.diff(c.data["u"], X) + sp.diff(c.data["v"], Y)
        q_out += wedge_J(q0 + X * sp.diff(q0, X) + Y * sp.diff(q0, Y), c.th1, c.th2, NU)
        q_out -= NU * wedge_J(div, c.th1, c.th2, NU)

    s = sp.Symbol("s", positive=True)  # disk radius inside the time integral
    u_out = sp.Integer(0)
    v_out = sp.Integer(0)
    for c in cells:
        share = (c.th2 - c.th1) / (2 * sp.pi)
        i, j = c.p_node
        u_out += share * c.syms["u"][i][j]
        v_out += share * c.syms["v"][i][j]
        q0 = c.data["q"]
        div = sp.diff(c.data["u"], X) + sp.diff(c.data["v"], Y)
        for comp, var in ((0, X), (1, Y)):
            g = sp.diff(q0, var)
            integrand = wedge_J(
                g + X * sp.diff(g, X) + Y * sp.diff(g, Y), c.th1, c.th2, s
            ) - s * wedge_J(sp.diff(div, var), c.th1, c.th2, s)
            term = -sp.integrate(sp.expand(integrand), (s, 0, NU))
            if comp == 0:
                u_out += term
            else:
                v_out += term

    # line-delta corrections from the div-V jump across the rays through P
    rho = sp.Symbol("rho_r", positive=True)
    for normal_axis, cplus, cminus, along_axis, sign in rays:
        if delta_mode == "full":
            jp = sp.diff(cplus.data["u"], X) + sp.diff(cplus.data["v"], Y)
            jm = sp.diff(cminus.data["u"], X) + sp.diff(cminus.data["v"], Y)
        elif normal_axis == "x":
            jp, jm = sp.diff(cplus.data["u"], X), sp.diff(cminus.data["u"], X)
        else:
            jp, jm = sp.diff(cplus.data["v"], Y), sp.diff(cminus.data["v"], Y)
        sub = {X: sign * rho, Y: 0} if along_axis == "x" else {X: 0, Y: sign * rho}
        jump = sp.expand((jp - jm).subs(sub))
        if jump == 0:
            continue
        corr = sp.Integer(0)
        for (k,), ck in sp.Poly(jump, rho).terms():
            # (1/2pi) int_0^nu Q_k s^k ds
            corr += ck * Q_MOM[k] * NU ** (k + 1) / ((k + 1) * 2 * sp.pi)
        if normal_axis == "x":
            u_out += corr
        else:
            v_out += corr

    return sp.expand(u_out), sp.expand(v_out), sp.expand(q_out)


def extract_matrices(cells, outs):
    """Split the linear forms into per-cell 3x3 coupling matrices (all nine
    role combinations, so the gauge checks can compare e.g. u<-v to v<-u)."""
    u_out, v_out, q_out = outs
    result = {}
    for c in cells:
        mats = {}
        for out_name, out in (("u", u_out), ("v", v_out), ("p", q_out)):
            for f, fs in (("u", "u"), ("v", "v"), ("p", "q")):
                m = [[sp.expand(out.coeff(c.syms[fs][i][j])) for j in range(3)]
                     for i in range(3)]
                mats[out_name + f] = sp.Matrix(m)
        result[c.name] = mats
    return result


def assembled(cells, mats, key):
    """Total weight per distinct node position for one coupling."""
    tot = defaultdict(lambda: sp.Integer(0))
    for c in cells:
        m = mats[c.name][key]
        for i in range(3):
            for j in range(3):
                tot[c.node_pos(i, j)] += m[i, j]
    return tot


def check_assembled_equal(cells, mats_a, key_a, mats_b, key_b, label):
    ta = assembled(cells, mats_a, key_a)
    tb = assembled(cells, mats_b, key_b)
    for pos in set(ta) | set(tb):
        d = sp.expand(ta[pos] - tb[pos])
        assert d == 0, f"{label}: assembled mismatch at {pos}: {sp.simplify(d)}"


def taylor_reference(n_terms=6):
    """exp(nu*C) on a generic biquadratic, evaluated at P: the smooth-data
    oracle.  The series terminates because C lowers the polynomial degree."""
    g = {
        f: sum(
            sp.Symbol(f"g_{f}_{a}{b}") * X**a * Y**b for a in range(3) for b in range(3)
        )
        for f in ("u", "v", "q")
    }
    acc = [g["u"], g["v"], g["q"]]
    cur = list(acc)
    fact = 1
    for m in range(1, n_terms):
        cur = [
            -sp.diff(cur[2], X),
            -sp.diff(cur[2], Y),
            -(sp.diff(cur[0], X) + sp.diff(cur[1], Y)),
        ]
        fact *= m
        acc = [a + NU**m * c / fact for a, c in zip(acc, cur)]
    return g, [sp.expand(a.subs({X: 0, Y: 0})) for a in acc]


def check_taylor(cells, outs, label):
    """On shared-polynomial data the wedge sum must equal the Taylor series
    (all jumps vanish, so this exercises everything except the delta term)."""
    g, ref = taylor_reference()
    subs = {}
    for c in cells:
        for f in ("u", "v", "q"):
            for i in range(3):
                for j in range(3):
                    px, py = c.node_pos(i, j)
                    subs[c.syms[f][i][j]] = g[f].subs({X: px, Y: py})
    for got, want, name in zip(outs, ref, ("u", "v", "q")):
        diff = sp.expand(got.xreplace(subs) - want)
        assert diff == 0, f"{label}: Taylor mismatch in {name}: {sp.simplify(diff)}"
    print(f"  [ok] {label}: matches exp(nu C) on shared biquadratic data")


def edge_interface_gauge(mats, plus_name, minus_name, normal_axis):
    """Apply the interface term -+(1/2) M[pi] to the normal-momentum/pressure
    coupling of an edge pair.  M is the Chebyshev-weighted mean of the trace
    along the shared edge over the sonic span: nodal weights
    [nu^2/2, 1/2-nu^2, nu^2/2] on the shared row (or column)."""
    w = [NU**2 / 2, sp.Rational(1, 2) - NU**2, NU**2 / 2]
    key = "up" if normal_axis == "x" else "vp"
    for name, row_sign in ((plus_name, -1), (minus_name, 1)):
        m = mats[name][key].copy()
        if normal_axis == "x":
            r = 0 if name == plus_name else 2  # shared x-row of each cell
            for j in range(3):
                m[r, j] = sp.expand(m[r, j] + row_sign * w[j])
        else:
            cidx = 0 if name == plus_name else 2  # shared y-column
            for i in range(3):
                m[i, cidx] = sp.expand(m[i, cidx] + row_sign * w[i])
        mats[name][key] = m


def gauge_checks(cells, mats, label):
    """Assembled symmetry of every coupling: the single stored matrix serves
    both roles in the contraction, which is legitimate iff the assembled
    totals of the two roles agree."""
    for a, b in (("uv", "vu"), ("up", "pu"), ("vp", "pv")):
        check_assembled_equal(cells, mats, a, mats, b, f"{label} {a}/{b}")
    print(f"  [ok] {label}: couplings assemble symmetrically")


def select_six(mats):
    """Keep the six stored matrices (couplings taken from the u/v rows)."""
    return {
        name: {
            "uu": m["uu"], "uv": m["uv"], "up": m["up"],
            "vv": m["vv"], "vp": m["vp"], "pp": m["pp"],
        }
        for name, m in mats.items()
    }


def derive_geometry(cells, rays, label, delta_mode):
    outs = evolve(cells, rays, delta_mode)
    check_taylor(cells, outs, label)
    mats = extract_matrices(cells, outs)
    return mats


def poly_coeffs(entry):
    """Ascending nu-coefficients [c0..c4] of a stencil entry."""
    entry = sp.expand(entry)
    if entry == 0:
        return [sp.Integer(0)] * 5
    p = sp.Poly(entry, NU)
    assert p.degree() <= 4, entry
    out = [sp.Integer(0)] * 5
    for (k,), c in p.terms():
        out[k] = c
    return out


def main():
    geoms = {}

    print("deriving vertical-edge half-plane stencils ...")
    right = Cell("R", 0, sp.Rational(-1, 2), -sp.pi / 2, sp.pi / 2)
    left = Cell("L", -1, sp.Rational(-1, 2), sp.pi / 2, 3 * sp.pi / 2)
    ve_cells = [right, left]
    ve_rays = [("x", right, left, "y", 1), ("x", right, left, "y", -1)]
    mats_v = derive_geometry(ve_cells, ve_rays, "vertical edge", "full")
    mats_v_can = derive_geometry(ve_cells, ve_rays, "vertical edge (canonical)", "canonical")
    for key in ("uu", "uv", "up", "vv", "vp", "pp", "vu", "pu", "pv"):
        check_assembled_equal(ve_cells, mats_v, key, mats_v_can, key,
                              f"vertical-edge gauge equivalence {key}")
    print("  [ok] full-jump and canonical gauges assemble identically")
    edge_interface_gauge(mats_v, "R", "L", "x")
    gauge_checks(ve_cells, mats_v, "vertical edge")
    six_v = select_six(mats_v)
    geoms["edge_v_right"] = six_v["R"]
    geoms["edge_v_left"] = six_v["L"]

    # left cell is the x-mirror of the right cell (row flip, u-couplings odd)
    flip = lambda M: M[::-1, :]
    sgn_x = {"uu": 1, "uv": -1, "up": -1, "vv": 1, "vp": 1, "pp": 1}
    for key, s in sgn_x.items():
        d = sp.expand(geoms["edge_v_left"][key] - s * flip(geoms["edge_v_right"][key]))
        assert d == sp.zeros(3, 3), f"edge mirror failed: {key}"
    print("  [ok] left half plane is the x-mirror of the right half plane")

    print("deriving horizontal-edge half-plane stencils ...")
    top = Cell("T", sp.Rational(-1, 2), 0, 0, sp.pi)
    bot = Cell("B", sp.Rational(-1, 2), -1, sp.pi, 2 * sp.pi)
    he_cells = [top, bot]
    he_rays = [("y", top, bot, "x", 1), ("y", top, bot, "x", -1)]
    mats_h = derive_geometry(he_cells, he_rays, "horizontal edge", "full")
    edge_interface_gauge(mats_h, "T", "B", "y")
    gauge_checks(he_cells, mats_h, "horizontal edge")
    six_h = select_six(mats_h)
    for name in ("T", "B"):
        # here the ray deltas feed the normal momentum v, so the stored
        # velocity coupling is the v<-u role (u<-v is its gauge partner)
        six_h[name]["uv"] = mats_h[name]["vu"]
    geoms["edge_h_top"] = six_h["T"]
    geoms["edge_h_bottom"] = six_h["B"]

    # swapping x<->y and u<->v maps the right half plane onto the top one
    # with matrix indices transposed
    pairs = [("uu", "vv"), ("vv", "uu"), ("uv", "uv"), ("up", "vp"),
             ("vp", "up"), ("pp", "pp")]
    for kr, kt in pairs:
        d = sp.expand(geoms["edge_v_right"][kr].T - geoms["edge_h_top"][kt])
        assert d == sp.zeros(3, 3), f"transpose check failed: {kr}/{kt}"
    print("  [ok] horizontal edge is the x<->y transpose of the vertical edge")

    print("deriving vertex quadrant stencils ...")
    ne = Cell("NE", 0, 0, 0, sp.pi / 2)
    nw = Cell("NW", -1, 0, sp.pi / 2, sp.pi)
    sw = Cell("SW", -1, -1, sp.pi, 3 * sp.pi / 2)
    se = Cell("SE", 0, -1, 3 * sp.pi / 2, 2 * sp.pi)
    vx_cells = [ne, nw, sw, se]
    vx_rays = [
        ("y", ne, se, "x", 1),   # +x ray: div jump across y=0
        ("x", ne, nw, "y", 1),   # +y ray: div jump across x=0
        ("y", nw, sw, "x", -1),  # -x ray
        ("x", se, sw, "y", -1),  # -y ray
    ]
    mats_x = derive_geometry(vx_cells, vx_rays, "vertex", "canonical")
    mats_x_full = derive_geometry(vx_cells, vx_rays, "vertex (full)", "full")
    for key in ("uu", "uv", "up", "vv", "vp", "pp"):
        check_assembled_equal(vx_cells, mats_x, key, mats_x_full, key,
                              f"vertex gauge equivalence {key}")
    print("  [ok] full-jump and canonical gauges assemble identically")
    # canonical gauge: couplings are exactly symmetric per cell
    for c in vx_cells:
        for a, b in (("uv", "vu"), ("up", "pu"), ("vp", "pv")):
            d = sp.expand(mats_x[c.name][a] - mats_x[c.name][b])
            assert d == sp.zeros(3, 3), f"vertex {c.name} {a}/{b} not symmetric"
    print("  [ok] vertex couplings are symmetric per quadrant (canonical gauge)")
    six_x = select_six(mats_x)
    for k, v in six_x.items():
        geoms[f"vertex_{k.lower()}"] = v

    for key, s in sgn_x.items():  # NW is the x-mirror of NE
        d = sp.expand(geoms["vertex_nw"][key] - s * flip(geoms["vertex_ne"][key]))
        assert d == sp.zeros(3, 3), f"vertex mirror failed: {key}"
    sgn_y = {"uu": 1, "uv": -1, "up": 1, "vv": 1, "vp": -1, "pp": 1}
    flip_c = lambda M: M[:, ::-1]
    for key, s in sgn_y.items():  # SE is the y-mirror of NE
        d = sp.expand(geoms["vertex_se"][key] - s * flip_c(geoms["vertex_ne"][key]))
        assert d == sp.zeros(3, 3), f"vertex y-mirror failed: {key}"
    print("  [ok] quadrant mirror symmetries hold")

    print("deriving cell-center full-disk stencils ...")
    cen = Cell("C", sp.Rational(-1, 2), sp.Rational(-1, 2), 0, 2 * sp.pi)
    mats_c = derive_geometry([cen], [], "center", "canonical")
    for a, b in (("uv", "vu"), ("up", "pu"), ("vp", "pv")):
        d = sp.expand(mats_c["C"][a] - mats_c["C"][b])
        assert d == sp.zeros(3, 3), f"center {a}/{b} not symmetric"
    geoms["center"] = select_six(mats_c)["C"]

    keys = ("uu", "uv", "up", "vv", "vp", "pp")
    lines = [
        '"""Frozen acoustic stencil tables (generated by tools/derive_stencils.py).',
        "",
        "For each node geometry, STENCILS[name] has shape (6, 3, 3, 5): six",
        "coupling matrices (uu, uv, up, vv, vp, pp), 3x3 nodal entries, and",
        "ascending coefficients of the degree-4 polynomial in nu = c*tau/h.",
        "Matrix rows index the cell-local x node (-1, 0, +1), columns the",
        "local y node.  Do not edit by hand.",
        '"""',
        "",
        "import numpy as np",
        "",
        "MATRIX_KEYS = " + repr(keys),
        "",
        "STENCILS = {",
    ]
    for name, mats in geoms.items():
        lines.append(f'    "{name}": np.array([')
        for key in keys:
            lines.append(f"        [  # {key}")
            for i in range(3):
                row = []
                for j in range(3):
                    cs = poly_coeffs(mats[key][i, j])
                    row.append("[" + ", ".join(f"{float(c):.17e}" for c in cs) + "]")
                lines.append("            [" + ", ".join(row) + "],")
            lines.append("        ],")
        lines.append("    ]),")
    lines.append("}")
    lines.append("")

    out_path = Path(__file__).resolve().parents[1] / "src" / "activeflux" / "_stencil_data.py"
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(lines))
    print(f"wrote {out_path}")
    return geoms


if __name__ == "__main__":
    sys.setrecursionlimit(100000)
    main()
