#!/usr/bin/env python3
"""Distill the Gaussian-pulse refinement runs into one small JSON.

Usage: analyze_pulse.py FINEST_DIR COARSER_DIR... OUT_JSON

Computes, per mesh: the radial asymmetry of the final pressure field and the
max-norm pressure error against the finest run (all stored point families of
a coarse mesh land on vertex nodes of the finest when the refinement factors
are even, which they are here: 400/200/100/50). Also reports least-squares
log-log slopes so the test side stays trivial.
"""
import json
import sys

import numpy as np

from activeflux.euler import GasModel
from activeflux.fieldio import read_dump
from activeflux.problems import make_problem, pulse_asymmetry


def point_sets(field):
    """(x_index, y_index, values) of every stored point on the field's own
    half-index lattice (vertex = even/even, evert = even/odd, ...)."""
    n = field.mesh.nx
    idx = np.arange(n)
    out = []
    out.append((2 * idx[:, None], 2 * idx[None, :], field.vert))
    out.append((2 * idx[:, None], 2 * idx[None, :] + 1, field.evert))
    out.append((2 * idx[:, None] + 1, 2 * idx[None, :], field.ehorz))
    return out


def max_pressure_error(coarse, fine):
    r = fine.mesh.nx // coarse.mesh.nx
    worst = 0.0
    for ix, iy, vals in point_sets(coarse):
        # half-index -> fine vertex index (r is even for every pair here)
        jx = (ix * r) // 2
        jy = (iy * r) // 2
        ref = fine.vert[jx % fine.mesh.nx, jy % fine.mesh.ny, 3]
        worst = max(worst, float(np.abs(vals[..., 3] - ref).max()))
    return worst


def slope(hs, vals):
    return float(np.polyfit(np.log(hs), np.log(vals), 1)[0])


def main(argv):
    dirs, out_path = argv[:-1], argv[-1]
    gas = make_problem("pulse").gas
    fields = [read_dump(f"{d}/field_final.dump")[0] for d in dirs]
    fine = fields[0]
    rows = []
    for fld in fields:
        entry = {
            "nx": fld.mesh.nx,
            "dx": fld.mesh.h,
            "asymmetry": pulse_asymmetry(fld, gas),
        }
        if fld is not fine:
            entry["pressure_error"] = max_pressure_error(fld, fine)
        rows.append(entry)
    coarse = rows[1:]
    result = {
        "meshes": rows,
        "asymmetry_slope": slope([r["dx"] for r in rows],
                                 [r["asymmetry"] for r in rows]),
        "pressure_error_slope": slope([r["dx"] for r in coarse],
                                      [r["pressure_error"] for r in coarse]),
    }
    with open(out_path, "w", encoding="utf-8") as fh:
        json.dump(result, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(json.dumps(result, indent=2, sort_keys=True))


if __name__ == "__main__":
    main(sys.argv[1:])
