"""Field dump format and run manifests.

A dump is a one-line JSON header (format tag/version, mesh geometry, time,
scheme, problem) followed by the four DOF arrays as row-major little-endian
64-bit floats in fixed order: averages, vertices, vertical-edge midpoints,
horizontal-edge midpoints. Round trips are byte-exact. The manifest is a JSON
list of artifacts with sha256 checksums.
"""

from __future__ import annotations

import hashlib
import json
import os

import numpy as np

from .grid import DofField, Mesh

MAGIC = "activeflux-dump"
FORMAT_VERSION = 1


class DumpError(ValueError):
    pass


def _header_dict(field, scheme, problem):
    m = field.mesh
    return {
        "magic": MAGIC,
        "version": FORMAT_VERSION,
        "nx": m.nx,
        "ny": m.ny,
        "lx": m.lx,
        "ly": m.ly,
        "x0": m.x0,
        "y0": m.y0,
        "time": field.time,
        "scheme": scheme,
        "problem": problem,
    }


def write_dump(path, field, scheme="", problem=""):
    header = json.dumps(_header_dict(field, scheme, problem), sort_keys=True)
    with open(path, "wb") as fh:
        fh.write(header.encode("utf-8"))
        fh.write(b"\n")
        for arr in (field.avg, field.vert, field.evert, field.ehorz):
            fh.write(np.ascontiguousarray(arr, dtype="<f8").tobytes())
    return path


def read_dump(path):
    """Returns (DofField, header dict)."""
    with open(path, "rb") as fh:
        header_line = fh.readline()
        payload = fh.read()
    try:
        header = json.loads(header_line.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DumpError(f"{path}: bad dump header") from exc
    if header.get("magic") != MAGIC:
        raise DumpError(f"{path}: not a field dump")
    if header.get("version") != FORMAT_VERSION:
        raise DumpError(f"{path}: unsupported dump version {header.get('version')}")
    mesh = Mesh(header["nx"], header["ny"], header["lx"], header["ly"], header["x0"], header["y0"])
    count = mesh.nx * mesh.ny * 4
    expected = 4 * count * 8
    if len(payload) != expected:
        raise DumpError(f"{path}: payload is {len(payload)} bytes, expected {expected}")
    flat = np.frombuffer(payload, dtype="<f8")
    shape = (mesh.nx, mesh.ny, 4)
    arrays = [flat[k * count:(k + 1) * count].reshape(shape).copy() for k in range(4)]
    field = DofField(mesh, *arrays, time=header["time"])
    return field, header


def sha256_file(path):
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_manifest(out_dir, artifact_paths, extra=None):
    """Write manifest.json listing each artifact with size and sha256."""
    artifacts = []
    for path in sorted(artifact_paths):
        full = os.path.join(out_dir, path)
        artifacts.append(
            {"path": path, "bytes": os.path.getsize(full), "sha256": sha256_file(full)}
        )
    manifest = {"artifacts": artifacts}
    if extra:
        manifest.update(extra)
    man_path = os.path.join(out_dir, "manifest.json")
    with open(man_path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return man_path


def check_manifest(out_dir):
    """Verify every artifact in manifest.json exists and matches its hash."""
    man_path = os.path.join(out_dir, "manifest.json")
    with open(man_path, "r", encoding="utf-8") as fh:
        manifest = json.load(fh)
    problems = []
    for art in manifest.get("artifacts", []):
        full = os.path.join(out_dir, art["path"])
        if not os.path.exists(full):
            problems.append(f"{art['path']}: missing")
        elif sha256_file(full) != art["sha256"]:
            problems.append(f"{art['path']}: checksum mismatch")
    return problems
