"""Run configuration: an INI-style file with [run], [problem] and [output]
sections, flattened into a validated RunConfig. See docs/config.md for the
schema. CLI flags override file values; defaults fill the rest.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, replace

from .pointupdate import VARIANTS
from .problems import PROBLEM_NAMES

SCHEMES = VARIANTS + ("semi",)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    problem: str = "vortex"
    scheme: str = "rb-tai"
    nx: int = 32
    ny: int | None = None
    cfl: float | None = 0.45
    dt: float | None = None
    t_final: float | None = None  # None: problem default
    output_every: int = 0         # dump cadence in steps; 0 = final only
    out_dir: str = "out"
    seed: int = 0
    override_cfl_guard: bool = False
    conservation_tol: float = 1e-10
    problem_overrides: dict = field(default_factory=dict)

    def validate(self):
        if self.problem not in PROBLEM_NAMES:
            raise ConfigError(f"unknown problem {self.problem!r}; choose from {PROBLEM_NAMES}")
        if self.scheme not in SCHEMES:
            raise ConfigError(f"unknown scheme {self.scheme!r}; choose from {SCHEMES}")
        if self.nx < 3 or (self.ny is not None and self.ny < 3):
            raise ConfigError("mesh must have at least 3 cells per direction")
        if (self.cfl is None) == (self.dt is None):
            raise ConfigError("exactly one of cfl/dt must be set")
        if self.cfl is not None and not 0.0 < self.cfl <= 2.0:
            raise ConfigError(f"cfl {self.cfl} outside (0, 2]")
        if self.dt is not None and not self.dt > 0.0:
            raise ConfigError("dt must be positive")
        if self.t_final is not None and not self.t_final >= 0.0:
            raise ConfigError("tfinal must be nonnegative")
        if self.output_every < 0:
            raise ConfigError("output_every must be >= 0")
        if self.conservation_tol <= 0.0:
            raise ConfigError("conservation_tol must be positive")
        return self


_RUN_KEYS = {
    "problem": str,
    "scheme": str,
    "nx": int,
    "ny": int,
    "cfl": float,
    "dt": float,
    "tfinal": float,
    "override_cfl_guard": None,  # bool, handled specially
    "conservation_tol": float,
    "seed": int,
}
_OUTPUT_KEYS = {"dir": str, "every": int}


def _parse_bool(raw, key):
    val = raw.strip().lower()
    if val in ("1", "true", "yes", "on"):
        return True
    if val in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"{key}: expected a boolean, got {raw!r}")


def load_config(path):
    """Parse an INI config file into an (unvalidated) RunConfig."""
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigError(f"cannot read config file {path}")
    kwargs = {}
    if parser.has_section("run"):
        for key, raw in parser.items("run"):
            if key not in _RUN_KEYS:
                raise ConfigError(f"[run] has unknown key {key!r}")
            if key == "override_cfl_guard":
                kwargs[key] = _parse_bool(raw, key)
            elif key == "tfinal":
                kwargs["t_final"] = float(raw)
            else:
                try:
                    kwargs[key] = _RUN_KEYS[key](raw)
                except ValueError as exc:
                    raise ConfigError(f"[run] {key}: {exc}") from exc
    if parser.has_section("output"):
        for key, raw in parser.items("output"):
            if key not in _OUTPUT_KEYS:
                raise ConfigError(f"[output] has unknown key {key!r}")
            if key == "dir":
                kwargs["out_dir"] = raw
            else:
                try:
                    kwargs["output_every"] = int(raw)
                except ValueError as exc:
                    raise ConfigError(f"[output] every: {exc}") from exc
    if parser.has_section("problem"):
        overrides = {}
        for key, raw in parser.items("problem"):
            try:
                overrides[key] = float(raw)
            except ValueError as exc:
                raise ConfigError(f"[problem] {key}: expected a number") from exc
        kwargs["problem_overrides"] = overrides
    # a config that sets dt should not inherit the default cfl
    if "dt" in kwargs and "cfl" not in kwargs:
        kwargs["cfl"] = None
    extra = set(parser.sections()) - {"run", "output", "problem"}
    if extra:
        raise ConfigError(f"unknown config sections: {sorted(extra)}")
    return RunConfig(**kwargs)


def apply_cli_overrides(cfg, args):
    """Overlay parsed argparse namespace values onto a RunConfig."""
    updates = {}
    if getattr(args, "mesh", None) is not None:
        mesh = args.mesh
        updates["nx"] = mesh[0]
        updates["ny"] = mesh[1] if len(mesh) > 1 else None
    for attr, key in (
        ("scheme", "scheme"),
        ("problem", "problem"),
        ("tfinal", "t_final"),
        ("out", "out_dir"),
        ("seed", "seed"),
    ):
        val = getattr(args, attr, None)
        if val is not None:
            updates[key] = val
    if getattr(args, "cfl", None) is not None:
        updates["cfl"] = args.cfl
        updates["dt"] = None
    if getattr(args, "dt", None) is not None:
        updates["dt"] = args.dt
        updates["cfl"] = None
    if getattr(args, "override_cfl_guard", False):
        updates["override_cfl_guard"] = True
    return replace(cfg, **updates) if updates else cfg
