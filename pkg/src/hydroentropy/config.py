"""Run configuration: defaults, a key=value file, then command-line flags."""

import os
from dataclasses import dataclass, fields, replace

from .errors import DomainError

CONFIG_ENV = "HYDROENTROPY_CONFIG"

MIN_GRID = 1000
MIN_MOMENTUM_POINTS = 200


@dataclass(frozen=True)
class RunConfig:
    """Numerical and output settings shared by every subcommand.

    ``p_max`` is either "auto" (a window scaled with Z and r_c) or a fixed
    momentum cutoff in atomic units.
    """

    tol: float = 1e-11
    grid_size: int = 20000
    momentum_points: int = 3000
    p_max: str = "auto"
    alpha: float = 0.6
    beta: float = 3.0
    format: str = "csv"
    output: str = "-"

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError(f"tol must be positive, got {self.tol}")
        if self.grid_size < MIN_GRID:
            raise DomainError(f"grid_size must be >= {MIN_GRID}, got {self.grid_size}")
        if self.momentum_points < MIN_MOMENTUM_POINTS:
            raise DomainError(f"momentum_points must be >= {MIN_MOMENTUM_POINTS}, got {self.momentum_points}")
        if self.p_max != "auto":
            try:
                ok = float(self.p_max) > 0
            except ValueError:
                ok = False
            if not ok:
                raise DomainError(f"p_max must be 'auto' or a positive number, got {self.p_max!r}")
        if not (self.alpha > 0 and self.beta > 0):
            raise DomainError("alpha and beta must be positive")
        if self.format not in ("csv", "json"):
            raise DomainError(f"format must be csv or json, got {self.format!r}")

    @property
    def p_max_value(self):
        return None if self.p_max == "auto" else float(self.p_max)


_TYPES = {f.name: f.type for f in fields(RunConfig)}
_CASTS = {"float": float, "int": int, "str": str}


def _cast(key, text):
    kind = _TYPES[key]
    kind = kind if isinstance(kind, str) else kind.__name__
    try:
        return _CASTS[kind](text)
    except ValueError as exc:
        raise DomainError(f"bad value for {key}: {text!r}") from exc


def parse_config_text(text):
    """Parse ``key = value`` lines; '#' starts a comment."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"config line {lineno}: expected key = value")
        key, val = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _TYPES:
            raise DomainError(f"config line {lineno}: unknown key {key!r}")
        out[key] = _cast(key, val)
    return out


def load_config(path=None, overrides=None):
    """Defaults, then the file (explicit path or $HYDROENTROPY_CONFIG), then overrides."""
    values = {}
    path = path or os.environ.get(CONFIG_ENV)
    if path:
        with open(path, encoding="utf-8") as fh:
            values.update(parse_config_text(fh.read()))
    for key, val in (overrides or {}).items():
        if val is not None:
            values[key] = val
    return replace(RunConfig(), **values)
