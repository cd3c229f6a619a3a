"""Run configuration: defaults < key=value config file < environment < command-line flags."""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import DomainError
from .prime_core import Mode
from .prime_estimates import VARIANT_PRODUCT, VARIANT_RADICAL

ENV_OUTPUT_DIR = "PRIMEZETA_OUTPUT_DIR"


@dataclass(frozen=True)
class RunConfig:
    n_max: int = 100
    sigma_step: float = 0.1
    tau_step: float = 0.1
    zoom_step: float = 0.001
    quad_tol: float = 1e-8
    mode: str = Mode.OPTIMIZED.value
    bound_variant: str = VARIANT_PRODUCT
    seed: int = 0
    output_dir: str = "out"
    threads: int = 1

    def __post_init__(self):
        if self.n_max < 2:
            raise DomainError(f"n_max must be >= 2, got {self.n_max}")
        for name in ("sigma_step", "tau_step", "zoom_step", "quad_tol"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive")
        if self.mode not in (m.value for m in Mode):
            raise DomainError(f"unknown mode {self.mode!r}")
        if self.bound_variant not in (VARIANT_PRODUCT, VARIANT_RADICAL):
            raise DomainError(f"unknown bound variant {self.bound_variant!r}")
        if self.threads < 1:
            raise DomainError("threads must be >= 1")


_TYPES = {f.name: f.type for f in fields(RunConfig)}
_CASTS = {"int": int, "float": float, "str": str}


def _cast(key, raw):
    try:
        return _CASTS[_TYPES[key]](raw)
    except ValueError:
        raise DomainError(f"config value for {key!r} is not a valid {_TYPES[key]}: {raw!r}") from None


def parse_config_text(text: str) -> dict:
    """Parse flat ``key = value`` lines; '#' starts a comment."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"config line {lineno}: expected key=value, got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _TYPES:
            raise DomainError(f"config line {lineno}: unknown key {key!r}")
        out[key] = _cast(key, raw)
    return out


def resolve(flags=None, config_path=None, env=None) -> RunConfig:
    env = os.environ if env is None else env
    cfg = RunConfig()
    if config_path:
        with open(config_path, encoding="utf-8") as fh:
            cfg = replace(cfg, **parse_config_text(fh.read()))
    if env.get(ENV_OUTPUT_DIR):
        cfg = replace(cfg, output_dir=env[ENV_OUTPUT_DIR])
    given = {k: v for k, v in (flags or {}).items() if v is not None}
    return replace(cfg, **given)
