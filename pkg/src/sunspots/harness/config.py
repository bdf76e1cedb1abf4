"""Harness defaults, overridable through the environment."""
from __future__ import annotations

import os
from dataclasses import dataclass, field

ENV_NMAX_CAP = "SUNSPOTS_NMAX_CAP"
ENV_RANDOM_CAP = "SUNSPOTS_RANDOM_CAP"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name}={raw!r} is not an integer") from None


@dataclass(frozen=True)
class HarnessConfig:
    nmax_cap: int = field(default_factory=lambda: _env_int(ENV_NMAX_CAP, 9))
    random_cap: int = field(default_factory=lambda: _env_int(ENV_RANDOM_CAP, 40))
    jobs: int = 1
    timeout_per_graph: float | None = None
    seed: int = 0
