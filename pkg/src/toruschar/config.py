"""Run-time settings: command-line flags override a key=value file, which overrides TORUSCHAR_* variables."""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Mapping

from .oracle import DEFAULT_BUDGET
from .repnum import DEFAULT_SEED

__all__ = ["Settings", "load_settings", "ENV_PREFIX"]

ENV_PREFIX = "TORUSCHAR_"


@dataclass(frozen=True)
class Settings:
    budget: int = DEFAULT_BUDGET
    seed: int = DEFAULT_SEED
    samples: int = 5
    irreducible_tol: float = 1e-9
    rank_tol: float = 1e-6
    fd_step: float = 1e-5


def _cast(name: str, raw: str):
    kind = {f.name: f.type for f in fields(Settings)}[name]
    if kind in ("int", int):
        return int(raw, 0)
    return float(raw)


def _known(items: Mapping[str, str], source: str) -> dict:
    names = {f.name for f in fields(Settings)}
    out = {}
    for key, raw in items.items():
        key = key.strip().lower().replace("-", "_")
        if key not in names:
            raise ValueError(f"unknown setting {key!r} in {source}")
        out[key] = _cast(key, str(raw).strip())
    return out


def _from_env(env: Mapping[str, str]) -> dict:
    items = {k[len(ENV_PREFIX):]: v for k, v in env.items() if k.startswith(ENV_PREFIX)}
    items.pop("CONFIG", None)
    return _known(items, "environment")


def _from_file(path: str | os.PathLike) -> dict:
    text = Path(path).read_text()
    cp = configparser.ConfigParser(inline_comment_prefixes=("#",))
    cp.read_string("[settings]\n" + text)
    return _known(dict(cp["settings"]), str(path))


def load_settings(
    flags: Mapping[str, object] | None = None,
    path: str | os.PathLike | None = None,
    env: Mapping[str, str] | None = None,
) -> Settings:
    """Merge settings with precedence flags > file > environment > defaults.

    ``path`` defaults to $TORUSCHAR_CONFIG when unset.  Flags whose value is
    None are treated as not given.
    """
    env = os.environ if env is None else env
    merged = _from_env(env)
    path = path or env.get(ENV_PREFIX + "CONFIG")
    if path:
        merged.update(_from_file(path))
    merged.update({k: v for k, v in (flags or {}).items() if v is not None})
    return replace(Settings(), **merged)
