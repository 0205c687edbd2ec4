"""Search guards and defaults, overridable via config file and environment.

Config files are plain ``key = value`` text; blank lines and ``#`` comments
are ignored.  Environment variables use the prefix ``SIDONKIT_`` with the key
upper-cased, e.g. ``SIDONKIT_ARROW_MAX_COLORINGS=1024``.  Environment values
override file values.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

from .errors import FormatError

ENV_PREFIX = "SIDONKIT_"

INTERLEAVINGS = ("level-major", "path-major")


@dataclass
class Config:
    # Refuse set colorings beyond this many (r ** (|X| - 1) with the first
    # element's color fixed); 2**23 corresponds to |X| = 24 at r = 2.
    arrow_max_colorings: int = 8_388_608
    # Same guard for edge colorings; 2**29 corresponds to 30 edges at r = 2.
    edge_arrow_max_colorings: int = 536_870_912
    # Forest-of-copies searches are exponential in the number of copies.
    forest_max_copies: int = 18
    # Representations materialized per target in profiles and certificates.
    witness_cap: int = 10_000
    # Default relative order of internal theta-path vertices.
    interleaving: str = "level-major"


def _parse_value(name: str, raw: str):
    raw = raw.strip()
    if name == "interleaving":
        if raw not in INTERLEAVINGS:
            raise FormatError(f"interleaving must be one of {INTERLEAVINGS}, got {raw!r}")
        return raw
    try:
        value = int(raw)
    except ValueError:
        raise FormatError(f"config key {name!r} expects an integer, got {raw!r}") from None
    if value < 0:
        raise FormatError(f"config key {name!r} must be nonnegative")
    return value


def load_config(path: str | None = None, env: dict | None = None) -> Config:
    """Build a Config from an optional file plus environment overrides."""
    cfg = Config()
    known = {f.name for f in fields(Config)}
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise FormatError(f"{path}:{lineno}: expected 'key = value'")
                name, raw = (part.strip() for part in line.split("=", 1))
                if name not in known:
                    raise FormatError(f"{path}:{lineno}: unknown config key {name!r}")
                setattr(cfg, name, _parse_value(name, raw))
    env = os.environ if env is None else env
    for name in known:
        raw = env.get(ENV_PREFIX + name.upper())
        if raw is not None:
            setattr(cfg, name, _parse_value(name, raw))
    return cfg


def as_dict(cfg: Config) -> dict:
    return {f.name: getattr(cfg, f.name) for f in fields(Config)}


DEFAULT = Config()
