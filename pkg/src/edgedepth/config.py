"""Computation caps and sweep bounds.

Caps can come from three places, later ones winning: the built-in defaults,
a ``key = value`` text file, and environment variables named
``EDGEDEPTH_<KEY>`` (for example ``EDGEDEPTH_MAX_LATTICE=50000``).
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass, fields
from pathlib import Path

from .errors import InvalidArgument

ENV_PREFIX = "EDGEDEPTH_"


@dataclass(frozen=True)
class Caps:
    # oracle
    max_generators: int = 10000
    max_lattice: int = 50_000_000
    max_faces: int = 2_000_000
    # exhaustive graph searches (induced cycles, independent sets, Kimura families)
    max_search_vertices: int = 14
    # sweep bounds used by ``verify``
    max_n: int = 9
    max_t: int = 4

    def replace(self, **changes) -> "Caps":
        return dataclasses.replace(self, **changes)


DEFAULT_CAPS = Caps()


def _coerce(key: str, raw: str) -> int:
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        raise InvalidArgument(f"config key {key!r} expects an integer, got {raw!r}") from None
    if value < 0:
        raise InvalidArgument(f"config key {key!r} must be non-negative")
    return value


def parse_config_text(text: str) -> dict[str, int]:
    known = {f.name for f in fields(Caps)}
    out: dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidArgument(f"config line {lineno}: expected 'key = value'")
        key, raw = (s.strip() for s in line.split("=", 1))
        key = key.lower().replace("-", "_")
        if key not in known:
            raise InvalidArgument(f"config line {lineno}: unknown key {key!r}")
        out[key] = _coerce(key, raw)
    return out


def env_overrides(environ: dict[str, str] | None = None) -> dict[str, int]:
    environ = os.environ if environ is None else environ
    out = {}
    for f in fields(Caps):
        raw = environ.get(ENV_PREFIX + f.name.upper())
        if raw is not None:
            out[f.name] = _coerce(f.name, raw)
    return out


def load_caps(path: str | Path | None = None, environ: dict[str, str] | None = None,
              **overrides: int | None) -> Caps:
    """Build caps from defaults, an optional config file, the environment and
    explicit keyword overrides (``None`` values are ignored)."""
    values: dict[str, int] = {}
    if path is not None:
        values.update(parse_config_text(Path(path).read_text()))
    values.update(env_overrides(environ))
    values.update({k: v for k, v in overrides.items() if v is not None})
    return DEFAULT_CAPS.replace(**values)
