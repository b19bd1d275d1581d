"""Runtime limits and tuning knobs.

Settings come from, in increasing precedence: built-in defaults, a
key=value config file (path given by --config or the EXOTICCONE_CONFIG
environment variable), and command-line flags.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import DomainError

ENV_VAR = "EXOTICCONE_CONFIG"

# rough bytes per memo entry, used to turn cache_bytes into an entry cap
_ENTRY_BYTES = 120


@dataclass(frozen=True)
class Config:
    rank_cap: int = 8
    degree_cap: int = 12
    closure_depth: int = 4
    cache_bytes: int = 1 << 26
    threads: int = 4

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or value <= 0:
                raise DomainError(f"config {f.name} must be a positive int")

    @property
    def cache_entries(self) -> int:
        return max(1024, self.cache_bytes // _ENTRY_BYTES)


def _parse_file(path: str) -> dict:
    known = {f.name for f in fields(Config)}
    out = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in known:
                raise DomainError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                out[key] = int(value.strip())
            except ValueError as exc:
                raise DomainError(
                    f"{path}:{lineno}: {key} must be an integer"
                ) from exc
    return out


def load_config(path: str | None = None, overrides: dict | None = None
                ) -> Config:
    """Defaults, then the config file if any, then explicit overrides."""
    values = {}
    source = path or os.environ.get(ENV_VAR)
    if source:
        if not os.path.exists(source):
            raise DomainError(f"config file not found: {source}")
        values.update(_parse_file(source))
    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})
    return replace(Config(), **values)
