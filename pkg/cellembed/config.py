"""
Runtime configuration: the I/O base, size guards and output mode.

Guards are plain values so that bigger machines can push further; they are
read from the environment (``GUARD_INTERVAL_MAX``, ``GUARD_ISO_MAX``,
``GUARD_IDEAL_MAX``) and may be overridden from the command line.
"""
from __future__ import annotations

import dataclasses
import os
from collections.abc import Mapping

from .errors import ConfigError
from .interval import DEFAULT_INTERVAL_MAX, DEFAULT_ISO_MAX
from .klpoly import DEFAULT_IDEAL_MAX
from .perm import Base


ENV_GUARDS = {
    "interval_max": "GUARD_INTERVAL_MAX",
    "iso_max": "GUARD_ISO_MAX",
    "ideal_max": "GUARD_IDEAL_MAX",
}

OUTPUT_MODES = ("text", "json")


@dataclasses.dataclass(frozen=True)
class Config:
    base: Base = Base.ONE
    interval_max: int = DEFAULT_INTERVAL_MAX
    iso_max: int = DEFAULT_ISO_MAX
    ideal_max: int = DEFAULT_IDEAL_MAX
    output: str = "text"
    stretch: bool = False

    def __post_init__(self):
        for name in ENV_GUARDS:
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.output not in OUTPUT_MODES:
            raise ConfigError(f"output must be one of {OUTPUT_MODES}, got {self.output!r}")
        if not isinstance(self.base, Base):
            object.__setattr__(self, "base", Base.coerce(self.base))

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None, **overrides) -> Config:
        """Build a config from ``GUARD_*`` variables, then apply keyword overrides."""
        environ = os.environ if environ is None else environ
        values = {}
        for name, var in ENV_GUARDS.items():
            raw = environ.get(var)
            if raw is None or raw.strip() == "":
                continue
            try:
                values[name] = int(raw)
            except ValueError:
                raise ConfigError(f"{var} must be an integer, got {raw!r}") from None
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def replace(self, **changes) -> Config:
        return dataclasses.replace(self, **{k: v for k, v in changes.items() if v is not None})
