from __future__ import annotations

import os
from dataclasses import asdict, dataclass, replace
from typing import Mapping

from dotenv import load_dotenv

from src.core.errors import ConfigError

FORMATS = ("table", "json", "dot")

# short names accepted by --bound KEY=VALUE
BOUND_KEYS = {
    "partitions": "max_partition_d",
    "compositions": "max_compositions",
    "ideals": "max_ideals",
    "tabloids": "max_tabloids",
    "cocycle_unknowns": "max_cocycle_unknowns",
    "rank": "max_freudenthal_rank",
}


@dataclass(frozen=True)
class Settings:
    max_partition_d: int = 60
    max_compositions: int = 1_000_000
    max_ideals: int = 4096
    max_tabloids: int = 200_000
    max_cocycle_unknowns: int = 50_000
    max_freudenthal_rank: int = 6
    output_format: str = "table"
    threads: int = 1

    def __post_init__(self):
        for key, field_name in BOUND_KEYS.items():
            value = getattr(self, field_name)
            if not isinstance(value, int) or value <= 0:
                raise ConfigError(f"bound {key} must be a positive integer, got {value!r}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}, got {self.output_format!r}")
        if self.threads < 1:
            raise ConfigError(f"threads must be >= 1, got {self.threads}")

    def with_overrides(self, overrides: Mapping[str, int]) -> "Settings":
        changes = {}
        for key, value in overrides.items():
            if key not in BOUND_KEYS:
                raise ConfigError(f"unknown bound {key!r}; expected one of {', '.join(BOUND_KEYS)}")
            changes[BOUND_KEYS[key]] = int(value)
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT_SETTINGS = Settings()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from e


def load_settings() -> Settings:
    load_dotenv(".env.local")
    load_dotenv()
    d = DEFAULT_SETTINGS
    return Settings(
        max_partition_d=_env_int("SPECHT_MAX_PARTITION_D", d.max_partition_d),
        max_compositions=_env_int("SPECHT_MAX_COMPOSITIONS", d.max_compositions),
        max_ideals=_env_int("SPECHT_MAX_IDEALS", d.max_ideals),
        max_tabloids=_env_int("SPECHT_MAX_TABLOIDS", d.max_tabloids),
        max_cocycle_unknowns=_env_int("SPECHT_MAX_COCYCLE_UNKNOWNS", d.max_cocycle_unknowns),
        max_freudenthal_rank=_env_int("SPECHT_MAX_FREUDENTHAL_RANK", d.max_freudenthal_rank),
        output_format=os.getenv("SPECHT_FORMAT", d.output_format),
        threads=_env_int("SPECHT_THREADS", d.threads),
    )


def parse_bound_pairs(pairs: list[str] | None) -> dict[str, int]:
    out: dict[str, int] = {}
    for pair in pairs or []:
        key, sep, value = pair.partition("=")
        if not sep:
            raise ConfigError(f"--bound expects KEY=VALUE, got {pair!r}")
        try:
            out[key.strip()] = int(value)
        except ValueError as e:
            raise ConfigError(f"--bound {key}: {value!r} is not an integer") from e
    return out
