"""Load configuration from YAML and environment variables."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from heronpairs.core.rationals import parse_rational

# Default config lives next to this module
_DEFAULT_CONFIG_PATH = Path(__file__).parent / "default.yaml"

_TRUE = ("1", "true", "yes", "on")


def _load_yaml(path: Path) -> dict[str, Any]:
    if not path.exists():
        return {}
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    result = dict(base)
    for k, v in override.items():
        if k in result and isinstance(result[k], dict) and isinstance(v, dict):
            result[k] = _deep_merge(result[k], v)
        else:
            result[k] = v
    return result


class LoggingSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="HERONPAIRS_LOG_", extra="ignore", populate_by_name=True
    )
    level: str = "INFO"
    json_output: bool = Field(default=True, alias="json")

    @field_validator("level")
    @classmethod
    def _known_level(cls, v: str) -> str:
        level = v.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {v!r}")
        return level


class OutputSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="HERONPAIRS_OUTPUT_", extra="ignore")
    output_dir: str = "."
    format: str = "json"

    @field_validator("format")
    @classmethod
    def _known_format(cls, v: str) -> str:
        if v not in ("json", "jsonl", "csv"):
            raise ValueError(f"unknown output format {v!r}")
        return v


class SearchSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="HERONPAIRS_SEARCH_", extra="ignore")
    max_side: int = Field(default=85, ge=3)
    workers: int = Field(default=1, ge=1)
    primitive_only: bool = False
    scalene_only: bool = False


class DescentSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="HERONPAIRS_DESCENT_", extra="ignore")
    steps: int = Field(default=2, ge=0)
    default_m: str = "1"

    @field_validator("default_m")
    @classmethod
    def _rational(cls, v: str) -> str:
        if parse_rational(str(v)) == 0:
            raise ValueError("default_m must be nonzero")
        return str(v)


class Config(BaseSettings):
    """Application config: YAML + env."""

    model_config = SettingsConfigDict(env_nested_delimiter="__", extra="ignore")

    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)
    search: SearchSettings = Field(default_factory=SearchSettings)
    descent: DescentSettings = Field(default_factory=DescentSettings)

    @classmethod
    def load(cls, config_path: str | Path | None = None) -> "Config":
        path = Path(config_path) if config_path else _DEFAULT_CONFIG_PATH
        yaml_data = _load_yaml(path)
        env_prefix = os.getenv("HERONPAIRS_ENV_PREFIX", "")
        if env_prefix:
            yaml_data = _deep_merge(yaml_data, _load_yaml(Path(f"config/{env_prefix}.yaml")))
        output_dir = os.getenv("HERONPAIRS_OUTPUT_DIR")
        if output_dir:
            yaml_data.setdefault("output", {})["output_dir"] = output_dir
        level = os.getenv("HERONPAIRS_LOG_LEVEL")
        if level:
            yaml_data.setdefault("logging", {})["level"] = level
        use_json = os.getenv("HERONPAIRS_LOG_JSON")
        if use_json:
            yaml_data.setdefault("logging", {})["json"] = use_json.lower() in _TRUE
        workers = os.getenv("HERONPAIRS_SEARCH_WORKERS")
        if workers:
            yaml_data.setdefault("search", {})["workers"] = int(workers)
        return cls(**yaml_data)


def get_config(config_path: str | Path | None = None) -> Config:
    return Config.load(config_path)
