"""`--config` files: YAML/JSON mappings or key=value lines."""

from pathlib import Path
from typing import Any

import yaml

from ..errors import ConfigError

STRUCTURED_SUFFIXES: frozenset[str] = frozenset({".yaml", ".yml", ".json"})


def normalize_key(key: str) -> str:
    """Map `max-iters` and `--max-iters` to `max_iters`."""
    return key.strip().lstrip("-").replace("-", "_")


def parse_key_value_lines(text: str) -> dict[str, str]:
    """Parse `key = value` lines; `#` starts a comment."""
    values: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, separator, value = line.partition("=")
        if not separator or not key.strip():
            raise ConfigError(f"line {number}: expected key=value, got {raw!r}")
        values[normalize_key(key)] = value.strip()
    return values


def load_config_file(path: Path) -> dict[str, Any]:
    """Load option values keyed by normalized long-flag names."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise ConfigError(f"cannot read config file {path}: {error}") from error
    if path.suffix.lower() not in STRUCTURED_SUFFIXES:
        return dict(parse_key_value_lines(text))
    try:
        loaded = yaml.safe_load(text)
    except yaml.YAMLError as error:
        raise ConfigError(f"cannot parse config file {path}: {error}") from error
    if loaded is None:
        return {}
    if not isinstance(loaded, dict):
        raise ConfigError(f"config file {path} must hold a mapping, got {type(loaded).__name__}")
    return {normalize_key(str(key)): value for key, value in loaded.items()}
