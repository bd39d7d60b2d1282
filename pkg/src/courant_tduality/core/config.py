"""
Configuration management.

Configuration is layered: built-in defaults, then a config folder
(framework.yaml plus per-component YAML files), then a document's own
sample_plan block, then command-line flags. ConfigManager holds one layer
and merges others into it.
"""

from typing import Any, Dict, Optional
import copy
import json
import logging
import os

try:
    import yaml

    HAS_YAML = True
except ImportError:
    HAS_YAML = False

from .exceptions import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG: Dict[str, Any] = {
    "sampling": {
        "seed": 20240101,
        "samples": 20,
        "box": [-1, 1],
    },
    "random_sections": {
        "count": 100,
        "max_degree": 2,
        "coefficient_bound": 9,
    },
    "logging": {"level": "INFO"},
    "report": {"include_timings": False},
}

MIN_SAMPLES = 20


class ConfigManager:
    """
    Dot-addressable configuration dictionary with YAML/JSON loaders.

    Attributes:
        _config: The underlying configuration dictionary.
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None) -> None:
        self._config = copy.deepcopy(config) if config else {}
        logger.debug("ConfigManager initialized")

    @classmethod
    def defaults(cls) -> "ConfigManager":
        """Built-in defaults, used when no config folder is given."""
        return cls(DEFAULT_CONFIG)

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> "ConfigManager":
        return cls(config)

    @classmethod
    def from_json(cls, filepath: str) -> "ConfigManager":
        """
        Load configuration from a JSON file.

        Raises:
            ConfigError: If the file doesn't exist or is invalid JSON.
        """
        if not os.path.exists(filepath):
            raise ConfigError(f"Configuration file not found: {filepath}")
        try:
            with open(filepath, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Invalid JSON in configuration file: {e}")
        logger.info(f"Configuration loaded from JSON: {filepath}")
        return cls(data)

    @classmethod
    def from_yaml(cls, filepath: str) -> "ConfigManager":
        """
        Load configuration from a YAML file.

        Raises:
            ConfigError: If PyYAML is missing, the file doesn't exist or is invalid YAML.
        """
        if not HAS_YAML:
            raise ConfigError(
                "PyYAML is required for YAML configuration. Install with: pip install pyyaml"
            )
        if not os.path.exists(filepath):
            raise ConfigError(f"Configuration file not found: {filepath}")
        try:
            with open(filepath, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML in configuration file: {e}")
        if not isinstance(data, dict):
            raise ConfigError(f"Configuration file must contain a mapping: {filepath}")
        logger.info(f"Configuration loaded from YAML: {filepath}")
        return cls(data)

    @classmethod
    def from_config_folder(cls, config_dir: str = "./config") -> "ConfigManager":
        """
        Load framework.yaml from a config folder on top of the built-in defaults.

        Raises:
            ConfigError: If the folder or framework.yaml is missing or invalid.

        Example:
            >>> config = ConfigManager.from_config_folder("config")
            >>> config.get("sampling.samples")
            20
        """
        if not os.path.isdir(config_dir):
            raise ConfigError(f"Configuration folder not found: {config_dir}")
        config_path = os.path.join(config_dir, "framework.yaml")
        if not os.path.exists(config_path):
            raise ConfigError(
                f"Framework configuration not found: {config_path}\n"
                f"Please create {config_path} with sampling settings"
            )
        config = cls.defaults()
        config.merge(cls.from_yaml(config_path).to_dict())
        logger.info(f"Framework configuration loaded from {config_path}")
        return config

    @classmethod
    def from_component_config(
        cls, component_name: str, config_dir: str = "./config"
    ) -> "ConfigManager":
        """
        Load <config_dir>/components/<component_name>.yaml.

        Raises:
            ConfigError: If the file is missing or invalid.
        """
        config_path = os.path.join(config_dir, "components", f"{component_name}.yaml")
        if not os.path.exists(config_path):
            raise ConfigError(f"Component configuration not found: {config_path}")
        config = cls.from_yaml(config_path)
        logger.info(f"Component '{component_name}' configuration loaded from {config_path}")
        return config

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a value by dot-notation key.

        Example:
            >>> ConfigManager.defaults().get("sampling.box")
            [-1, 1]
        """
        value: Any = self._config
        for k in key.split("."):
            if not isinstance(value, dict) or value.get(k) is None:
                return default
            value = value[k]
        return value

    def set(self, key: str, value: Any) -> None:
        """Set a value by dot-notation key, creating intermediate dicts."""
        keys = key.split(".")
        node = self._config
        for k in keys[:-1]:
            node = node.setdefault(k, {})
        node[keys[-1]] = value
        logger.debug(f"Configuration updated: {key} = {value}")

    def merge(self, other: Dict[str, Any]) -> None:
        """Deep-merge another dictionary into this one; other wins."""
        self._config = self._deep_merge(self._config, other)
        logger.debug("Configuration merged")

    def to_dict(self) -> Dict[str, Any]:
        return copy.deepcopy(self._config)

    def validate(self, schema: Dict[str, Any]) -> bool:
        """
        Check that every schema key is present with the expected type.

        Raises:
            ConfigError: If a key is missing or mistyped.
        """
        for key, expected_type in schema.items():
            value = self.get(key)
            if value is None:
                raise ConfigError(f"Required configuration key missing: {key}")
            if not isinstance(value, expected_type):
                raise ConfigError(
                    f"Configuration key '{key}' has wrong type. "
                    f"Expected {getattr(expected_type, '__name__', expected_type)}, "
                    f"got {type(value).__name__}"
                )
        return True

    def validate_sampling(self) -> None:
        """
        Enforce the sampling constraints.

        Raises:
            ConfigError: On a non-integer seed, fewer than 20 samples or an empty box.
        """
        self.validate({"sampling.seed": int, "sampling.samples": int, "sampling.box": list})
        if self.get("sampling.samples") < MIN_SAMPLES:
            samples = self.get("sampling.samples")
            raise ConfigError(f"sampling.samples must be at least {MIN_SAMPLES}, got {samples}")
        box = self.get("sampling.box")
        if len(box) != 2 or not box[0] < box[1]:
            raise ConfigError(f"sampling.box must be [low, high] with low < high, got {box}")

    @staticmethod
    def _deep_merge(dict1: Dict[str, Any], dict2: Dict[str, Any]) -> Dict[str, Any]:
        result = copy.deepcopy(dict1)
        for key, value in dict2.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = ConfigManager._deep_merge(result[key], value)
            else:
                result[key] = copy.deepcopy(value)
        return result
