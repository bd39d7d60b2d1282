"""
Unit tests for ConfigManager.

Tests configuration loading, layering and the sampling constraints.
"""

import json

import pytest

from courant_tduality.core import DEFAULT_CONFIG, ConfigError, ConfigManager


@pytest.mark.unit
class TestConfigManager:
    """Test ConfigManager functionality."""

    def test_from_dict(self, sample_config):
        """Test creating ConfigManager from dictionary."""
        manager = ConfigManager.from_dict(sample_config)
        assert manager.to_dict() == sample_config

    def test_defaults(self):
        """Test that the built-in defaults match DEFAULT_CONFIG."""
        manager = ConfigManager.defaults()
        assert manager.to_dict() == DEFAULT_CONFIG
        assert manager.get("sampling.box") == [-1, 1]
        assert manager.get("sampling.samples") == 20

    def test_from_json(self, tmp_path, sample_config):
        """Test loading ConfigManager from JSON file."""
        path = tmp_path / "config.json"
        path.write_text(json.dumps(sample_config))
        manager = ConfigManager.from_json(str(path))
        assert manager.to_dict() == sample_config

    def test_from_json_nonexistent_file_raises_error(self):
        """Test loading from nonexistent JSON file raises error."""
        with pytest.raises(ConfigError):
            ConfigManager.from_json("/nonexistent/file.json")

    def test_from_json_invalid_json_raises_error(self, tmp_path):
        """Test loading invalid JSON raises error."""
        bad_json = tmp_path / "bad.json"
        bad_json.write_text("{invalid json")

        with pytest.raises(ConfigError):
            ConfigManager.from_json(str(bad_json))

    def test_from_yaml(self, temp_yaml_config, sample_config):
        """Test loading ConfigManager from YAML file."""
        manager = ConfigManager.from_yaml(temp_yaml_config)
        assert manager.to_dict() == sample_config

    def test_from_yaml_non_mapping_raises_error(self, tmp_path):
        """Test that a YAML list is rejected."""
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigError):
            ConfigManager.from_yaml(str(path))

    def test_from_yaml_without_pyyaml_raises_error(self):
        """Test loading YAML without PyYAML raises error."""
        import courant_tduality.core.config
        original = courant_tduality.core.config.HAS_YAML
        courant_tduality.core.config.HAS_YAML = False

        try:
            with pytest.raises(ConfigError):
                ConfigManager.from_yaml("config.yaml")
        finally:
            courant_tduality.core.config.HAS_YAML = original

    def test_from_config_folder_layers_on_defaults(self, config_folder):
        """Test that framework.yaml overrides the defaults it names."""
        manager = ConfigManager.from_config_folder(config_folder)
        assert manager.get("sampling.seed") == 7
        assert manager.get("sampling.samples") == 25
        assert manager.get("logging.level") == "INFO"

    def test_from_config_folder_missing_framework_yaml(self, tmp_path):
        """Test that a folder without framework.yaml is rejected."""
        with pytest.raises(ConfigError):
            ConfigManager.from_config_folder(str(tmp_path))

    def test_from_component_config(self, config_folder):
        """Test loading a component YAML file."""
        manager = ConfigManager.from_component_config("courant_axioms", config_folder)
        assert manager.get("random_sections.count") == 3

    def test_from_component_config_missing(self, config_folder):
        """Test that a missing component file raises ConfigError."""
        with pytest.raises(ConfigError):
            ConfigManager.from_component_config("unknown", config_folder)

    def test_get_with_dot_notation(self, sample_config):
        """Test getting values with dot notation."""
        manager = ConfigManager.from_dict(sample_config)

        assert manager.get("sampling.seed") == 7
        assert manager.get("random_sections.max_degree") == 1

    def test_get_with_default(self, sample_config):
        """Test get with default value."""
        manager = ConfigManager.from_dict(sample_config)
        assert manager.get("nonexistent.key", "default_value") == "default_value"

    def test_set_creates_nested_structure(self):
        """Test set creates nested structure."""
        manager = ConfigManager()

        manager.set("deep.nested.value", 42)

        assert manager.to_dict()["deep"]["nested"]["value"] == 42

    def test_merge_deep_override(self):
        """Test deep merging with override."""
        manager = ConfigManager.from_dict({"sampling": {"seed": 1, "samples": 20}})

        manager.merge({"sampling": {"samples": 30}})

        config = manager.to_dict()
        assert config["sampling"]["seed"] == 1
        assert config["sampling"]["samples"] == 30

    def test_validate_missing_required_key(self, sample_config):
        """Test validation fails with missing required key."""
        manager = ConfigManager.from_dict(sample_config)

        with pytest.raises(ConfigError):
            manager.validate({"sampling": dict, "required_key": str})

    def test_validate_wrong_type(self, sample_config):
        """Test validation fails with wrong type."""
        manager = ConfigManager.from_dict(sample_config)

        with pytest.raises(ConfigError):
            manager.validate({"sampling": str})

    def test_validate_sampling_accepts_defaults(self):
        """Test that the defaults satisfy the sampling constraints."""
        ConfigManager.defaults().validate_sampling()

    def test_validate_sampling_rejects_few_samples(self):
        """Test that fewer than 20 samples are refused."""
        manager = ConfigManager.defaults()
        manager.set("sampling.samples", 19)
        with pytest.raises(ConfigError):
            manager.validate_sampling()

    def test_validate_sampling_rejects_empty_box(self):
        """Test that a box with low >= high is refused."""
        manager = ConfigManager.defaults()
        manager.set("sampling.box", [1, 1])
        with pytest.raises(ConfigError):
            manager.validate_sampling()

    def test_config_copy_is_independent(self, sample_config):
        """Test that to_dict returns independent copy."""
        manager = ConfigManager.from_dict(sample_config)
        config_copy = manager.to_dict()

        config_copy["new_key"] = "new_value"

        assert "new_key" not in manager.to_dict()
