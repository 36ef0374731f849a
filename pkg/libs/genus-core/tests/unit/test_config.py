import pytest
from pydantic import ValidationError

from genus_core.config import BaseConfig, ConfigLoader, ConfigValidationError
from genus_core.config.loaders import load_config_with_defaults
from genus_core.config.validation import validate_environment, validate_log_level


class SampleConfig(BaseConfig):
    service_name: str = "Test Service"
    environment: str = "test"
    log_level: str = "DEBUG"
    grid_size: int = 10
    sampling: bool = False



class TestBaseConfig:
    
    def test_base_config_defaults(self):
        config = BaseConfig()
        
        assert config.service_name == "genus-bounds"
        assert config.environment == "development"
        assert config.log_level == "INFO"
    
    def test_log_level_is_normalized(self):
        config = BaseConfig(log_level="debug")
        assert config.log_level == "DEBUG"
    
    def test_invalid_log_level_rejected(self):
        with pytest.raises(ValidationError):
            BaseConfig(log_level="LOUD")
    
    def test_extra_fields_forbidden(self):
        with pytest.raises(ValidationError):
            BaseConfig(unknown_field="x")
    
    def test_validate_assignment(self):
        config = BaseConfig()
        with pytest.raises(ValidationError):
            config.environment = "moon"
    
    def test_environment_is_normalized(self):
        assert BaseConfig(environment="Production").environment == "production"


class TestConfigLoader:
    
    def test_field_defaults_only(self):
        config = ConfigLoader(SampleConfig).load_from()
        assert config.grid_size == 10
        assert config.environment == "test"
    
    def test_yaml_overrides_field_defaults(self, temp_config_file):
        config = ConfigLoader(SampleConfig).load_from(yaml_file=temp_config_file)
        assert config.service_name == "Test Service from YAML"
        assert config.grid_size == 25
        assert config.log_level == "INFO"
    
    def test_env_overrides_yaml(self, temp_config_file, monkeypatch):
        monkeypatch.setenv("TESTCFG_GRID_SIZE", "40")
        monkeypatch.setenv("TESTCFG_SAMPLING", "true")
        monkeypatch.setenv("TESTCFG_NOT_A_FIELD", "ignored")
        config = ConfigLoader(SampleConfig).load_from(
            yaml_file=temp_config_file, env_prefix="TESTCFG_"
        )
        assert config.grid_size == 40
        assert config.sampling is True
    
    def test_kwargs_win(self, temp_config_file, monkeypatch):
        monkeypatch.setenv("TESTCFG_GRID_SIZE", "40")
        config = ConfigLoader(SampleConfig).load_from(
            yaml_file=temp_config_file, env_prefix="TESTCFG_", grid_size=7
        )
        assert config.grid_size == 7
    
    def test_missing_yaml_is_tolerated(self, tmp_path):
        config = ConfigLoader(SampleConfig).load_from(yaml_file=tmp_path / "absent.yaml")
        assert config.grid_size == 10
    
    def test_invalid_value_raises(self):
        with pytest.raises(ConfigValidationError):
            ConfigLoader(SampleConfig).load_from(grid_size="many")
    
    def test_broken_yaml_raises(self, tmp_path):
        broken = tmp_path / "broken.yaml"
        broken.write_text("grid_size: [1, 2\n", encoding="utf-8")
        with pytest.raises(ConfigValidationError):
            ConfigLoader(SampleConfig).load_from(yaml_file=broken)
    
    def test_cached_loader_returns_same_instance(self, temp_config_file):
        first = load_config_with_defaults(SampleConfig, temp_config_file)
        second = load_config_with_defaults(SampleConfig, temp_config_file)
        assert first is second


class TestValidation:
    
    @pytest.mark.parametrize("level", ["DEBUG", "info", "Warning", "ERROR", "CRITICAL"])
    def test_valid_log_levels(self, level):
        assert validate_log_level(level)
    
    @pytest.mark.parametrize("level", ["", "TRACE", "verbose"])
    def test_invalid_log_levels(self, level):
        assert not validate_log_level(level)
    
    def test_environments(self):
        assert validate_environment("Production")
        assert not validate_environment("staging-2")
