"""
配置加载与验证测试
"""

import pytest

from quasilin.config import ConfigLoader, ConfigValidator, Settings, settings
from quasilin.core.errors import ConfigurationError


class TestSettings:

    def test_defaults(self):
        assert settings.log_level == "WARNING"
        assert settings.log_file == ""
        assert settings.default_seed == 0
        assert settings.max_variables == 24
        assert settings.brute_force_max_n == 16
        assert settings.check_max_n == 12
        assert settings.naive_profile_max_n == 12
        assert settings.prop2_max_support == 1 << 16
        assert settings.confidence_lambda == 0.5
        assert settings.enumeration_limit == 64
        settings.validate()

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("QUASILIN_LOG_LEVEL", "debug")
        monkeypatch.setenv("QUASILIN_DEFAULT_SEED", "123")
        monkeypatch.setenv("QUASILIN_CONFIDENCE_LAMBDA", "0.25")
        assert settings.log_level == "DEBUG"
        assert settings.default_seed == 123
        assert settings.confidence_lambda == 0.25

    def test_unparseable_numbers_fall_back_to_defaults(self, monkeypatch):
        monkeypatch.setenv("QUASILIN_BRUTE_FORCE_MAX_N", "many")
        monkeypatch.setenv("QUASILIN_CONFIDENCE_LAMBDA", "half")
        assert settings.brute_force_max_n == 16
        assert settings.confidence_lambda == 0.5

    def test_validate_reports_every_error(self, monkeypatch):
        monkeypatch.setenv("QUASILIN_LOG_LEVEL", "LOUD")
        monkeypatch.setenv("QUASILIN_MAX_VARIABLES", "30")
        monkeypatch.setenv("QUASILIN_DEFAULT_SEED", "-4")
        with pytest.raises(ConfigurationError) as excinfo:
            settings.validate()
        message = str(excinfo.value)
        assert "QUASILIN_LOG_LEVEL" in message
        assert "QUASILIN_MAX_VARIABLES" in message
        assert "QUASILIN_DEFAULT_SEED" in message

    def test_to_dict_keys(self):
        assert set(settings.to_dict()) == {
            "log_level", "log_file", "default_seed", "max_variables",
            "brute_force_max_n", "check_max_n", "naive_profile_max_n",
            "prop2_max_support", "confidence_lambda", "enumeration_limit",
        }

    def test_env_file(self, tmp_path, monkeypatch):
        env_file = tmp_path / ".env"
        env_file.write_text("QUASILIN_CHECK_MAX_N=7\nQUASILIN_DEFAULT_SEED=\n", encoding="utf-8")
        monkeypatch.setenv("QUASILIN_CHECK_MAX_N", "9")
        monkeypatch.setenv("QUASILIN_DEFAULT_SEED", "3")
        local = Settings(env_file=str(env_file))
        assert local.check_max_n == 7
        assert local.default_seed == 0


class TestConfigLoader:

    def test_get_env(self, monkeypatch):
        loader = ConfigLoader()
        assert loader.get_env("QUASILIN_MISSING") == ""
        assert loader.get_env("QUASILIN_MISSING", "fallback") == "fallback"
        monkeypatch.setenv("QUASILIN_PRESENT", "yes")
        assert loader.get_env("QUASILIN_PRESENT", "fallback") == "yes"

    def test_missing_env_file(self, tmp_path):
        assert ConfigLoader().load_env_file(str(tmp_path / "absent.env")) == {}


class TestConfigValidator:

    def test_valid_configuration(self):
        assert ConfigValidator().validate_all(settings.to_dict()) == []

    @pytest.mark.parametrize("config, field", [
        ({"log_level": "VERBOSE"}, "QUASILIN_LOG_LEVEL"),
        ({"max_variables": 0}, "QUASILIN_MAX_VARIABLES"),
        ({"max_variables": 25}, "QUASILIN_MAX_VARIABLES"),
        ({"brute_force_max_n": True}, "QUASILIN_BRUTE_FORCE_MAX_N"),
        ({"check_max_n": -1}, "QUASILIN_CHECK_MAX_N"),
        ({"prop2_max_support": 0}, "QUASILIN_PROP2_MAX_SUPPORT"),
        ({"confidence_lambda": 0.0}, "QUASILIN_CONFIDENCE_LAMBDA"),
        ({"confidence_lambda": 0.75}, "QUASILIN_CONFIDENCE_LAMBDA"),
        ({"enumeration_limit": -1}, "QUASILIN_ENUMERATION_LIMIT"),
        ({"default_seed": -1}, "QUASILIN_DEFAULT_SEED"),
    ])
    def test_invalid_values(self, config, field):
        errors = ConfigValidator().validate_all(config)
        assert len(errors) == 1
        assert field in errors[0]

    def test_large_brute_force_limit_is_a_warning(self):
        validator = ConfigValidator()
        assert validator.validate_all({"brute_force_max_n": 20}) == []
        assert len(validator.get_warnings()) == 1
