"""
Unit Tests for Application Settings
"""

import pytest
from pydantic import ValidationError

from core.config import Settings, get_settings


@pytest.mark.unit
class TestSettings:
    """Test environment loading and validators"""

    def test_defaults(self):
        s = Settings(_env_file=None)
        assert s.app_name == "graphss"
        assert s.monte_carlo_workers >= 1
        assert s.kron_max_condition == 1e12

    def test_environment_prefix(self, monkeypatch):
        monkeypatch.setenv("GRAPHSS_CONNECTIVITY_RETRIES", "5")
        monkeypatch.setenv("GRAPHSS_CACHE_ENABLED", "false")
        s = Settings(_env_file=None)
        assert s.connectivity_retries == 5
        assert s.cache_enabled is False

    def test_log_level_is_normalized(self):
        assert Settings(_env_file=None, log_level="debug").log_level == "DEBUG"

    @pytest.mark.parametrize(
        "field,value", [("app_env", "staging"), ("log_level", "verbose"), ("log_format", "xml"), ("connectivity_retries", 0)]
    )
    def test_invalid_values(self, field, value):
        with pytest.raises(ValidationError):
            Settings(_env_file=None, **{field: value})

    def test_json_logs(self):
        assert Settings(_env_file=None, app_env="production").json_logs
        assert Settings(_env_file=None, log_format="json").json_logs
        assert not Settings(_env_file=None, app_env="testing", log_format="text").json_logs

    def test_get_settings_is_cached(self):
        assert get_settings() is get_settings()
