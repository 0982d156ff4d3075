"""
Unit tests for configuration module.
"""

import logging

import pytest
from pydantic import ValidationError

from jacklab.core.config import Settings, get_env_file_location, load_settings
from jacklab.core.logs import configure_logging


@pytest.mark.unit
class TestSettings:
    """Test the Settings configuration class."""

    def test_default_settings(self):
        """Test that default settings are loaded correctly."""
        settings = Settings(_env_file=None)

        assert settings.JACKLAB_MATCHING_N_MAX == 5
        assert settings.JACKLAB_G_N_MAX == 6
        assert settings.JACKLAB_H_N_MAX == 4
        assert settings.JACKLAB_CLI_N_LIMIT == 7
        assert settings.JACKLAB_ETA_POLICY == "lex-min"

    def test_worker_count_never_below_one(self):
        """Test the worker_count property."""
        assert Settings(_env_file=None, JACKLAB_THREADS=0).worker_count == 1
        assert Settings(_env_file=None, JACKLAB_THREADS=-3).worker_count == 1
        assert Settings(_env_file=None, JACKLAB_THREADS=8).worker_count == 8

    def test_threads_from_environment(self, monkeypatch):
        """Test that JACKLAB_THREADS is read from the environment."""
        monkeypatch.setenv("JACKLAB_THREADS", "2")
        assert Settings(_env_file=None).worker_count == 2

    def test_unknown_eta_policy_rejected(self):
        """Test that only shipped eta policies are accepted."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, JACKLAB_ETA_POLICY="random")

        assert Settings(_env_file=None, JACKLAB_ETA_POLICY="lex-max").JACKLAB_ETA_POLICY == "lex-max"

    def test_log_level_is_upper_cased(self):
        """Test log level normalization."""
        assert Settings(_env_file=None, JACKLAB_LOG_LEVEL="debug").JACKLAB_LOG_LEVEL == "DEBUG"

    def test_load_settings_from_env_file(self, tmp_path):
        """Test loading values from an explicit env file."""
        env_file = tmp_path / "jacklab.env"
        env_file.write_text("JACKLAB_G_N_MAX=4\nJACKLAB_CLI_N_LIMIT=5\n")

        settings = load_settings(str(env_file))

        assert settings.JACKLAB_G_N_MAX == 4
        assert settings.JACKLAB_CLI_N_LIMIT == 5

    def test_env_file_location_override(self, tmp_path, monkeypatch):
        """Test that JACKLAB_ENV_FILE takes priority when it exists."""
        env_file = tmp_path / "custom.env"
        env_file.write_text("JACKLAB_THREADS=3\n")
        monkeypatch.setenv("JACKLAB_ENV_FILE", str(env_file))

        assert get_env_file_location() == str(env_file)

    def test_missing_custom_env_file_is_skipped(self, tmp_path, monkeypatch):
        """Test that a JACKLAB_ENV_FILE pointing nowhere is ignored."""
        missing = tmp_path / "missing.env"
        monkeypatch.setenv("JACKLAB_ENV_FILE", str(missing))

        assert get_env_file_location() != str(missing)


@pytest.mark.unit
class TestLogging:
    """Test logger configuration."""

    def test_configure_logging_does_not_stack_handlers(self):
        """Test that repeated configuration keeps one handler."""
        logger = configure_logging("INFO")
        count = len(logger.handlers)
        configure_logging("DEBUG")

        assert len(logger.handlers) == count
        assert logger.level == logging.DEBUG
