import pytest

from pydantic import ValidationError

from src.cli.settings import LOG_LEVEL_ENV, TOL_ENV, RunSettings


class TestRunSettings:

    def test_default_values(self):
        settings = RunSettings.from_env({})
        assert settings.distinct_tolerance == 1e-9
        assert settings.log_level == "WARNING"

    def test_from_env(self):
        settings = RunSettings.from_env({TOL_ENV: "1e-6", LOG_LEVEL_ENV: "debug"})
        assert settings.distinct_tolerance == 1e-6
        assert settings.log_level == "DEBUG"

    def test_empty_variables_keep_defaults(self):
        settings = RunSettings.from_env({TOL_ENV: "", LOG_LEVEL_ENV: ""})
        assert settings.distinct_tolerance == 1e-9
        assert settings.log_level == "WARNING"

    def test_reads_process_environment(self, monkeypatch):
        monkeypatch.setenv(TOL_ENV, "2e-8")
        monkeypatch.delenv(LOG_LEVEL_ENV, raising=False)
        assert RunSettings.from_env().distinct_tolerance == 2e-8

    @pytest.mark.parametrize("value", ["0", "-1e-9", "1", "abc"])
    def test_invalid_tolerance(self, value):
        with pytest.raises(ValidationError):
            RunSettings.from_env({TOL_ENV: value})

    def test_invalid_log_level(self):
        with pytest.raises(ValidationError) as exc_info:
            RunSettings(log_level="INVALID")
        assert "log_level must be one of" in str(exc_info.value)
