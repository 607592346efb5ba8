from pathlib import Path

import pytest
from pydantic import ValidationError

from hopfsuper.config import ClassifyConfig, LoggingConfig, Settings, load_settings


def test_defaults(isolated_cwd: Path):
    settings = Settings()
    assert settings.scalars.conductor is None
    assert settings.classify.max_concurrent == 0
    assert settings.classify.default_p == 3
    assert settings.classify.scalar_samples == [-1, 2]
    assert settings.data.expected_tables is None
    assert settings.storage.output_dir == Path("reports")
    assert settings.logging.level == "INFO"
    assert not settings.logging.json_output


def test_environment_overrides(isolated_cwd: Path, monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv("CLASSIFY__MAX_CONCURRENT", "4")
    monkeypatch.setenv("LOGGING__LEVEL", "debug")
    settings = Settings()
    assert settings.classify.max_concurrent == 4
    assert settings.logging.level == "DEBUG"


def test_yaml_in_working_directory(isolated_cwd: Path):
    (isolated_cwd / "config").mkdir()
    (isolated_cwd / "config" / "config.yaml").write_text("classify:\n  default_p: 5\nscalars:\n  conductor: 12\n")
    settings = Settings()
    assert settings.classify.default_p == 5
    assert settings.scalars.conductor == 12


def test_environment_wins_over_yaml(isolated_cwd: Path, monkeypatch: pytest.MonkeyPatch):
    (isolated_cwd / "config").mkdir()
    (isolated_cwd / "config" / "config.yaml").write_text("classify:\n  default_p: 5\n")
    monkeypatch.setenv("CLASSIFY__DEFAULT_P", "7")
    assert Settings().classify.default_p == 7


def test_explicit_config_file(isolated_cwd: Path):
    path = isolated_cwd / "custom.yaml"
    path.write_text("storage:\n  output_dir: out\nlogging:\n  json: true\n")
    settings = load_settings(path)
    assert settings.storage.output_dir == Path("out")
    assert settings.logging.json_output


def test_missing_config_file(isolated_cwd: Path):
    with pytest.raises(FileNotFoundError):
        load_settings(isolated_cwd / "absent.yaml")


def test_invalid_yaml_value(isolated_cwd: Path):
    path = isolated_cwd / "bad.yaml"
    path.write_text("classify:\n  default_p: 4\n")
    with pytest.raises(ValidationError):
        load_settings(path)


@pytest.mark.parametrize(
    "field, value",
    [
        ("default_p", 2),
        ("default_p", 9),
        ("square_dim_primes", [3, 4]),
        ("scalar_samples", [0, 1]),
        ("scalar_samples", []),
    ],
)
def test_classify_validation(field, value):
    with pytest.raises(ValidationError):
        ClassifyConfig(**{field: value})


def test_logging_level_is_normalised():
    assert LoggingConfig(level="warning").level == "WARNING"
    assert LoggingConfig(json=True).json_output
    assert LoggingConfig(json_output=True).json_output
    with pytest.raises(ValidationError):
        LoggingConfig(level="verbose")
