from pathlib import Path

import pytest

from hopfsuper.catalog import build_named
from hopfsuper.config import Settings, StorageConfig
from hopfsuper.core import HopfSuperAlgebraData
from hopfsuper.log import configure_logging


@pytest.fixture(autouse=True, scope="session")
def _logging() -> None:
    configure_logging("WARNING")


@pytest.fixture
def isolated_cwd(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Run from an empty directory so no config/config.yaml or .env leaks into the settings."""
    monkeypatch.chdir(tmp_path)
    for name in ("CLASSIFY__MAX_CONCURRENT", "CLASSIFY__DEFAULT_P", "LOGGING__LEVEL", "STORAGE__OUTPUT_DIR"):
        monkeypatch.delenv(name, raising=False)
    return tmp_path


@pytest.fixture
def settings(isolated_cwd: Path) -> Settings:
    return Settings(storage=StorageConfig(output_dir=isolated_cwd / "reports"))


@pytest.fixture(scope="session")
def sweedler() -> HopfSuperAlgebraData:
    """T_4(-1) with basis 1, c, x, cx."""
    return build_named("Taft(2)")


@pytest.fixture(scope="session")
def ext1() -> HopfSuperAlgebraData:
    return build_named("ext1")


@pytest.fixture(scope="session")
def a_c2() -> HopfSuperAlgebraData:
    return build_named("A_C2")


@pytest.fixture(scope="session")
def a_c2xc2() -> HopfSuperAlgebraData:
    return build_named("A_C2xC2")
