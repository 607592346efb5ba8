from pathlib import Path
from typing import Optional

from pydantic_settings import SettingsConfigDict

from .models import Settings


def load_settings(config_file: Optional[Path] = None) -> Settings:
    """Load settings, reading the YAML layer from config_file instead of config/config.yaml.

    Raises:
        FileNotFoundError: If config_file is given and does not exist
    """
    if config_file is None:
        return Settings()
    if not config_file.is_file():
        raise FileNotFoundError(f"config file not found: {config_file}")

    class FileSettings(Settings):
        model_config = SettingsConfigDict(yaml_file=config_file)

    return FileSettings()
