"""Configuration loading and models for hopfsuper."""

from .loader import load_settings
from .models import ClassifyConfig, DataConfig, LoggingConfig, ScalarsConfig, Settings, StorageConfig

__all__ = [
    "ClassifyConfig",
    "DataConfig",
    "LoggingConfig",
    "ScalarsConfig",
    "Settings",
    "StorageConfig",
    "load_settings",
]
