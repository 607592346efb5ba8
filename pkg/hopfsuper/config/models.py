from pathlib import Path
from typing import List, Literal, Optional, Tuple, Type

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict, YamlConfigSettingsSource
from sympy import isprime


class ScalarsConfig(BaseModel):
    """Exact scalar field configuration."""

    conductor: Optional[int] = Field(
        default=None, ge=1, description="Force the conductor N of Q(zeta_N) instead of the automatic lcm"
    )


class ClassifyConfig(BaseModel):
    """Classification pipeline configuration."""

    max_concurrent: int = Field(default=0, ge=0, description="Max candidate pipelines at once. 0 = no limit.")
    default_p: int = Field(default=3, description="Odd prime for the 2p table when --p is absent")
    scalar_samples: List[int] = Field(
        default_factory=lambda: [-1, 2], description="Values at which scalar-family automorphisms are checked"
    )
    square_dim_primes: List[int] = Field(default_factory=lambda: [3], description="Primes p for the 2p^2 scan")

    @field_validator("default_p")
    @classmethod
    def validate_odd_prime(cls, v: int) -> int:
        if v == 2 or not isprime(v):
            raise ValueError(f"{v} is not an odd prime")
        return v

    @field_validator("square_dim_primes")
    @classmethod
    def validate_odd_primes(cls, v: List[int]) -> List[int]:
        bad = [p for p in v if p == 2 or not isprime(p)]
        if bad:
            raise ValueError(f"not odd primes: {bad}")
        return v

    @field_validator("scalar_samples")
    @classmethod
    def validate_samples(cls, v: List[int]) -> List[int]:
        if not v or 0 in v:
            raise ValueError("scalar samples must be a non-empty list of non-zero integers")
        return v


class DataConfig(BaseModel):
    """Reference data locations."""

    expected_tables: Optional[Path] = Field(default=None, description="Override of the packaged expected tables")


class StorageConfig(BaseModel):
    """Storage configuration."""

    output_dir: Path = Field(default=Path("reports"), description="Base directory for reports and built objects")


class LoggingConfig(BaseModel):
    """Logging configuration."""

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default="INFO")
    json_output: bool = Field(default=False, alias="json", description="Render JSON lines instead of the console")

    model_config = ConfigDict(populate_by_name=True)

    @field_validator("level", mode="before")
    @classmethod
    def normalise_level(cls, v: object) -> object:
        return v.upper() if isinstance(v, str) else v


class Settings(BaseSettings):
    """Main application settings."""

    scalars: ScalarsConfig = Field(default_factory=ScalarsConfig)
    classify: ClassifyConfig = Field(default_factory=ClassifyConfig)
    data: DataConfig = Field(default_factory=DataConfig)
    storage: StorageConfig = Field(default_factory=StorageConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    model_config = SettingsConfigDict(
        env_file=Path(".env"),
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        yaml_file=Path("config/config.yaml"),
        yaml_file_encoding="utf-8",
        extra="ignore",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (
            init_settings,  # args or defaults
            env_settings,  # environment variables
            dotenv_settings,  # .env file
            YamlConfigSettingsSource(settings_cls),  # YAML file
            file_secret_settings,
        )
