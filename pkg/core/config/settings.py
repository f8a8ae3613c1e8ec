"""
Application Configuration Management

Runtime settings for the filter bank library and CLI, loaded from
environment variables (prefix ``GRAPHSS_``) and an optional ``.env`` file.
"""

from functools import lru_cache
from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.

    Numeric tolerances live here so that tests and the CLI share one source.
    """

    model_config = SettingsConfigDict(
        env_prefix="GRAPHSS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # ========================================================================
    # APPLICATION
    # ========================================================================
    app_env: str = Field(default="development", description="Environment: development, testing, production")
    app_name: str = Field(default="graphss")
    app_version: str = Field(default="1.0.0")
    log_level: str = Field(default="INFO")
    log_format: str = Field(default="text", description="text or json")

    # ========================================================================
    # BASIS CACHE
    # ========================================================================
    cache_dir: Path = Field(default=Path.home() / ".cache" / "graphss")
    cache_enabled: bool = Field(default=True)

    # ========================================================================
    # GENERATORS & EXPERIMENTS
    # ========================================================================
    connectivity_retries: int = Field(default=20, ge=1)
    monte_carlo_workers: int = Field(default=1, ge=1)
    default_seed: int = Field(default=1)

    # ========================================================================
    # NUMERICAL TOLERANCES
    # ========================================================================
    symmetry_tol: float = Field(default=1e-12, gt=0)
    row_sum_tol: float = Field(default=1e-10, gt=0)
    kron_max_condition: float = Field(default=1e12, gt=0)

    # ========================================================================
    # VALIDATORS
    # ========================================================================

    @field_validator("app_env")
    @classmethod
    def validate_environment(cls, v: str) -> str:
        """Validate environment is one of allowed values"""
        allowed = ["development", "testing", "production"]
        if v not in allowed:
            raise ValueError(f"app_env must be one of {allowed}")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level"""
        allowed = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v = v.upper()
        if v not in allowed:
            raise ValueError(f"log_level must be one of {allowed}")
        return v

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        v = v.lower()
        if v not in ("text", "json"):
            raise ValueError("log_format must be 'text' or 'json'")
        return v

    # ========================================================================
    # HELPERS
    # ========================================================================

    @property
    def is_production(self) -> bool:
        """Check if running in production"""
        return self.app_env == "production"

    @property
    def json_logs(self) -> bool:
        return self.log_format == "json" or self.is_production


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached application settings.

    Using lru_cache ensures settings are loaded only once.
    """
    return Settings()


# Convenience export
settings = get_settings()
