"""
Runtime settings for jacklab.

Every field can come from the process environment or from the first env
file found among:

- the path in JACKLAB_ENV_FILE
- ~/.jacklab.env
- ~/.config/jacklab/.env
- ./.env

Environment variables win over env files.

    export JACKLAB_THREADS=8
    jack-lab verify --suite g-top

    echo "JACKLAB_ETA_POLICY=lex-max" >> ~/.jacklab.env

    from jacklab.core.config import load_settings
    settings = load_settings("ci.env")
"""

import os
from pathlib import Path
from typing import Optional, List
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


ETA_POLICIES = ("lex-min", "lex-max")


def _find_env_files() -> List[Path]:
    """Existing env files, most specific first."""
    candidates = []

    custom_path = os.environ.get("JACKLAB_ENV_FILE")
    if custom_path:
        candidates.append(Path(custom_path))

    candidates.append(Path.home() / ".jacklab.env")
    candidates.append(Path.home() / ".config" / "jacklab" / ".env")
    candidates.append(Path.cwd() / ".env")

    return [p for p in candidates if p.exists()]


def _get_env_file() -> Optional[str]:
    env_files = _find_env_files()
    if env_files:
        return str(env_files[0])
    return None


class Settings(BaseSettings):
    """Runtime settings for the engine and the verification harness."""

    model_config = SettingsConfigDict(
        env_file=_get_env_file(),
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # ============================================================================
    # PARALLELISM
    # ============================================================================
    JACKLAB_THREADS: int = Field(
        default=4,
        description="Upper bound on worker threads used by suites and table builders"
    )

    # ============================================================================
    # LOGGING
    # ============================================================================
    JACKLAB_LOG_LEVEL: str = Field(
        default="WARNING",
        description="Level for the jacklab logger hierarchy"
    )

    JACKLAB_LOG_FORMAT: str = Field(
        default="%(asctime)s %(levelname)s %(name)s: %(message)s",
        description="Format string for log records"
    )

    # ============================================================================
    # VERIFICATION DEFAULTS
    # ============================================================================
    JACKLAB_MATCHING_N_MAX: int = Field(
        default=5,
        description="Default n for suites that enumerate matchings"
    )

    JACKLAB_G_N_MAX: int = Field(
        default=6,
        description="Default bound on |pi|+|sigma| for structure-constant suites"
    )

    JACKLAB_H_N_MAX: int = Field(
        default=4,
        description="Default truncation order of the logarithmic h series"
    )

    JACKLAB_CLI_N_LIMIT: int = Field(
        default=7,
        description="Largest n the CLI accepts for matching enumeration"
    )

    JACKLAB_ETA_POLICY: str = Field(
        default="lex-min",
        description="Handle tie-break policy for the non-orientability measure"
    )

    @field_validator("JACKLAB_ETA_POLICY")
    @classmethod
    def _known_policy(cls, value: str) -> str:
        if value not in ETA_POLICIES:
            raise ValueError(f"unknown eta policy {value!r}, expected one of {ETA_POLICIES}")
        return value

    @field_validator("JACKLAB_LOG_LEVEL")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        return value.upper()

    @property
    def worker_count(self) -> int:
        """Number of worker threads, never below one."""
        return max(1, self.JACKLAB_THREADS)


def load_settings(env_file: Optional[str] = None) -> Settings:
    """
    Build settings, reading ``env_file`` instead of the searched location.

    Args:
        env_file: Env file path; None falls back to the search order
    """
    if env_file:
        return Settings(_env_file=env_file)
    return Settings()


def get_env_file_location() -> Optional[str]:
    """Env file the default settings read, or None."""
    return _get_env_file()


settings = Settings()
