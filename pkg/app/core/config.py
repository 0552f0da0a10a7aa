# Configuration for environment variables and project settings
# This file defines project-wide settings and loads environment overrides (BRAUER_CAP, BRAUER_SEED, ...).
from functools import lru_cache
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")

    PROJECT_NAME: str = "Brauer Designs"
    BRAUER_CAP: int = 4096  # max d^t for dense operators
    BRAUER_BASIS_CAP: int = 945  # max (2t-1)!! for Gram, Weingarten and constraint work
    BRAUER_SEED: int = 20240917
    BRAUER_WORKERS: Optional[int] = None  # None -> os.cpu_count()
    BRAUER_MAX_T: int = 8  # (2*8-1)!! = 2,027,025 pairings
    BRAUER_LOG_LEVEL: str = "WARNING"


@lru_cache()
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
