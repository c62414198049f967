"""Runtime configuration read from ``DUNKL_OSC_*`` environment variables."""
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="DUNKL_OSC_", extra="ignore")

    precision: int = Field(default=12, ge=1, le=17)
    log_level: str = "INFO"
    quadrature_cap: int = Field(default=512, ge=1)
    quadrature_tol: float = 1e-12
    r_max: float = Field(default=14.0, gt=0)
    radial_points: int = Field(default=2000, ge=8)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()


def format_number(value: float, precision: int | None = None) -> str:
    """Locale-independent fixed-significance formatting for artifacts."""
    digits = precision if precision is not None else get_settings().precision
    return format(float(value), f".{digits}g")
