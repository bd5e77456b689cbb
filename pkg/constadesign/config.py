import os
from functools import lru_cache

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1


class Settings(BaseModel):
    """Runtime settings, read from the environment (a .env file is loaded by main)"""

    model_config = ConfigDict(frozen=True)

    field_cap: int = Field(2 ** 27, gt=0, description="Largest admissible tower size q^4")
    budget: int = Field(2 ** 32, gt=0, description="Evaluation budget for exhaustive enumerations")
    workers: int = Field(1, ge=1, description="Worker processes for bulk enumeration")
    block_threshold: int = Field(5000, ge=0, description="Designs above this block count omit the block list")
    log_level: str = Field("WARNING", description="Logging level name")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings(
        field_cap=_env_int("CONSTADESIGN_FIELD_CAP", 2 ** 27),
        budget=_env_int("CONSTADESIGN_BUDGET", 2 ** 32),
        workers=_env_int("CONSTADESIGN_WORKERS", 1),
        block_threshold=_env_int("CONSTADESIGN_BLOCK_THRESHOLD", 5000),
        log_level=os.getenv("LOG_LEVEL", "WARNING").upper(),
    )
