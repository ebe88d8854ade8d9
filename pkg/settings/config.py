from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[str] = None

    # Exact arithmetic
    SYMBOLIC_LIMIT: int = 12
    MODULAR_PRIME: int = 2_147_483_647
    # Integer matrices larger than this are screened modulo MODULAR_PRIME first
    MODULAR_THRESHOLD: int = 40
    CLASSIFY_MINOR_LIMIT: int = 12

    # Randomized layer
    RANDOM_TRIALS: int = 8
    RANDOM_BOUND: int = 1_000_000
    DEFAULT_SEED: int = 0

    # Decomposition
    DECOMPOSE_ROUNDS: int = 16
    DECOMPOSE_BOUND: int = 3
    CANONICAL_BOUND: int = 1000
    CANONICAL_SEEDS: int = 5

    # Scans
    SCAN_WORKERS: int = 1
    SCAN_SAMPLE_UNCERTIFIED: bool = True

    # Fixtures
    FIXTURES_DIR: str = "fixtures"

    # verify-paper sample sizes
    VERIFY_TAME_SAMPLES: int = 20
    VERIFY_TAME_MAX_DIM: int = 4
    VERIFY_TAME_BOX: int = 3
    VERIFY_TAME_NMAX: int = 3
    VERIFY_EULER_PAIRS: int = 500
    VERIFY_REFLECTION_PAIRS: int = 100
    VERIFY_ROUND_TRIPS: int = 50
    VERIFY_THIN_QUIVERS: int = 30
    VERIFY_THIN_REPS: int = 50
    VERIFY_THIN_BOX: int = 2
    VERIFY_SHRINK_INSTANCES: int = 20
    VERIFY_SHRINK_BOX: int = 2


settings = Settings()
