"""Application settings and configuration"""
import logging
import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        # validate() reports it
        return -1


class Settings:
    """Application settings loaded from environment variables"""

    # Parallelism and solver limits
    COMAX_THREADS: int = _int_env("COMAX_THREADS", 1)
    COMAX_BUDGET: int = _int_env("COMAX_BUDGET", 500_000)

    # Logging
    COMAX_LOG_LEVEL: str = os.getenv("COMAX_LOG_LEVEL", "WARNING").upper()

    # Fields used by `comax sweep` when --fields is not given
    COMAX_DEFAULT_FIELDS: str = os.getenv("COMAX_DEFAULT_FIELDS", "2,3,5")

    APP_TITLE: str = "comax: comaximal graphs of Lie algebras over finite fields"

    @classmethod
    def validate(cls) -> None:
        """Validate that settings are usable"""
        if cls.COMAX_THREADS < 1:
            raise ValueError("COMAX_THREADS must be a positive integer")
        if cls.COMAX_BUDGET < 1:
            raise ValueError("COMAX_BUDGET must be a positive integer")
        if not isinstance(logging.getLevelName(cls.COMAX_LOG_LEVEL), int):
            raise ValueError(f"COMAX_LOG_LEVEL {cls.COMAX_LOG_LEVEL!r} is not a logging level")
        if not cls.COMAX_DEFAULT_FIELDS.strip():
            raise ValueError("COMAX_DEFAULT_FIELDS must list at least one field")


# Create singleton instance
settings = Settings()
