"""
pdsum configuration

Settings come from the process environment, optionally seeded from a .env
file in the working directory (variables already set are never overridden).
"""

import logging
import os
from dataclasses import dataclass
from typing import Mapping, Optional

from dotenv import find_dotenv, load_dotenv

from pdsum.exceptions import ConfigError

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _read_int(env: Mapping[str, str], key: str, default: int, minimum: int) -> int:
    raw = env.get(key)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{key} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    """Runtime settings for verification orders, enumeration caps and logging"""
    order: int = 300
    oracle_order: int = 60
    enum_cap: int = 40
    jobs: int = 1
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, env: Optional[Mapping[str, str]] = None, use_dotenv: bool = True) -> "Settings":
        """
        Build settings from environment variables.

        Args:
            env: Mapping to read instead of os.environ (used by tests)
            use_dotenv: Load a .env file from the working directory first
        """
        if env is None:
            if use_dotenv:
                path = find_dotenv(usecwd=True)
                if path:
                    load_dotenv(path, override=False)
                    logger.debug("Loaded environment from %s", path)
            env = os.environ

        log_level = env.get("PD_LOG_LEVEL", cls.log_level).strip().upper() or cls.log_level
        if log_level not in LOG_LEVELS:
            raise ConfigError(f"PD_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {log_level!r}")

        return cls(
            order=_read_int(env, "PD_ORDER", cls.order, 0),
            oracle_order=_read_int(env, "PD_ORACLE_ORDER", cls.oracle_order, 0),
            enum_cap=_read_int(env, "PD_ENUM_CAP", cls.enum_cap, 0),
            jobs=_read_int(env, "PD_JOBS", cls.jobs, 1),
            log_level=log_level,
        )
