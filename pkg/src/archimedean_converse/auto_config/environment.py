import os
import sys
import logging
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from archimedean_converse.auto_config.logging_config import PROJECT_ROOT, logger, setup_logging

LEVEL_MAP = {
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR,
    'CRITICAL': logging.CRITICAL
}

DEFAULT_T_GRID = "0,1/2,1,3/2,2"


def load_env_file(env_path: Optional[Path] = None) -> bool:
    """
    Load environment variables from ``config/.env`` under the project root.

    Returns:
        True if a .env file was found and loaded, False otherwise.
    """
    env_path = env_path or (PROJECT_ROOT / "config" / ".env")

    if not env_path.exists():
        return False

    try:
        return load_dotenv(dotenv_path=env_path, override=True)
    except Exception as e:
        logger.warning(f"Could not load .env file from {env_path}: {e}")
        return False


class Config:
    def __init__(self) -> None:
        self.env_loaded = load_env_file()

        # Logging Configuration
        self.console_log_level = self._get_level('LOG_LEVEL', 'WARNING')
        self.file_log_level = self._get_level('FILE_LOG_LEVEL', 'INFO')
        self.log_to_file = self._get_env_var('LOG_TO_FILE', default='false').lower() == 'true'
        log_dir = self._get_env_var('LOG_DIR')
        self.log_dir: Optional[Path] = Path(log_dir) if log_dir else None

        setup_logging(
            file_log_level=self.file_log_level,
            console_log_level=self.console_log_level,
            log_dir=self.log_dir,
            log_to_file=self.log_to_file,
        )

        # Worker pool and numerics
        self.max_workers = self._get_int('MAX_WORKERS', 4)
        self.eval_dps = self._get_int('EVAL_DPS', 30)

        output_dir = self._get_env_var('OUTPUT_DIR')
        self.output_dir = Path(output_dir) if output_dir else PROJECT_ROOT / "data"

        # Default search bounds
        self.default_max_n = self._get_int('DEFAULT_MAX_N', 3)
        self.default_t_grid = self._get_env_var('DEFAULT_T_GRID', default=DEFAULT_T_GRID)

        self._validate_config()

    def _get_env_var(self, key: str, default: str = '') -> str:
        """
        Args:
            key: Environment variable key
            default: Default value if not set
        """

        value = os.environ.get(key)
        return value if value is not None else default

    def _get_int(self, key: str, default: int) -> int:
        raw = self._get_env_var(key, default=str(default))
        try:
            return int(raw)
        except (ValueError, TypeError):
            logger.warning(f"Invalid {key} value {raw!r}. Using default: {default}")
            return default

    def _get_level(self, key: str, default: str) -> str:
        level = self._get_env_var(key, default=default).upper()
        if level not in LEVEL_MAP:
            # logging is not configured yet, so this one goes to stderr directly
            print(f"Warning: Invalid {key}: {level}. Using {default}.", file=sys.stderr)
            return default
        return level

    def _validate_config(self) -> None:
        """Validate configuration values with fallbacks for invalid values."""
        if self.max_workers <= 0:
            logger.warning(f"Invalid MAX_WORKERS: {self.max_workers}. Using 4.")
            self.max_workers = 4

        if self.eval_dps < 20:
            logger.warning(f"EVAL_DPS={self.eval_dps} is too low for the 1e-10 accuracy target. Using 20.")
            self.eval_dps = 20

        if self.default_max_n < 0:
            logger.warning(f"Invalid DEFAULT_MAX_N: {self.default_max_n}. Using 3.")
            self.default_max_n = 3

        if not self.default_t_grid.strip():
            logger.warning("Empty DEFAULT_T_GRID. Using the standard grid.")
            self.default_t_grid = DEFAULT_T_GRID

    def describe(self) -> List[str]:
        """Current configuration as printable lines."""
        return [
            "Archimedean Converse Configuration:",
            f"   .env loaded: {self.env_loaded}",
            f"   Console Log Level: {self.console_log_level}",
            f"   File Logging: {self.log_to_file} (level {self.file_log_level}, dir {self.log_dir or PROJECT_ROOT / 'logs'})",
            f"   Max Workers: {self.max_workers}",
            f"   Eval Precision: {self.eval_dps} digits",
            f"   Output Dir: {self.output_dir}",
            f"   Default Bounds: maxN={self.default_max_n}, tGrid={self.default_t_grid}",
        ]


config = Config()


def get_max_workers() -> int:
    """Get the configured thread-pool size."""
    return config.max_workers


def get_eval_dps() -> int:
    """Get the mpmath working precision in decimal digits."""
    return config.eval_dps


def get_output_dir() -> Path:
    """Get the root directory for saved reports and transcripts."""
    return config.output_dir


def get_default_bounds_spec() -> tuple:
    """Get (maxN, tGrid text) used when the CLI is not given explicit bounds."""
    return config.default_max_n, config.default_t_grid
