from __future__ import annotations

import logging
import logging.config
from datetime import datetime
from pathlib import Path
from typing import Optional, Union

from rich.console import Console
from rich.logging import RichHandler

PROJECT_ROOT = Path(__file__).resolve().parents[3]


def stderr_rich_handler(**kwargs) -> RichHandler:
    """Rich console handler bound to stderr so stdout only carries program output."""
    return RichHandler(console=Console(stderr=True), show_path=False, **kwargs)


def setup_logging(
    file_log_level: str = 'INFO',
    console_log_level: str = 'WARNING',
    log_dir: Optional[Union[Path, str]] = None,
    log_to_file: bool = False,
) -> Optional[Path]:
    """
    Configures logging for the entire application.

    Console output goes through Rich on stderr; the rotating file handler is
    only attached when ``log_to_file`` is set. Returns the log file path, if any.
    """
    log_filename: Optional[Path] = None

    LOGGING_CONFIG = {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'file_formatter': {
                'format': '%(asctime)s - %(levelname)s - %(message)s',
            },
            'console_formatter': {
                'format': '%(message)s',
            },
        },
        'handlers': {
            'console': {
                '()': stderr_rich_handler,
                'level': console_log_level.upper(),
                'formatter': 'console_formatter',
            },
        },
        'root': {
            'level': 'DEBUG',
            'handlers': ['console'],
        },
    }

    if log_to_file:
        log_path = Path(log_dir or (PROJECT_ROOT / "logs"))
        log_path.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        log_filename = log_path / f"archimedean_converse_{timestamp}.log"
        LOGGING_CONFIG['handlers']['file'] = {
            'class': 'logging.handlers.RotatingFileHandler',
            'level': file_log_level.upper(),
            'formatter': 'file_formatter',
            'filename': log_filename,
            'maxBytes': 10*1024*1024,
            'backupCount': 5,
            'encoding': 'utf-8',
        }
        LOGGING_CONFIG['root']['handlers'].append('file')

    logging.config.dictConfig(LOGGING_CONFIG)
    if log_filename is not None:
        logging.getLogger().info(f"Logging configured. Log file at: {log_filename}")
    return log_filename


logger = logging.getLogger("archimedean_converse")
