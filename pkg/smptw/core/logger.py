# smptw/core/logger.py
# Logger initialization for the CLI and for library users who opt in
# - Level from --log-level or LOG_LEVEL
# - Console sink on stderr (stdout may carry CSV output)
# - LOG_TO_FILE adds rotating system.log (INFO+) and error.log (ERROR+) under LOG_DIR
# - Fallback: if the log directory or a file sink fails, console output remains

import sys
from pathlib import Path
from typing import Optional

from loguru import logger

from smptw.config import settings

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"

# file name -> minimum level
FILE_SINKS = {"system.log": "INFO", "error.log": "ERROR"}


def _add_file_sink(path: Path, level: str) -> bool:
    try:
        logger.add(path, level=level, rotation="5 MB", retention=10, encoding="utf-8", format=FILE_FORMAT)
    except Exception as e:
        logger.error(f"[Logger] cannot open {path}: {e}")
        return False
    return True


def setup_logger(level: Optional[str] = None, to_file: Optional[bool] = None):
    """
    Replace every loguru sink with the smptw ones and enable the package's records.

    :param level: console level (DEBUG / INFO / WARNING / ERROR)
    :param to_file: override settings.LOG_TO_FILE
    """
    logger.remove()
    logger.enable("smptw")

    log_level = (level or settings.LOG_LEVEL).upper()
    logger.add(sys.stderr, level=log_level, colorize=True, format=CONSOLE_FORMAT)

    if not (settings.LOG_TO_FILE if to_file is None else to_file):
        return logger

    log_dir = Path(settings.LOG_DIR or "logs")
    try:
        log_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        logger.error(f"[Logger] cannot create {log_dir}, console only: {e}")
        return logger

    opened = [name for name, sink_level in FILE_SINKS.items() if _add_file_sink(log_dir / name, sink_level)]
    logger.debug(f"[Logger] level={log_level}, files={opened} in {log_dir}")
    return logger
