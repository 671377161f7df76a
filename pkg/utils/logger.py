# utils/logger.py

import logging
import sys

from utils import config

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger("planelab")


def setup_logging(verbose: bool = False):
    """Route logs to stderr (stdout carries report lines) and optionally to a file"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if config.LOG_FILE:
        handlers.append(logging.FileHandler(config.LOG_FILE))

    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def log_event(message: str, level: int = logging.WARNING):
    logger.log(level, "[LOG] %s", message)
