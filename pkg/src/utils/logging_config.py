"""
Logging configuration.
"""

import logging
import sys
from pathlib import Path
from datetime import datetime

from config.settings import LOG_LEVEL, LOG_DIR


def setup_logging():
    """Configure logging for the application.

    Console output goes to stderr so that reports printed on stdout stay
    byte-identical between runs. A dated log file is added when
    ``THW_LOG_DIR`` is set.
    """
    handlers = [logging.StreamHandler(sys.stderr)]

    if LOG_DIR:
        log_dir = Path(LOG_DIR)
        log_dir.mkdir(parents=True, exist_ok=True)
        log_file = log_dir / f"workbench_{datetime.now().strftime('%Y%m%d')}.log"
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, LOG_LEVEL.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
    )

    # Lark logs grammar construction at DEBUG
    logging.getLogger("lark").setLevel(logging.WARNING)

    logger = logging.getLogger(__name__)
    logger.info("Logging configured")
