# Logging setup: a single stderr handler, so stdout stays free for reports.
import logging
import sys
from typing import Optional

from app.core.config import settings

_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
_configured = False


def configure_logging(level: Optional[str] = None) -> None:
    global _configured
    root = logging.getLogger("app")
    root.setLevel((level or settings.BRAUER_LOG_LEVEL).upper())
    if _configured:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_FORMAT))
    root.addHandler(handler)
    root.propagate = False
    _configured = True
