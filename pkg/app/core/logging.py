"""
Diagnostics go to stderr so stdout can carry JSON only.
"""
import logging
import sys

from app.core import config

_configured = False


def get_logger(name: str) -> logging.Logger:
    """Get a logger under the toolkit namespace, configuring the stderr handler once."""
    global _configured
    root = logging.getLogger("app")
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        root.addHandler(handler)
        root.setLevel(config.LOG_LEVEL.upper())
        root.propagate = False
        _configured = True
    return logging.getLogger(name if name.startswith("app") else f"app.{name}")
