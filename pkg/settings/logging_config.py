from __future__ import annotations

import logging
from logging.config import dictConfig
from typing import Optional

# chatty at INFO during symbolic work
QUIET_LOGGERS = ("sympy",)


def configure_logging(level: int | str = logging.INFO, log_file: Optional[str] = None) -> None:
    """Console logging on stderr; stdout carries command reports only.

    With ``log_file`` every record at DEBUG and above is also appended there,
    which keeps per-weight scan detail without flooding the console.
    """
    handlers = {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "standard",
            "level": level,
            "stream": "ext://sys.stderr",
        }
    }
    if log_file:
        handlers["file"] = {
            "class": "logging.FileHandler",
            "formatter": "standard",
            "level": logging.DEBUG,
            "filename": log_file,
            "encoding": "utf-8",
        }
    dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "standard": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"}
            },
            "handlers": handlers,
            "loggers": {
                "": {"handlers": list(handlers), "level": logging.DEBUG if log_file else level},
                **{
                    name: {"handlers": ["console"], "level": logging.WARNING, "propagate": False}
                    for name in QUIET_LOGGERS
                },
            },
        }
    )
