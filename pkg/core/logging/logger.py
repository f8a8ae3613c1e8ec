"""
Structured Logging

Loguru-backed logger with bound keyword context. Log lines go to stderr so
that standard output stays free for command summaries.
"""

import json
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from loguru import logger

from core.config import settings


class StructuredLogger:
    """
    Structured logger shared by the library and the CLI.

    Features:
    - JSON output for log aggregation (production or ``log_format=json``)
    - Colorized human-readable output otherwise
    - Keyword context attached through ``logger.bind``
    """

    def __init__(self, name: Optional[str] = None, level: Optional[str] = None):
        self.name = name or settings.app_name
        self.logger = logger.bind(component=self.name)
        if name is None:
            self.configure(level or settings.log_level)

    @classmethod
    def configure(cls, level: str, json_output: Optional[bool] = None) -> None:
        """(Re)install the single stderr handler at ``level``."""
        if json_output is None:
            json_output = settings.json_logs

        logger.remove()
        if json_output:
            logger.add(sys.stderr, format=cls._json_formatter, level=level.upper())
        else:
            logger.add(
                sys.stderr,
                format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{extra[component]}</cyan> - <level>{message}</level>",
                level=level.upper(),
                colorize=True
            )

    @staticmethod
    def _json_formatter(record: Dict[str, Any]) -> str:
        log_entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record["level"].name,
            "logger": record["extra"].get("component", record["name"]),
            "function": record["function"],
            "line": record["line"],
            "message": record["message"],
        }

        context = {k: v for k, v in record["extra"].items() if k != "component"}
        if context:
            log_entry["context"] = context

        # loguru treats the returned string as a template
        return json.dumps(log_entry, default=str).replace("{", "{{").replace("}", "}}") + "\n"

    def info(self, message: str, **context: Any) -> None:
        """Log info message"""
        self.logger.bind(**context).info(message)

    def warning(self, message: str, **context: Any) -> None:
        """Log warning message"""
        self.logger.bind(**context).warning(message)

    def error(self, message: str, **context: Any) -> None:
        """Log error message"""
        self.logger.bind(**context).error(message)

    def debug(self, message: str, **context: Any) -> None:
        """Log debug message"""
        self.logger.bind(**context).debug(message)

    def run_event(self, command: str, outcome: str, **details: Any) -> None:
        """
        Log one structured line per CLI invocation.

        Args:
            command: Subcommand name (e.g. "denoise")
            outcome: "success" or the error code
            **details: Seeds, parameters and output paths
        """
        self.logger.bind(command=command, outcome=outcome, **details).info(f"RUN: {command}")


# Global logger instance
app_logger = StructuredLogger()


def get_logger(name: Optional[str] = None) -> StructuredLogger:
    """Get application logger, optionally tagged with a module name"""
    if name is None:
        return app_logger
    return StructuredLogger(name)
