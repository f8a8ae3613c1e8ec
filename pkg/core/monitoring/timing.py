"""
Operation timing

Decorator that logs the wall time of heavy numerical operations.
"""

import time
from functools import wraps
from typing import Any, Callable, TypeVar

from core.logging import get_logger

logger = get_logger("monitoring")

F = TypeVar("F", bound=Callable[..., Any])


def track_duration(operation: str) -> Callable[[F], F]:
    """
    Log ``duration_ms`` for every call at debug level.

    Usage:
        @track_duration("eigendecompose")
        def eigendecompose(op): ...
    """

    def decorator(func: F) -> F:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start = time.perf_counter()
            status = "success"
            try:
                return func(*args, **kwargs)
            except Exception:
                status = "error"
                raise
            finally:
                elapsed = (time.perf_counter() - start) * 1000.0
                logger.debug(f"{operation} finished", operation=operation, status=status, duration_ms=round(elapsed, 3))

        return wrapper  # type: ignore[return-value]

    return decorator
