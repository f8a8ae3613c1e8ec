"""
Monitoring Module

Timing instrumentation for heavy numerical operations.
"""

from core.monitoring.timing import track_duration

__all__ = ["track_duration"]
