"""
Unit Tests for Operation Timing
"""

import json

import pytest
from loguru import logger as loguru_logger

from core.logging import StructuredLogger
from core.monitoring import track_duration


@pytest.fixture
def json_records():
    lines = []
    handler = loguru_logger.add(lines.append, format=StructuredLogger._json_formatter, level="DEBUG")
    yield lines
    loguru_logger.remove(handler)


@pytest.mark.unit
class TestTrackDuration:
    """Test the duration decorator"""

    def test_logs_success(self, json_records):
        @track_duration("square")
        def square(x):
            return x * x

        assert square(3) == 9
        entry = json.loads(str(json_records[-1]))
        assert entry["level"] == "DEBUG"
        assert entry["context"]["operation"] == "square"
        assert entry["context"]["status"] == "success"
        assert entry["context"]["duration_ms"] >= 0.0

    def test_logs_error_and_reraises(self, json_records):
        @track_duration("boom")
        def boom():
            raise ValueError("no")

        with pytest.raises(ValueError):
            boom()
        assert json.loads(str(json_records[-1]))["context"]["status"] == "error"

    def test_preserves_metadata(self):
        @track_duration("named")
        def named():
            """docstring"""

        assert named.__name__ == "named"
        assert named.__doc__ == "docstring"
