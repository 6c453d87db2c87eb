"""Tests for core/logging_config: StructuredFormatter and setup_logging."""

import json
import logging
import sys
from fractions import Fraction

from heronpairs.core.logging_config import StructuredFormatter, _exact, setup_logging


def _record(msg="hello", level=logging.INFO, exc_info=None):
    return logging.LogRecord(
        name="test",
        level=level,
        pathname="",
        lineno=0,
        msg=msg,
        args=(),
        exc_info=exc_info,
    )


def test_exact_renders_fractions():
    assert _exact(Fraction(85, 2)) == "85/2"
    assert _exact(Fraction(14)) == "14"
    assert _exact({"key": [Fraction(1, 3), 2]}) == {"key": ["1/3", 2]}


def test_structured_formatter_json():
    fmt = StructuredFormatter(use_json=True)
    out = fmt.format(_record())
    data = json.loads(out)
    assert data["message"] == "hello"
    assert data["level"] == "INFO"


def test_structured_formatter_includes_extra_as_exact_text():
    fmt = StructuredFormatter(use_json=True)
    record = _record()
    record.u = Fraction(865, 1537)
    data = json.loads(fmt.format(record))
    assert data["u"] == "865/1537"


def test_structured_formatter_key_value():
    fmt = StructuredFormatter(use_json=False)
    out = fmt.format(_record("warn", logging.WARNING))
    assert "warn" in out
    assert "WARNING" in out


def test_structured_formatter_with_exc_info():
    fmt = StructuredFormatter(use_json=True)
    try:
        raise ValueError("test error")
    except ValueError:
        exc_info = sys.exc_info()
    data = json.loads(fmt.format(_record("failed", logging.ERROR, exc_info)))
    assert "exception" in data
    assert "test error" in data["exception"]


def test_setup_logging_level_warning():
    setup_logging(level="WARNING", use_json=False)
    assert logging.getLogger().level == logging.WARNING


def test_setup_logging_adds_stderr_handler_when_none():
    root = logging.getLogger()
    original_handlers = root.handlers.copy()
    root.handlers.clear()
    try:
        setup_logging(level="DEBUG", use_json=False)
        assert len(root.handlers) == 1
        handler = root.handlers[0]
        assert isinstance(handler.formatter, StructuredFormatter)
        assert handler.stream is sys.stderr
        assert root.level == logging.DEBUG
    finally:
        root.handlers.clear()
        root.handlers.extend(original_handlers)
