"""Pytest fixtures and config."""

import os

import pytest


@pytest.fixture(autouse=True)
def env_cleanup(monkeypatch):
    """Keep the caller's HERONPAIRS_* variables out of config loading."""
    for name in list(os.environ):
        if name.startswith("HERONPAIRS_"):
            monkeypatch.delenv(name, raising=False)
    yield
