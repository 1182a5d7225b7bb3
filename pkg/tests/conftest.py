"""Shared fixtures for the pdsum test suite"""

import logging

import pytest
from click.testing import CliRunner

PD_KEYS = ("PD_ORDER", "PD_ORACLE_ORDER", "PD_ENUM_CAP", "PD_JOBS", "PD_LOG_LEVEL")


@pytest.fixture
def runner():
    yield CliRunner()
    # the CLI points a stderr handler at the runner's captured stream
    root = logging.getLogger()
    for handler in list(root.handlers):
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)


@pytest.fixture
def clean_env(monkeypatch):
    """
    Remove PD_* settings inherited from the developer's shell.

    Each key is set before deletion so teardown also removes values a test
    loads from a .env file.
    """
    for key in PD_KEYS:
        monkeypatch.setenv(key, "")
        monkeypatch.delenv(key)
