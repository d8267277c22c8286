"""Shared fixtures for the test suite"""

import os
import sys

import pytest

# Imports are absolute from the project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.core.group import GroupSpec  # noqa: E402
from src.harness.reference import load_reference_values  # noqa: E402


@pytest.fixture(scope='session')
def references():
    """Published values keyed '<group>.<name>'."""
    return load_reference_values()


@pytest.fixture
def h1():
    return GroupSpec(1, 0)


@pytest.fixture
def h1r2():
    return GroupSpec(1, 2)


@pytest.fixture
def h2r1():
    return GroupSpec(2, 1)


@pytest.fixture
def h3r1():
    return GroupSpec(3, 1)
