import os
import random

import pytest

from cellembed.perm import symmetric_group
from cellembed.tableau import StandardTableau


def pytest_collection_modifyitems(config, items):
    if os.environ.get("CELLEMBED_STRETCH") == "1":
        return
    skip = pytest.mark.skip(reason="set CELLEMBED_STRETCH=1 to run")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(scope="session")
def s3():
    return list(symmetric_group(3))


@pytest.fixture(scope="session")
def s4():
    return list(symmetric_group(4))


@pytest.fixture(scope="session")
def s5():
    return list(symmetric_group(5))


def assert_standard(tableau: StandardTableau):
    """Rows and columns strictly increase, the shape is a partition."""
    rows = tableau.rows
    assert all(len(a) >= len(b) for a, b in zip(rows, rows[1:]))
    for row in rows:
        assert list(row) == sorted(set(row))
    for column in tableau.columns:
        assert list(column) == sorted(set(column))
    assert len(tableau.entries) == tableau.size
