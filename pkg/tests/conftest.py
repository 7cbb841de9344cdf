"""Shared fixtures: the explicit degree-(10, 23, 25) map and derived
values are expensive enough to build once per session."""

from __future__ import annotations

import pytest

from tamedeg import build_example_map, find_elementary_reduction, verify_example


@pytest.fixture(scope="session")
def example_map():
    return build_example_map()


@pytest.fixture(scope="session")
def example_reduction(example_map):
    return find_elementary_reduction(example_map, 1, 50)


@pytest.fixture(scope="session")
def example_report(example_map):
    return verify_example(example_map)
