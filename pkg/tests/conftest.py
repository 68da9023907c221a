"""Shared corpora, cached once per session."""

from __future__ import annotations

import os

import pytest

from tridom.generators import (
    enumerate_near_triangulations,
    enumerate_skeletal,
)

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(scope="session")
def skeletal_corpus_7():
    return enumerate_skeletal(7)


@pytest.fixture(scope="session")
def skeletal_corpus_9():
    return enumerate_skeletal(9)


@pytest.fixture(scope="session")
def near_corpus_8():
    return enumerate_near_triangulations(8)


@pytest.fixture(scope="session")
def near_corpus_9():
    return enumerate_near_triangulations(9)
