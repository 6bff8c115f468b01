"""Shared fixtures: a few small parabolics whose circles are worked out by hand."""

import logging

import pytest

import src.audits  # noqa: F401  (registers the audits)
from src.core.models import named_model
from src.core.parabolic import make_parabolic
from src.core.root_system import Root, build_from_name


@pytest.fixture(autouse=True)
def _drop_cli_log_handlers():
    """The CLI points a stderr handler at the captured stream; remove it after each test."""
    yield
    root = logging.getLogger()
    for handler in root.handlers[:]:
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)


@pytest.fixture
def gr24():
    """Gr(2, 4) = A3 with node 2 crossed."""
    return named_model("grassmannian", (2, 4))


@pytest.fixture
def gr24_alpha():
    """The omitted root of the matrix entry (3, 1)."""
    return Root.of(-1, -1, 0)


@pytest.fixture
def lg2():
    """LG(2) = C2 with node 2 crossed, isomorphic to the 3-dimensional quadric."""
    return named_model("lagrangian", (2,))


@pytest.fixture
def a2_full_flag():
    return make_parabolic(build_from_name("A2"), [1, 2])
