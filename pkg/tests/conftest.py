"""Shared fixtures: cached solved cases for the expensive grid sizes."""

from __future__ import annotations

import pytest

from gradedload import MaterialConfig, solve_case

_CACHE: dict = {}

# one line per acceptance criterion, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def cached_case(n: int = 100, sigma_fraction: float = 0.25, **material):
    """Solve (or reuse) a case; keyed by grid size, contour, and material."""
    key = (n, sigma_fraction, tuple(sorted(material.items())))
    if key not in _CACHE:
        _CACHE[key] = solve_case(
            MaterialConfig(**material), n=n, sigma_fraction=sigma_fraction
        )
    return _CACHE[key]


@pytest.fixture(scope="session")
def case_factory():
    return cached_case


@pytest.fixture(scope="session")
def case25():
    return cached_case(n=25)


@pytest.fixture(scope="session")
def case50():
    return cached_case(n=50)


@pytest.fixture(scope="session")
def case100():
    return cached_case(n=100)


@pytest.fixture(scope="session")
def params_default(case100):
    return case100.params
