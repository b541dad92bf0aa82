import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from covrad.code import LinearCode
from covrad.gf import gf

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES = []

TERNARY63_H = [
    [0, 0, 2, 1, 0, 0],
    [0, 1, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 1],
]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def ternary63_code():
    return LinearCode.from_parity(gf(3), TERNARY63_H)


@pytest.fixture
def hamming74():
    H = [
        [0, 0, 0, 1, 1, 1, 1],
        [0, 1, 1, 0, 0, 1, 1],
        [1, 0, 1, 0, 1, 0, 1],
    ]
    return LinearCode.from_parity(gf(2), H)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
