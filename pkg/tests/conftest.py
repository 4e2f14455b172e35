import math

import numpy as np
import pytest

from kinemetry._accel import BACKEND_ENV
from kinemetry.convex import Arcs, Ball, Polygon, Polytope3, SupportBody2


@pytest.fixture(params=["numba", "numpy"])
def backend(request, monkeypatch):
    monkeypatch.setenv(BACKEND_ENV, request.param)
    return request.param


@pytest.fixture
def square():
    return Polygon.box()


@pytest.fixture
def disk():
    return Ball(np.zeros(2), 1.0)


@pytest.fixture
def cube():
    return Polytope3.box()


@pytest.fixture
def ball3():
    return Ball(np.zeros(3), 1.0)


@pytest.fixture
def blob():
    """Asymmetric smooth body: odd and even harmonics."""
    return SupportBody2(1.0, [0.0, 0.2 / 3, 0.1 / 8], [0.05, 0.0, 0.01])


HALF = Arcs([(0.0, math.pi)])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(LINES):
            terminalreporter.write_line(line)
