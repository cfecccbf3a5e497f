import sys

import numpy as np
import pytest

from circlegroup import build_partition, epsilon_max, uniform_covering


@pytest.fixture(scope="session")
def partition3():
    return build_partition(uniform_covering(3))


@pytest.fixture(scope="session")
def eps3(partition3):
    return epsilon_max(partition3, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)



def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS):
            terminalreporter.write_line(line)
