import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from normring import catalog

settings.register_profile(
    "default",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(0)


SAMPLE_ORDERS = {
    "Z[i]": catalog.gaussian,
    "Z[2i]": catalog.z2i,
    "R2": catalog.r2,
    "R3": catalog.r3,
    "R4": catalog.r4,
}


@pytest.fixture(params=sorted(SAMPLE_ORDERS))
def sample_order(request):
    return SAMPLE_ORDERS[request.param]()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
