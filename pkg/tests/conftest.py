import pytest
from hypothesis import HealthCheck, settings

from torusfib import relations as rel
from torusfib import surface as sf

PROPERTY_CASES = 10_000

settings.register_profile(
    "property",
    max_examples=PROPERTY_CASES,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)


@pytest.fixture(scope="session")
def ctx():
    return rel.Context(sf.DATA_DIR)


@pytest.fixture(scope="session")
def model(ctx):
    return ctx.model("sigma_2_2")


@pytest.fixture(scope="session")
def capped(ctx):
    return ctx.model("sigma_2_1")


@pytest.fixture(scope="session")
def closed(ctx):
    return ctx.model("sigma_3_0")


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
