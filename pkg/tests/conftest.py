import logging
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

ROOT = Path(__file__).resolve().parent.parent

# Oracle runs and fuelled evaluations take a variable amount of time per example.
settings.register_profile("workbench", deadline=None, max_examples=100,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("workbench")


@pytest.fixture
def fixtureDir():
    return ROOT / "etc" / "fixtures" / "trio"


@pytest.fixture
def preludePath():
    return ROOT / "etc" / "programs" / "prelude.rf"


@pytest.fixture
def srcDir():
    return ROOT / "src"


@pytest.fixture
def loggerName():
    logger = logging.getLogger("workbench-tests")
    logger.propagate = True
    return logger.name
