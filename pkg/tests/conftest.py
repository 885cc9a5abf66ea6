import pytest
import os
from unittest.mock import patch
from a4_polytopes.config import PolytopeConfig
from a4_polytopes.core.weyl import Weight


@pytest.fixture(autouse=True)
def clean_env():
    """Keep A4_POLYTOPES_* variables from the developer shell out of the tests"""
    env = {k: v for k, v in os.environ.items() if not k.startswith("A4_POLYTOPES_")}
    with patch.dict(os.environ, env, clear=True):
        yield


@pytest.fixture
def test_config():
    """Return a test PolytopeConfig"""
    return PolytopeConfig(digits=8, exact=False, output_format="json", log_level="DEBUG")


@pytest.fixture
def mock_env_config():
    """Return a PolytopeConfig from environment variables"""
    with patch.dict(os.environ, {
        "A4_POLYTOPES_DIGITS": "6",
        "A4_POLYTOPES_EXACT": "true",
        "A4_POLYTOPES_FORMAT": "off",
        "A4_POLYTOPES_LOG_LEVEL": "info",
    }):
        yield PolytopeConfig.from_env()


@pytest.fixture(scope="session")
def truncated():
    return Weight.of(1, 1, 0, 0)


@pytest.fixture(scope="session")
def cantellated():
    return Weight.of(1, 0, 1, 0)


@pytest.fixture(scope="session")
def omnitruncated():
    return Weight.of(1, 1, 1, 1)
