import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from dunklinv.liealg import make_sl  # noqa: E402


@pytest.fixture(scope="session")
def sl2():
    return make_sl(2)


@pytest.fixture(scope="session")
def sl3():
    return make_sl(3)
