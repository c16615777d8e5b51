import os, random, sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from engine.config import ENGINE  # noqa: E402
from numtheory.config import NT  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(autouse=True)
def _restore_module_config():
    # the CLI pushes settings into these dicts
    engine, nt = dict(ENGINE), dict(NT)
    yield
    ENGINE.clear(); ENGINE.update(engine)
    NT.clear(); NT.update(nt)
