import json
import random
from pathlib import Path

import pytest

from fastkummer.kummer import KummerPoint, ladder
from fastkummer.params import load_params

FIXTURES = Path(__file__).parent / "fixtures"

_PARAMS = {}
_FIX = {}


def params(name):
    if name not in _PARAMS:
        _PARAMS[name] = load_params(name)
    return _PARAMS[name]


def fixture_doc(name):
    if name not in _FIX:
        _FIX[name] = json.loads((FIXTURES / f"{name}.json").read_text())
    return _FIX[name]


def point(field, xs):
    return KummerPoint(field.from_hex(x) for x in xs)


def random_point(ps, rng):
    """A point on the surface of ps: a random multiple of a kernel-tuple entry."""
    base = ps.D_R[rng.randrange(10)]
    return ladder(rng.randrange(1, 3 ** ps.k), base, ps.tc)


@pytest.fixture(scope="session")
def toy3():
    return params("toy3")


@pytest.fixture(scope="session")
def toy5():
    return params("toy5")


@pytest.fixture(scope="session")
def lam128():
    return params("lambda128")


@pytest.fixture(params=["toy3", "toy5"], scope="session")
def toy(request):
    return params(request.param)


@pytest.fixture
def rng():
    return random.Random(20240601)
