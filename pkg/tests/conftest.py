import importlib
import random
from fractions import Fraction

import pytest

from beta_numeration.field import make_field


@pytest.fixture(scope="session")
def three_halves():
    return make_field((-3, 2))


@pytest.fixture(scope="session")
def golden():
    return make_field((-1, -1, 1))


@pytest.fixture(scope="session")
def tribonacci():
    return make_field((-1, -1, -1, 1))


@pytest.fixture(scope="session")
def gaussian():
    """x^2 + 2x + 2, beta = -1 + i"""
    return make_field((2, 2, 1))


@pytest.fixture(scope="session")
def sqrt5():
    return make_field((-5, 0, 1))


@pytest.fixture(scope="session")
def salem():
    return make_field((1, -1, -1, -1, 1))


@pytest.fixture(scope="session")
def base5():
    return make_field((-5, 1))


@pytest.fixture(scope="session")
def base_minus2():
    return make_field((2, 1))


@pytest.fixture
def rng():
    return random.Random(1729)


@pytest.fixture
def thoughts(monkeypatch):
    """Every traced event, captured through the tracer's emitter hook."""
    captured = []
    monkeypatch.setattr(importlib.import_module("beta_numeration.whisper.whisper"), "emitter", captured.append)
    return captured


@pytest.fixture
def random_element(rng):
    def make(field, bound=20):
        return field.element(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(field.degree))
    return make
