import os

import pytest

from flashmove.config.settings import Settings
from flashmove.gf_arith.field import get_field
from flashmove.instance_model.models import MoveSpec
from flashmove.instance_model.tools import load_example

DATA_DIR = os.path.join(os.path.dirname(__file__), "flashmove", "instance_model", "data")


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture
def gf256():
    return get_field(8)


@pytest.fixture
def example1() -> MoveSpec:
    return load_example("example1")


@pytest.fixture
def example2() -> MoveSpec:
    return load_example("example2")


@pytest.fixture
def example3() -> MoveSpec:
    return load_example("example3")


@pytest.fixture
def swap() -> MoveSpec:
    """Two single-page blocks exchanging their data"""
    return MoveSpec.from_block_permutation([2, 1])


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in list(os.environ):
        if name.startswith("FLASHMOVE_"):
            monkeypatch.delenv(name, raising=False)
