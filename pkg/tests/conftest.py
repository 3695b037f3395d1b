from pathlib import Path

import pytest

from bcnkit.compiler import algebraic_form
from bcnkit.netlang import parse_network

MODELS = Path(__file__).resolve().parent.parent / "models"


def load_model(name):
    return parse_network((MODELS / name).read_text())


@pytest.fixture(scope="session")
def toy_model():
    return load_model("toy.bcn")


@pytest.fixture(scope="session")
def toy_form(toy_model):
    return algebraic_form(toy_model)


@pytest.fixture(scope="session")
def lac_case1_form():
    return algebraic_form(load_model("lac_case1.bcn"))


@pytest.fixture(scope="session")
def lac_case2_form():
    return algebraic_form(load_model("lac_case2.bcn"))
