from random import Random

import pytest

from asmdpp.algebra import MPoly
from asmdpp.asm import validate_asm
from asmdpp.dpp import validate_dpp
from asmdpp.genfun import GF_VARIABLES

# the order matches the terms of the generating function below
ASMS_3 = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
    [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    [[0, 1, 0], [1, -1, 1], [0, 1, 0]]
]
DPPS_3 = [
    [],
    [[3, 3], [2]],
    [[2]],
    [[3, 3]],
    [[3]],
    [[3, 2]],
    [[3, 1]]
]
Z3_TERMS = {
    (0, 0, 0, 0): 1,
    (3, 0, 2, 2): 1,
    (1, 0, 0, 1): 1,
    (2, 0, 2, 1): 1,
    (1, 0, 1, 0): 1,
    (2, 0, 1, 2): 1,
    (1, 1, 1, 1): 1
}
EXAMPLE_ASM = [
    [0, 0, 0, 1, 0, 0],
    [0, 1, 0, -1, 1, 0],
    [1, -1, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 1, 0, -1, 0, 1],
    [0, 0, 0, 1, 0, 0]
]
EXAMPLE_DPP = [[6, 6, 6, 5, 2], [4, 4, 1], [3]]


@pytest.fixture(scope='session')
def asms_3():
    return [validate_asm(rows) for rows in ASMS_3]


@pytest.fixture(scope='session')
def dpps_3():
    return [validate_dpp(rows, 3) for rows in DPPS_3]


@pytest.fixture(scope='session')
def example_asm():
    return validate_asm(EXAMPLE_ASM)


@pytest.fixture(scope='session')
def example_dpp():
    return validate_dpp(EXAMPLE_DPP, 6)


@pytest.fixture(scope='session')
def z3():
    return MPoly.from_terms(Z3_TERMS, GF_VARIABLES)


@pytest.fixture(scope='session')
def variables():
    return {name: MPoly.var(name) for name in GF_VARIABLES}


@pytest.fixture
def rng():
    return Random(0)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv('REFINE_CACHE_DIR', str(tmp_path / 'cache'))
    return tmp_path / 'cache'
