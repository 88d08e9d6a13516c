import random

import pytest

from ginv.sft import higman_thompson_matrix, nv_factors, validate


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def full_shift():
    """[k] for k >= 2: the full shift on k letters."""
    return lambda k: validate([[k]])


@pytest.fixture
def a_kr():
    return higman_thompson_matrix


@pytest.fixture
def nv():
    return nv_factors
