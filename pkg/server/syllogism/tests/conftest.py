from fractions import Fraction

import pytest

from syllogism.catalog import enumerate_all


@pytest.fixture(scope='session')
def results():
    return enumerate_all(Fraction(1, 100))


@pytest.fixture(scope='session')
def results_fine():
    return enumerate_all(Fraction(1, 1000))
