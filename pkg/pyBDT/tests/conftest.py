from pyBDT.bd import BDDatum
from pyBDT.localfield import LocalFieldSpec
from pyBDT.cover import CoverSpec
from pyBDT.reps import FiniteQuotient

import pytest

@pytest.fixture(scope='session')
def field():
    """
    The field with q = 5 and n = 4
    """
    return LocalFieldSpec(5, 4)

@pytest.fixture(scope='session')
def datum():
    return BDDatum.split([[1]], 4)

@pytest.fixture(scope='session')
def cover(field, datum):
    return CoverSpec(field, datum)

@pytest.fixture(scope='module')
def quotient(cover):
    return FiniteQuotient(cover)
