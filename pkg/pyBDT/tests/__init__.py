import pytest
from pyBDT import numpy
from .utils import seeded_rng, reduced_grid
