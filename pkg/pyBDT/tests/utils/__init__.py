from pyBDT import numpy
from pyBDT.bdt.selftest import Grid

def seeded_rng(seed=42):
    """
    Return a seeded ``RandomState`` so every run sees the same data
    """
    return numpy.random.RandomState(seed)

def random_matrix(rng, rows, cols, bound=5):
    return rng.randint(-bound, bound + 1, size=(rows, cols)).tolist()

def reduced_grid(symbol_convention='inverse', tame_sign=True, **overrides):
    """
    A small self-test grid; ``overrides`` replace its entries
    """
    params = {'q': [5, 7], 'n': [2], 'rank': [1], 'coeff': 1, 'samples': 5, 'bound': 1}
    params.update(overrides)
    return Grid('small', overrides=params, symbol_convention=symbol_convention, tame_sign=tame_sign)
