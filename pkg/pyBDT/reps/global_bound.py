"""
Evaluators for the automorphic multiplicity bound

The Tate-Shafarevich cardinalities are inputs; only the split case is
decided here, where every group in the bound vanishes.
"""
from ..errors import InvalidDatum, Unsupported
from ..bd import r_group_decomposition

import logging

logger = logging.getLogger('bdt.global_bound')

CARDINALITIES = ['ker_sha', 'sha_n', 'sha_T_index', 'sha_That_index']

class GlobalBoundInput(object):
    """
    The data entering the multiplicity bound of a global torus

    Parameters
    ----------
    is_split : bool
    ker_sha : int, optional
        ``#Ker(Sha^1(R) -> Sha^1(T x T^))``
    sha_n : int, optional
        ``#Sha^1(T x T^)[n]``
    sha_T_index, sha_That_index : int, optional
        the indices of the images in ``Sha^1(T)[n]`` and ``Sha^1(T^)[n]``
        used by :func:`stage_bound`
    """
    def __init__(self, is_split, ker_sha=None, sha_n=None, sha_T_index=None, sha_That_index=None):
        if not isinstance(is_split, bool):
            raise InvalidDatum("is_split must be a boolean, got %r" %(is_split,))
        self.is_split = is_split
        for name, val in zip(CARDINALITIES, [ker_sha, sha_n, sha_T_index, sha_That_index]):
            if val is not None:
                if isinstance(val, bool) or int(val) != val or val < 1:
                    raise InvalidDatum("%s must be a positive integer, got %r" %(name, val))
                val = int(val)
            setattr(self, name, val)

    @classmethod
    def from_dict(cls, d):
        if 'is_split' not in d:
            raise InvalidDatum("the bound input needs 'is_split'")
        return cls(d['is_split'], **dict((k, d[k]) for k in CARDINALITIES if k in d))

    def to_dict(self):
        d = {'is_split': self.is_split}
        for k in CARDINALITIES:
            if getattr(self, k) is not None:
                d[k] = getattr(self, k)
        return d


def global_multiplicity_bound(inp):
    """
    The bound ``#Ker(Sha^1(R) -> Sha^1(T x T^)) * #Sha^1(T x T^)[n]``; exactly
    1 for split tori
    """
    if inp.is_split:
        return 1
    if inp.ker_sha is None or inp.sha_n is None:
        raise InvalidDatum("a nonsplit bound needs both 'ker_sha' and 'sha_n'")
    return inp.ker_sha * inp.sha_n

def stage_bound(inp):
    """
    The product of the three indices bounding ``T_F Z~_A`` inside its
    centralizer
    """
    if inp.is_split:
        return 1
    missing = [k for k in ('sha_T_index', 'sha_That_index', 'ker_sha') if getattr(inp, k) is None]
    if missing:
        raise InvalidDatum("the stage bound needs %s" %", ".join(missing))
    return inp.sha_T_index * inp.sha_That_index * inp.ker_sha

def split_multiplicity_argument(d):
    """
    The vanishing chain behind multiplicity one for a split torus

    Returns
    -------
    dict
        ``r`` and ``factors`` of ``R = G_m^r x prod mu_{n_i}``, and the
        groups shown to vanish with the reason for each
    """
    if not d.torus.is_split:
        raise Unsupported("the vanishing chain is only available for split tori")
    r, factors = r_group_decomposition(d)
    steps = [{'group': 'Sha^1(T)', 'vanishes': True, 'reason': 'Hilbert 90 for G_m^%d' %d.rank},
             {'group': 'Sha^1(T^)', 'vanishes': True, 'reason': 'Hilbert 90 for G_m^%d' %d.rank},
             {'group': 'Sha^1(G_m^%d)' %r, 'vanishes': True, 'reason': 'Hilbert 90'}]
    for m in factors:
        steps.append({'group': 'Sha^1(mu_%d)' %m, 'vanishes': True,
                      'reason': 'Grunwald-Wang: F contains the %d-th roots of unity' %m})
    return {'r': r, 'factors': factors, 'steps': steps, 'bound': 1}
