"""
Building the reports of each command, and rendering them as JSON or as
``pandas`` tables

Reports are plain dictionaries of JSON types; lists are in a canonical
order so identical input gives byte-identical output.
"""
from ..bd import finite_invariants, zind_lattice, index_bounds, xqn_isomorphism
from ..cover import center
from ..hecke import structure_table
from ..reps import global_multiplicity_bound, stage_bound, split_multiplicity_argument, spherical_fixed_dim

import json
import pandas as pd

def _factors(G):
    return [int(d) for d in G.invariant_factors]

def invariants_report(d):
    """
    The lattice invariants of a datum
    """
    sharp = d.sharp
    fin = finite_invariants(d)
    bounds = index_bounds(d)
    xqn_isomorphism(d)
    out = {'rank': d.rank,
           'n': d.n,
           'split': d.torus.is_split,
           'B': d.B.tolist(),
           'Ysharp': sharp.Ysharp.to_list(),
           'Xsharp': sharp.Xsharp.to_list(),
           'Xsharp_denominator': sharp.Xsharp.denominator,
           'Lambda': d.Lambda.to_list(),
           'mu': _factors(fin.mu),
           'mu_hat': _factors(fin.mu_hat),
           'nu': _factors(fin.nu),
           'nu_hat': _factors(fin.nu_hat),
           't_n': _factors(fin.t_n),
           't_hat_n': _factors(fin.t_hat_n),
           'zind': zind_lattice(d),
           'h1_n': bounds.h1_n,
           'rt_ratio': bounds.rt_ratio,
           'cind_bound': bounds.h1_n * bounds.rt_ratio}
    if d.torus.is_split:
        argument = split_multiplicity_argument(d)
        out['r_group'] = {'r': argument['r'], 'factors': argument['factors']}
        out['vanishing_chain'] = argument['steps']
    return out

def center_report(cover):
    """
    The center, core and canonical Lagrangian decomposition of a split cover
    """
    data = center(cover)
    pair = data.lagrangian()
    out = data.to_dict()
    out['lagrangian'] = {'L': [list(x) for x in pair.L_gens], 'Lstar': [list(y) for y in pair.Lstar_gens]}
    return out

def hecke_report(spec, bound):
    return {'Lambda': spec.Lambda.to_list(), 'bound': bound, 'n': spec.n,
            'entries': structure_table(spec, bound)}

def irrep_report(spec, pi):
    out = pi.to_dict()
    out['spherical_dim'] = spherical_fixed_dim(spec, pi)
    out['window'] = pi.quotient.window
    return out

def hilbert_report(field, a, b):
    return field.hilbert(a, b).to_dict()

def bound_report(inp):
    out = {'bound': global_multiplicity_bound(inp)}
    if not inp.is_split and all(getattr(inp, k) is not None for k in ('sha_T_index', 'sha_That_index', 'ker_sha')):
        out['stage_bound'] = stage_bound(inp)
    return out

#------------------------------------------------------------------------------
# rendering
#------------------------------------------------------------------------------
TABLE_KEYS = ['entries', 'character', 'properties', 'vanishing_chain']

def to_json(report):
    """
    Render a report as JSON with sorted keys
    """
    return json.dumps(report, sort_keys=True, indent=2)

def to_table(report):
    """
    Render a report as text tables: scalar fields as a two-column table,
    then any list of records as its own table
    """
    scalars = [(k, report[k] if not isinstance(report[k], (list, dict)) else json.dumps(report[k], sort_keys=True))
               for k in sorted(report) if k not in TABLE_KEYS]
    parts = []
    if scalars:
        parts.append(pd.DataFrame(scalars, columns=['field', 'value']).to_string(index=False))
    for k in TABLE_KEYS:
        if k in report and report[k]:
            frame = pd.DataFrame([dict((c, json.dumps(v) if isinstance(v, (list, dict)) else v)
                                       for c, v in row.items()) for row in report[k]])
            frame = frame[sorted(frame.columns)]
            parts.append("%s:\n%s" %(k, frame.to_string(index=False)))
    return "\n\n".join(parts)
