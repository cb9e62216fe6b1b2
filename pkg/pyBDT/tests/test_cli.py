from . import pytest

from pyBDT.bdt.bdt import BDTDriver, EXIT_OK, EXIT_FAILED, EXIT_SCHEMA, EXIT_UNSUPPORTED
from pyBDT.bdt import schema
from pyBDT.bdt import report as report_module
from pyBDT.bdt.util import bdt_parser

import json
import os
import re
from six import StringIO

def write_doc(tmpdir, doc, name='input.json'):
    path = tmpdir.join(name)
    path.write(json.dumps(doc))
    return str(path)

def run(tmpdir, command, doc=None, *extra):
    """
    Run a subcommand quietly, returning the exit code and the output
    """
    args = [command]
    if doc is not None:
        args += ['-i', write_doc(tmpdir, doc)]
    args += list(extra) + ['--silent']
    driver = BDTDriver.create(args)
    stream = StringIO()
    code = driver.run(stream)
    return code, stream.getvalue()

def test_invariants(tmpdir):
    code, out = run(tmpdir, 'invariants', {'rank': 1, 'C': [[1]], 'n': 4})
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['Ysharp'] == [[2]]
    assert report['zind'] == 2
    assert report['mu'] == [2]
    assert report['nu_hat'] == [2]
    assert report['r_group'] == {'r': 1, 'factors': [2]}
    chain = report['vanishing_chain']
    assert all(step['vanishes'] for step in chain)
    assert chain[-1]['group'] == 'Sha^1(mu_2)'

    code, out = run(tmpdir, 'invariants', {'rank': 1, 'C': [[1]], 'n': 4}, '--format', 'table')
    assert code == EXIT_OK
    assert 'vanishing_chain:' in out

    # no vanishing chain for a nonsplit torus
    doc = {'rank': 2, 'frobenius': [[0, 1], [1, 0]], 'order': 2, 'C': [[1, 0], [0, 1]], 'n': 2}
    code, out = run(tmpdir, 'invariants', doc)
    assert code == EXIT_OK
    assert 'vanishing_chain' not in json.loads(out)

def test_deterministic(tmpdir):
    doc = {'rank': 2, 'C': [[1, 1], [0, 1]], 'n': 2}
    outputs = [run(tmpdir, 'invariants', doc)[1] for _ in range(2)]
    assert outputs[0] == outputs[1]
    assert outputs[0].endswith("}\n")

def test_hilbert(tmpdir):
    doc = {'q': 7, 'n': 2, 'a': {'val': 1, 'unit_exp': 0}, 'b': {'val': 1, 'unit_exp': 0}}
    code, out = run(tmpdir, 'hilbert', doc)
    assert code == EXIT_OK
    assert json.loads(out) == {'zeta_exponent': 1}

def test_center(tmpdir):
    code, out = run(tmpdir, 'center', {'q': 5, 'rank': 1, 'C': [[1]], 'n': 4})
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['zind'] == 2
    assert report['cind'] == 1
    assert 'lagrangian' in report

def test_hecke_table(tmpdir):
    code, out = run(tmpdir, 'hecke-table', {'q': 7, 'rank': 1, 'C': [[1]], 'n': 2}, '--bound', '1')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['Lambda'] == [[1]]
    assert len(report['entries']) == 9
    entry = [e for e in report['entries'] if e['y1'] == [1] and e['y2'] == [1]][0]
    assert entry['zeta_exponent'] == 1

def test_irrep(tmpdir):
    code, out = run(tmpdir, 'irrep', {'q': 5, 'rank': 1, 'C': [[1]], 'n': 4})
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['dimension'] == 2
    assert report['window'] == 4

    # a window that is not a multiple of n
    code, _ = run(tmpdir, 'irrep', {'q': 5, 'rank': 1, 'C': [[1]], 'n': 4}, '--window', '6')
    assert code == EXIT_SCHEMA

def test_mult_bound(tmpdir):
    code, out = run(tmpdir, 'mult-bound', {'is_split': True})
    assert code == EXIT_OK
    assert json.loads(out) == {'bound': 1}

    code, _ = run(tmpdir, 'mult-bound', {'is_split': False, 'ker_sha': 2})
    assert code == EXIT_SCHEMA

def test_table_format(tmpdir):
    code, out = run(tmpdir, 'hecke-table', {'q': 7, 'rank': 1, 'C': [[1]], 'n': 2},
                    '--bound', '1', '--format', 'table')
    assert code == EXIT_OK
    assert 'entries:' in out
    assert 'zeta_exponent' in out

@pytest.mark.parametrize("doc", [{'rank': 1, 'C': [[1]], 'n': 4, 'colour': 'red'},
                                 {'rank': 1, 'C': [[1, 2]], 'n': 4},
                                 {'rank': 1, 'C': [[1]], 'n': 0},
                                 {'rank': 1, 'C': [[True]], 'n': 4}])
def test_schema_errors(tmpdir, doc):
    code, out = run(tmpdir, 'invariants', doc)
    assert code == EXIT_SCHEMA
    assert out == ""

def test_invalid_json(tmpdir):
    path = tmpdir.join('broken.json')
    path.write("{'rank': 1")
    driver = BDTDriver.create(['invariants', '-i', str(path), '--silent'])
    assert driver.run(StringIO()) == EXIT_SCHEMA

def test_unsupported(tmpdir):
    doc = {'q': 5, 'rank': 2, 'frobenius': [[0, 1], [1, 0]], 'order': 2, 'C': [[1, 0], [0, 1]], 'n': 2}
    code, _ = run(tmpdir, 'center', doc)
    assert code == EXIT_UNSUPPORTED

def test_selftest_vacuous(tmpdir):
    code, out = run(tmpdir, 'selftest', {'q': []})
    assert code == EXIT_OK
    assert json.loads(out)['passed']

def test_selftest_sign_flip(tmpdir):
    code, out = run(tmpdir, 'selftest', {'q': [7], 'n': [2], 'rank': [1], 'samples': 5},
                    '--inject-sign-flip')
    assert code == EXIT_FAILED
    report = json.loads(out)
    failed = [p['name'] for p in report['properties'] if not p['passed']]
    assert 'hilbert_laws' in failed

def test_parser():
    parser = bdt_parser()
    args = parser.parse_args(['selftest'])
    assert args.grid == 'small'
    assert args.input is None
    assert args.symbol_convention == 'inverse'

    with pytest.raises(SystemExit):
        parser.parse_args(['hecke-table', '-i', 'missing.json'])
    with pytest.raises(SystemExit):
        parser.parse_args(['selftest', '--grid', 'huge'])

#------------------------------------------------------------------------------
# the examples of the documentation
#------------------------------------------------------------------------------
DOCS = os.path.join(os.path.dirname(__file__), '..', '..', 'docs', 'source', 'cli.rst')

def documented_commands():
    """
    The ``(command, document, flags)`` of every shell example in the docs
    """
    if not os.path.exists(DOCS):
        return []
    out = []
    with open(DOCS, 'r') as ff:
        for line in ff:
            match = re.match(r"\s*\$ echo '(.*)' \| bdt (\S+) -i -(.*)$", line)
            if match:
                out.append((match.group(2), json.loads(match.group(1)), match.group(3).split()))
                continue
            match = re.match(r"\s*\$ bdt (\S+)(.*)$", line)
            if match:
                out.append((match.group(1), None, match.group(2).split()))
    return out

def test_documented_commands_found():
    if not os.path.exists(DOCS):
        pytest.skip("the documentation sources are not available")
    assert len(documented_commands()) == 3

@pytest.mark.parametrize("command, doc, flags", documented_commands())
def test_documented_commands(tmpdir, command, doc, flags):
    if doc is None:
        # too slow to run here; the arguments must still parse
        args = bdt_parser().parse_args([command] + flags)
        assert args.subparser_name == command
        return

    # parse -> serialize -> parse reproduces the datum
    datum = schema.parse_datum(doc, extra=('q',))
    again = schema.parse_datum(json.loads(json.dumps(datum.to_dict())))
    assert again.to_dict() == datum.to_dict()
    assert again.torus.is_split

    code, out = run(tmpdir, command, doc, *flags)
    assert code == EXIT_OK
    if '--format' in flags:
        assert 'field' in out and 'value' in out
    else:
        report = json.loads(out)
        assert report == json.loads(report_module.to_json(report))
        assert run(tmpdir, command, doc, *flags)[1] == out
