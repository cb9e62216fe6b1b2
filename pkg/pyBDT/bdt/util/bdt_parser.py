import argparse as ap
import logging
import os
import textwrap as tw

logger = logging.getLogger('bdt.parser')

COMMANDS = ['invariants', 'center', 'hecke-table', 'irrep', 'hilbert', 'mult-bound', 'selftest']

class VersionAction(ap.Action):
    """
    Action to print out the pyBDT version
    """
    def __init__(self,
                 option_strings,
                 dest=ap.SUPPRESS,
                 default=ap.SUPPRESS,
                 help=None):
        super(VersionAction, self).__init__(
            option_strings=option_strings,
            dest=dest,
            default=default,
            nargs=0,
            help=help)

    def __call__(self, parser, namespace, values, option_string=None):
        from pyBDT import __version__
        parser.exit(0, str(__version__) + "\n")

def existing_file(fname):
    """
    Check that the input file exists; ``-`` means standard input

    Parameters
    ----------
    fname: str
        the name of the file to read

    Returns
    -------
    fname : string
    """
    if fname == '-' or os.path.isfile(fname):
        return fname
    else:
        msg = "the file '{}' does not exist".format(fname)
        raise ap.ArgumentTypeError(msg)

def positive_int(string):
    """
    Check if the input is a positive integer
    """
    try:
        value = int(string)
        if value <= 0:
            raise ValueError
        return value
    except ValueError:
        raise ap.ArgumentTypeError("argument requires a positive integer")

def add_common_arguments(subparser, needs_input=True):
    """
    The options shared by every subcommand
    """
    h = "the JSON input document, or '-' for standard input"
    kwargs = {'dest':'input', 'type':existing_file, 'help':h}
    if needs_input:
        kwargs['required'] = True
    else:
        kwargs['default'] = None
    subparser.add_argument('-i', '--input', **kwargs)

    h = 'the output format'
    subparser.add_argument('--format', choices=['json', 'table'], default='json', help=h)

    h = 'the orientation of the Hilbert symbol'
    subparser.add_argument('--symbol-convention', choices=['standard', 'inverse'], default='inverse',
                           dest='symbol_convention', help=h)

    # silence the output (OPTIONAL)
    h = 'silence the log messages on the console'
    subparser.add_argument('--silent', help=h, action='store_true')

    # debug
    h = 'log debugging information'
    subparser.add_argument('--debug', help=h, action='store_true', default=False)

def setup_hecke_subparser(parent):
    """
    Setup the subparser for the ``hecke-table`` subcommand
    """
    h = "print the structure constants of the genuine spherical Hecke algebra"
    subparser = parent.add_parser('hecke-table', help=h)
    add_common_arguments(subparser)

    h = 'the largest absolute coordinate on the Lambda basis'
    subparser.add_argument('--bound', type=positive_int, default=2, help=h)

def setup_irrep_subparser(parent):
    """
    Setup the subparser for the ``irrep`` subcommand
    """
    h = "build the genuine irreducible representation of a central character"
    subparser = parent.add_parser('irrep', help=h)
    add_common_arguments(subparser)

    h = 'the valuation window of the finite quotient; default n'
    subparser.add_argument('--window', type=positive_int, default=None, help=h)

def setup_selftest_subparser(parent):
    """
    Setup the subparser for the ``selftest`` subcommand
    """
    h = "run the property suites of every module"
    subparser = parent.add_parser('selftest', help=h)
    add_common_arguments(subparser, needs_input=False)

    h = 'the parameter grid to run'
    subparser.add_argument('--grid', choices=['small', 'full'], default='small', help=h)

    h = 'flip the sign of the tame symbol, to check that the suites catch it'
    subparser.add_argument('--inject-sign-flip', action='store_true', dest='inject_sign_flip', help=h)

def bdt_parser():
    """
    Initialize the parser of command-line arguments.

    Each computation is a subcommand reading one JSON document; run
    :code:`bdt <command> -h` for the options of a specific subcommand.
    """
    usage = """%%(prog)s [-h] [--version] {%s} ... """ %",".join(COMMANDS)
    usage += tw.dedent("""\n
        For more help on each of the subcommands, type:
        %(prog)s invariants -h
        %(prog)s selftest -h\n\n""")
    desc = "exact computations with Brylinski-Deligne covers of tori"
    kwargs = {}
    kwargs['usage'] = usage
    kwargs['description'] = desc
    kwargs['formatter_class'] = ap.ArgumentDefaultsHelpFormatter
    parser = ap.ArgumentParser(**kwargs)

    parser.add_argument('--version', action=VersionAction, help='print the pyBDT version and exit')

    subparser = parser.add_subparsers(dest='subparser_name')
    subparser.required = True

    helps = {'invariants': "lattice invariants of a Brylinski-Deligne datum",
             'center': "the center, core and Lagrangian decomposition of a split cover",
             'hilbert': "the Hilbert symbol of two elements",
             'mult-bound': "evaluate the automorphic multiplicity bound"}
    for name in ['invariants', 'center', 'hilbert', 'mult-bound']:
        add_common_arguments(subparser.add_parser(name, help=helps[name]))
    setup_hecke_subparser(subparser)
    setup_irrep_subparser(subparser)
    setup_selftest_subparser(subparser)
    return parser
