from pyBDT.errors import InvalidDatum, Unsupported, InternalInvariantViolation
from pyBDT.bdt import schema, report
from pyBDT.bdt.selftest import Grid, run_selftest
from pyBDT.bdt.util import bdt_io, bdt_parser
from pyBDT.bdt.util import bdt_logging
from pyBDT.reps import FiniteQuotient, build_irrep, genuine_characters, character_from_values

import logging
import sys

logger = logging.getLogger('bdt.driver')

EXIT_OK, EXIT_FAILED, EXIT_SCHEMA, EXIT_UNSUPPORTED = 0, 1, 2, 3

class BDTDriver(object):
    """
    The main driver class to run `bdt`.

    Parameters
    ----------
    mode : str
        the subparser name
    kwargs:
        the key/value pairs corresponding to the command-line
        parser from bdt_parser()
    """
    def __init__(self, mode, **kwargs):
        self.mode = mode

        self._config = []
        for k in kwargs:
            self._config.append(k)
            setattr(self, k, kwargs[k])

        self.preprocess()

    @classmethod
    def create(cls, args=None):
        """
        Parse the command-line options and return an
        initialized `BDTDriver`.
        """
        args = vars(bdt_parser().parse_args(args))
        mode = args.pop('subparser_name')
        return cls(mode, **args)

    def preprocess(self):
        """
        Set up the console logger, or silence it
        """
        silent = getattr(self, 'silent', False)
        if not silent:
            bdt_logging.add_console_logger(debug=getattr(self, 'debug', False))
        else:
            bdt_logging.silence()

    #--------------------------------------------------------------------------
    # one method per subcommand, each returning (exit code, report)
    #--------------------------------------------------------------------------
    def document(self):
        path = getattr(self, 'input', None)
        return None if path is None else bdt_io.load_document(path)

    def run_invariants(self, doc):
        return EXIT_OK, report.invariants_report(schema.parse_datum(doc))

    def run_center(self, doc):
        cover = schema.parse_cover(doc, self.symbol_convention)
        return EXIT_OK, report.center_report(cover)

    def run_hecke_table(self, doc):
        spec = schema.parse_hecke(doc, self.symbol_convention)
        return EXIT_OK, report.hecke_report(spec, self.bound)

    def run_irrep(self, doc):
        cover, values = schema.parse_irrep(doc, self.symbol_convention)
        quotient = FiniteQuotient(cover, window=self.window)
        if values is None:
            chi = genuine_characters(quotient)[0]
            logger.info("no central character given; using %r" %chi)
        else:
            chi = character_from_values(quotient, values)
        return EXIT_OK, report.irrep_report(cover, build_irrep(cover, chi))

    def run_hilbert(self, doc):
        field, a, b = schema.parse_hilbert(doc, self.symbol_convention)
        return EXIT_OK, report.hilbert_report(field, a, b)

    def run_mult_bound(self, doc):
        return EXIT_OK, report.bound_report(schema.parse_bound(doc))

    def run_selftest(self, doc):
        overrides = schema.parse_grid(doc)
        grid = Grid(self.grid, overrides=overrides, symbol_convention=self.symbol_convention,
                    tame_sign=not self.inject_sign_flip)
        summary = run_selftest(grid)
        for record in summary['properties']:
            status = 'passed' if record['passed'] else 'FAILED'
            logger.info("%-20s %s (%d instances)" %(record['name'], status, record['checked']))
        return (EXIT_OK if summary['passed'] else EXIT_FAILED), summary

    def run(self, stream=None):
        """
        Run the subcommand and write its report

        Returns
        -------
        int
            the exit code: 0 on success, 1 for a failed self-test or
            internal check, 2 for invalid input, 3 for unsupported requests
        """
        stream = stream if stream is not None else sys.stdout
        func = getattr(self, 'run_' + self.mode.replace('-', '_'))
        try:
            code, out = func(self.document())
        except (bdt_io.SchemaError, InvalidDatum) as e:
            logger.error("invalid input: %s" %e)
            return EXIT_SCHEMA
        except Unsupported as e:
            logger.error("unsupported request: %s" %e)
            return EXIT_UNSUPPORTED
        except InternalInvariantViolation as e:
            logger.error("internal check failed: %s; witness %s" %(e, e.witness))
            return EXIT_FAILED

        if getattr(self, 'format', 'json') == 'table':
            stream.write(report.to_table(out) + "\n")
        else:
            stream.write(report.to_json(out) + "\n")
        return code

def main(args=None):

    # create and run
    driver = BDTDriver.create(args)
    sys.exit(driver.run())

if __name__ == "__main__":
    main()
