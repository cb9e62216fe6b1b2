"""
The ``bdt`` command-line front end
"""
from .util import bdt_parser
from . import schema, report
