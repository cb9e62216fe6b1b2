from .bdt_parser import bdt_parser
from . import bdt_io
