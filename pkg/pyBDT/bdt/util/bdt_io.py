"""
Reading the JSON input documents of ``bdt``
"""
import json
import sys

class SchemaError(ValueError):
    """
    An input document that does not match the schema of its command

    Parameters
    ----------
    pointer : str
        JSON pointer to the offending field, e.g. ``/C/0/1``
    msg : str
    """
    def __init__(self, pointer, msg):
        self.pointer = pointer
        super(SchemaError, self).__init__("%s: %s" %(pointer or '/', msg))

def load_document(path):
    """
    Read a JSON document from a file name, or from standard input for ``-``
    """
    try:
        if path == '-':
            return json.load(sys.stdin)
        with open(path, 'r') as ff:
            return json.load(ff)
    except ValueError as e:
        raise SchemaError('', "the input is not valid JSON (%s)" %e)
