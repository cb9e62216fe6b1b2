"""
Exceptions raised by the ``pyBDT`` library
"""

class BDTError(Exception):
    """Base class for all errors raised by ``pyBDT``"""
    pass

class InvalidDatum(BDTError, ValueError):
    """Malformed or inconsistent mathematical input"""
    pass

class DegeneratePairing(InvalidDatum):
    """An alternating pairing that was required to be nondegenerate is not"""
    pass

class Unsupported(BDTError):
    """A request outside the modeled scope, e.g. point-level data of a nonsplit torus"""
    pass

class InternalInvariantViolation(BDTError):
    """
    A theorem-check failed; this never happens for valid input and
    indicates a defect in the implementation
    """
    def __init__(self, msg, witness=None):
        super(InternalInvariantViolation, self).__init__(msg)
        self.witness = witness
