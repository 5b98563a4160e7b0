"""Exception hierarchy.

Every error raised by the library derives from :class:`PachnerError`, and most
also derive from the matching builtin (``ValueError``/``KeyError``) so callers
that do not care about the distinction can catch the usual suspects.
"""


class PachnerError(Exception):
    pass


# complex construction and navigation
class EmptyInput(PachnerError, ValueError):
    pass


class MixedDimension(PachnerError, ValueError):
    pass


class DuplicateVertexInFacet(PachnerError, ValueError):
    pass


class NotAFace(PachnerError, ValueError):
    pass


class VertexClash(PachnerError, ValueError):
    pass


class UnknownName(PachnerError, KeyError):
    pass


# moves
class IndexOutOfRange(PachnerError, ValueError):
    pass


class InvalidMove(PachnerError, ValueError):
    pass


class NoValidMoves(PachnerError, RuntimeError):
    pass


# f-vector algebra
class InconsistentPrefix(PachnerError, ValueError):
    pass


class NotASphereFVector(PachnerError, ValueError):
    pass


class NotProportional(PachnerError, ArithmeticError):
    pass


class DimensionMismatch(PachnerError, ValueError):
    pass


# gadget cells
class NotAFacet(PachnerError, ValueError):
    pass


class BaseNotInFacet(PachnerError, ValueError):
    pass


class LabelClash(PachnerError, ValueError):
    pass
