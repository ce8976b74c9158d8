"""Exception types shared across the package.

Every exception here signals a *mathematical* failure condition (a violated
hypothesis, a structure that does not match the predicted one, ...), never a
plain usage error.  The CLI maps them onto exit codes.
"""


class XYLevelError(Exception):
    """Base class for all mathematical errors raised by this package."""


class PrecisionError(XYLevelError):
    """A Laurent-series coefficient outside the tracked window was queried."""


class NotRational(XYLevelError):
    """A cyclotomic integer expected to be rational has a nonzero zeta part."""


class NotIntegral(XYLevelError):
    """A rational solution expected to be integral is not (span coordinates)."""


class NonIntegral(XYLevelError):
    """A closed-form group order or count came out non-integral."""


class NoSolution(XYLevelError):
    """A linear system that should be solvable is inconsistent."""


class StructureMismatch(XYLevelError):
    """A computed group differs from the predicted isomorphism type."""


class UnsupportedOrder(XYLevelError):
    """Brandt matrices requested for a (q, y) outside the closed-form recipes."""


class NoIntertwiner(XYLevelError):
    """No unimodular simultaneous conjugator was found for the two families."""
