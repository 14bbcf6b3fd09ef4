"""Exception hierarchy shared by every braidkit module."""


class BraidError(Exception):
    """Base class for all braidkit errors."""


class ParseError(BraidError, ValueError):
    pass


class IndexOutOfRange(BraidError, ValueError):
    """A generator or strand index lies outside the braid group."""


class StrandMismatch(BraidError, ValueError):
    """Two operands live in braid groups with different strand counts."""


class ZeroExponent(BraidError, ValueError):
    """The cyclic generator has exponent sum zero, which GWP does not handle."""


class CommutingInput(BraidError, ValueError):
    """Double-coset search was asked about an element commuting with the generator."""


class ResourceLimit(BraidError, RuntimeError):
    """A search or saturation grew past its configured cap."""


class ParamError(BraidError, ValueError):
    """Protocol parameters violate their invariants."""
