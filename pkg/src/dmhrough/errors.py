"""Exception hierarchy shared by every module."""

from __future__ import annotations


class DmhError(Exception):
    """Base class for all errors raised by this package."""


class LatticeError(DmhError):
    """Order data does not describe a valid algebra."""


class NotAPoset(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class NoBounds(LatticeError):
    pass


class NotDistributive(LatticeError):
    pass


class NotInvolutive(LatticeError):
    pass


class NotAntitone(LatticeError):
    pass


class UnknownCatalogId(DmhError, KeyError):
    pass


class UnknownElement(DmhError, KeyError):
    pass


class UnknownPoint(DmhError, KeyError):
    pass


class MixedContext(DmhError, ValueError):
    """Operands live over different algebras or universes."""


class EnumerationTooLarge(DmhError):
    """A requested exhaustive enumeration exceeds the configured cap."""


class WordTooLong(DmhError, ValueError):
    pass


class UnsupportedKind(DmhError, ValueError):
    pass


class UnknownExample(DmhError, KeyError):
    pass


class SchemaError(DmhError, ValueError):
    """An input document is well-formed JSON but violates its schema."""


class ParseError(DmhError, ValueError):
    """An input file is not valid JSON."""
