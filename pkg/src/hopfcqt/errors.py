"""Exception types shared across the library."""


class HopfCqtError(Exception):
    "Base class for all library errors."


class DivisionByZero(HopfCqtError, ZeroDivisionError):
    "Division or inversion of a zero scalar."


class NotARootOfUnity(HopfCqtError):
    "A scalar that was required to be zeta_N^j is not of that form."


class DimensionMismatch(HopfCqtError):
    "Incompatible matrix/vector dimensions."


class MixedGroups(HopfCqtError):
    "Operation on elements of different parent groups."


class InfiniteGroup(HopfCqtError):
    "Full enumeration requested for an infinite group."


class UndefinedGeneratorAction(HopfCqtError):
    "Action table misses a generator, or a generator does not act bijectively."


class MissingEntry(HopfCqtError):
    "Cocycle table lookup failed and no default was declared."


class ContextMismatch(HopfCqtError):
    "Operation on elements over different Hopf-algebra contexts."


class NotInStabilizer(HopfCqtError):
    "Group element outside the stabilizer of the base point."


class NonAbelianStabilizer(HopfCqtError):
    "One-dimensional enumeration requested over a non-abelian stabilizer."


class WrongGroup(HopfCqtError):
    "Operation restricted to a specific group shape (usually |G| = 2)."


class NotInSpan(HopfCqtError):
    "Element is not a linear combination of the given characters."


class NonIntegralMultiplicity(HopfCqtError):
    "Decomposition multiplicities are not nonnegative integers."


class UnknownEntry(HopfCqtError):
    "Catalog id not found."


class HypothesisNotMet(HopfCqtError):
    "A check's structural hypothesis fails for the given context."


class SearchSpaceTooLarge(HopfCqtError):
    "Enumerative search aborted: node budget exceeded."


class SchemaError(HopfCqtError):
    "Malformed JSON input; carries the offending location."

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = "%s (at %s)" % (message, location)
        super().__init__(message)
