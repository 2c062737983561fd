"""Exception hierarchy shared by all modules."""


class KFactorError(Exception):
    """Base class for every error raised by this package."""


class ParseError(KFactorError, ValueError):
    """Input text or JSON could not be read as the requested object."""


# permutations

class PermutationError(KFactorError, ValueError):
    pass


class SizeMismatch(PermutationError):
    pass


# forests

class ForestError(KFactorError, ValueError):
    pass


class SelfLoop(ForestError):
    pass


class CycleDetected(ForestError):
    pass


class ColourOutOfRange(ForestError):
    pass


# factorizations

class FactorizationError(KFactorError, ValueError):
    pass


class WrongFactorCount(FactorizationError):
    pass


class WrongFactorLength(FactorizationError):
    pass


class EntryOutOfRange(FactorizationError):
    pass


class NotMinFirst(FactorizationError):
    pass


class ProductNotFullCycle(FactorizationError):
    pass


class NotInLowerImage(FactorizationError):
    pass


# parking functions

class ParkingError(KFactorError, ValueError):
    pass


class NotParking(ParkingError):
    pass


class StackNotEmptied(ParkingError):
    pass


class EmptyPopRequired(ParkingError):
    pass


# everything else

class SizeGuard(KFactorError):
    """A brute-force enumeration was asked for a size it refuses by default."""


class Inconsistency(KFactorError, AssertionError):
    """An internal invariant failed; this is a bug, not bad input."""
