"""Exception hierarchy shared by all modules."""


class BruhatNBCError(Exception):
    """Base class for every error raised by this package."""


class InvalidDatum(BruhatNBCError, ValueError):
    pass


class CapExceeded(BruhatNBCError):
    pass


class UnsupportedRing(BruhatNBCError):
    pass


class NotReduced(BruhatNBCError, ValueError):
    pass


class NotInIdeal(BruhatNBCError, ValueError):
    pass


class SearchExhausted(BruhatNBCError):
    """A search that is guaranteed to succeed came back empty."""


class TooManyHyperplanes(BruhatNBCError):
    pass


class NotNBC(BruhatNBCError, ValueError):
    pass


class PreconditionViolated(BruhatNBCError):
    pass
