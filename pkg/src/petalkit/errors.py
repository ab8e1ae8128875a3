"""Exception types raised by petalkit."""


class PetalKitError(ValueError):
    """Base class for all errors raised on bad input or failed certification."""


class InexactDivisionError(PetalKitError):
    """A Laurent polynomial division left a nonzero remainder."""


class NotAKnotError(PetalKitError):
    """The object presents a link with more than one component."""


class CrossingCapExceeded(PetalKitError):
    def __init__(self, crossings: int, cap: int):
        super().__init__(f"diagram has {crossings} crossings, cap is {cap}")
        self.crossings = crossings
        self.cap = cap
