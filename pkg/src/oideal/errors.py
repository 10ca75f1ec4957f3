"""Exception hierarchy shared by all layers."""


class OIdealError(Exception):
    """Base class for errors raised by this package."""


class ResourceLimitError(OIdealError):
    """A degree or pair-count cap was exceeded; partial state is discarded."""


class InputError(OIdealError, ValueError):
    """Input violates a precondition (non-homogeneous, improper ideal, ...)."""


class LiftError(OIdealError):
    """A chain-map lift failed at some homological stage."""

    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage


class SearchExhaustedError(OIdealError):
    """A seeded randomized search ran out of draws."""

    def __init__(self, message, witnesses=None):
        super().__init__(message)
        self.witnesses = witnesses or []
