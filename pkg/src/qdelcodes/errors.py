"""Exception types shared across the codec."""


class CodecError(Exception):
    """Base class for all codec-specific failures."""


class ParameterError(CodecError):
    """Raised when code parameters are inconsistent or infeasible."""


class SketchMismatchError(CodecError):
    """No candidate string is consistent with the given sketch.

    Signals a corrupted sketch or an input whose length does not match
    the sketch's declared source length.
    """


class ProviderContractError(CodecError):
    """Two distinct confusable candidates matched one sketch.

    This must never happen for a correct sketch provider; seeing it means
    the provider itself is broken.
    """


class LocatorMismatchError(CodecError):
    """No burst position is consistent with the locator sketch."""


class DecodeFailure(CodecError):
    """A decoding stage could not reconstruct its segment."""
