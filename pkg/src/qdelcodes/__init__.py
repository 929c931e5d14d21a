"""Deletion-correcting codes over even alphabets.

Implements systematic q-ary two-deletion correcting codes and binary/q-ary
burst-deletion correcting codes built from VT syndromes, interleaved burst
sketches, confusability colorings, window families, and burst locators,
plus a CLI and exhaustive verification drivers.
"""

from .bits import Interval, EMPTY_INTERVAL
from .errors import (
    CodecError,
    DecodeFailure,
    LocatorMismatchError,
    ParameterError,
    ProviderContractError,
    SketchMismatchError,
)
from .params import (
    MODE_BURST_BIN,
    MODE_BURST_Q,
    MODE_TWODEL,
    CodeParams,
    PipelinePlan,
    resolve,
    validate_errors,
)

__version__ = "0.1.0"

__all__ = [
    "Interval",
    "EMPTY_INTERVAL",
    "CodecError",
    "DecodeFailure",
    "LocatorMismatchError",
    "ParameterError",
    "ProviderContractError",
    "SketchMismatchError",
    "CodeParams",
    "PipelinePlan",
    "resolve",
    "validate_errors",
    "MODE_TWODEL",
    "MODE_BURST_BIN",
    "MODE_BURST_Q",
    "__version__",
]
