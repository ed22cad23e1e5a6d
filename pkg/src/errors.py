"""Exception hierarchy shared by every package.

Each error carries the process exit code the command line maps it to.
"""

from .config.constants import EXIT_USAGE, EXIT_RESOURCE


class FourierSamplerError(Exception):
    """Base class for all sampler errors."""

    exit_code = EXIT_USAGE


class InputShapeError(FourierSamplerError, ValueError):
    """A bitstring, index or vector has the wrong length for its arity."""


class ParameterError(FourierSamplerError, ValueError):
    """A numeric parameter is outside its valid range."""


class FormatError(FourierSamplerError, ValueError):
    """An input file could not be parsed or violates its format."""


class PreconditionError(FourierSamplerError, ValueError):
    """An operation was called on an empty training set or histogram."""


class CorruptStateError(FourierSamplerError):
    """A state vector no longer has unit norm."""


class SignAmbiguousError(FourierSamplerError):
    """A hypothesis cannot be signed because its coefficient estimate is 0."""


class ResourceError(FourierSamplerError):
    """The requested arity needs more memory than the configured cap allows."""

    exit_code = EXIT_RESOURCE

    def __init__(self, n: int, max_n: int):
        self.n = n
        self.max_n = max_n
        super().__init__(
            f"n={n} exceeds the memory cap n<={max_n} "
            f"(a 2^{n} state needs {8 * 2 ** n / 2 ** 30:.2f} GiB)"
        )
