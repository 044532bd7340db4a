"""Exception hierarchy.

Validation errors (bad keys, tables, files) derive from :class:`ValidationError`;
failures that only show up while running a computation derive from
:class:`SrssRuntimeError`. The CLI maps the two families to different exit codes.
"""


class SrssError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(SrssError, ValueError):
    pass


class SrssRuntimeError(SrssError, RuntimeError):
    pass


class InvalidKey(ValidationError):
    pass


class NotBijective(ValidationError):
    def __init__(self, duplicate: int, message: str | None = None):
        self.duplicate = duplicate
        super().__init__(message or f"S-box is not bijective: value {duplicate:#04x} appears more than once")


class ParseError(ValidationError):
    pass


class InvalidTrit(ValidationError):
    pass


class InvalidParams(ValidationError):
    pass


class EmptyImage(ValidationError):
    pass


class DegenerateOrbit(SrssRuntimeError):
    def __init__(self, step: int, value: float):
        self.step = step
        self.value = value
        super().__init__(f"logistic orbit left (0, 1) at iteration {step} (x = {value!r})")


class NoPairs(SrssRuntimeError):
    pass


class ZeroVariance(SrssRuntimeError):
    pass


class IndexOutOfRange(SrssError, IndexError):
    pass
