"""Keyed logistic-map sequences and their quantization to small integers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Integral, Real

import numpy as np

from ._backend import kernels
from .errors import DegenerateOrbit, InvalidKey, InvalidParams

DEFAULT_SCALE = 1000


@dataclass(frozen=True)
class LogisticParams:
    """Secret key of the logistic map: control parameter, seed and transient length."""

    mu: float
    x0: float
    discard: int = 0

    def __post_init__(self):
        for name in ("mu", "x0"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, Real) or not math.isfinite(value):
                raise InvalidKey(f"{name} must be a finite real, got {value!r}")
            object.__setattr__(self, name, float(value))
        if not 0.0 < self.mu < 4.0:
            raise InvalidKey(f"mu must lie in the open interval (0, 4), got {self.mu!r}")
        if not 0.0 < self.x0 < 1.0:
            raise InvalidKey(f"x0 must lie in the open interval (0, 1), got {self.x0!r}")
        if isinstance(self.discard, bool) or not isinstance(self.discard, Integral) or self.discard < 0:
            raise InvalidKey(f"discard must be a non-negative integer, got {self.discard!r}")
        object.__setattr__(self, "discard", int(self.discard))

    @property
    def chaotic(self) -> bool:
        """True when mu sits in the usual chaotic band [3.57, 4)."""
        return self.mu >= 3.57


DEFAULT_PARAMS = LogisticParams(mu=3.99, x0=0.37, discard=1000)


def _positive_count(count, what="count"):
    if isinstance(count, bool) or not isinstance(count, Integral) or count < 1:
        raise InvalidParams(f"{what} must be a positive integer, got {count!r}")
    return int(count)


def iterate_logistic(params: LogisticParams, count: int) -> np.ndarray:
    """Return ``x_{I+1} .. x_{I+count}`` of the orbit started at ``params.x0``.

    The first ``params.discard`` iterates are computed and dropped. Raises
    :class:`DegenerateOrbit` if any iterate (including discarded ones) leaves
    the open interval (0, 1).
    """
    count = _positive_count(count)
    values, bad_step, bad_value = kernels.logistic_orbit(params.mu, params.x0, params.discard, count)
    if bad_step >= 0:
        raise DegenerateOrbit(bad_step, bad_value)
    return values


def round_half_away(values) -> np.ndarray:
    """Round to the nearest integer, ties away from zero (C ``round`` semantics)."""
    values = np.asarray(values, dtype=np.float64)
    mag = np.abs(values)
    floor = np.floor(mag)
    # mag - floor is exact in binary floating point, so the tie test is exact too
    rounded = floor + (mag - floor >= 0.5)
    return (np.copysign(rounded, values)).astype(np.int64)


def quantize(values, modulus=3, scale: int = DEFAULT_SCALE) -> np.ndarray:
    """``mod(round(values * scale), modulus)``; ``modulus`` may be an array."""
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        raise InvalidParams("cannot quantize an empty sequence")
    scale = _positive_count(scale, "scale")
    modulus = np.asarray(modulus, dtype=np.int64)
    if np.any(modulus < 2):
        raise InvalidParams("modulus must be at least 2")
    return np.mod(round_half_away(values * scale), modulus)


def quantize_to_trits(seq, scale: int = DEFAULT_SCALE) -> np.ndarray:
    return quantize(seq, 3, scale).astype(np.uint8)


def generate_index_sequence(params: LogisticParams, count: int, modulus: int,
                            scale: int = DEFAULT_SCALE) -> np.ndarray:
    """Chaotic indices in ``[0, modulus)``, one per requested element."""
    if isinstance(modulus, bool) or not isinstance(modulus, Integral) or modulus < 2:
        raise InvalidParams(f"modulus must be an integer >= 2, got {modulus!r}")
    return quantize(iterate_logistic(params, count), int(modulus), scale)


def generate_operation_sequence(params: LogisticParams, pixel_count: int,
                                scale: int = DEFAULT_SCALE) -> np.ndarray:
    """Per-pixel operation selectors in {0, 1, 2} (uint8)."""
    return quantize_to_trits(iterate_logistic(params, pixel_count), scale)
