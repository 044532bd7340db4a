"""Grayscale images are plain 2-D ``uint8`` numpy arrays (rows x columns)."""

import numpy as np

from .errors import EmptyImage, InvalidParams


def as_gray_image(img) -> np.ndarray:
    """Validate and return a C-contiguous uint8 matrix view/copy of ``img``."""
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise InvalidParams(f"grayscale image must be 2-D, got shape {arr.shape}")
    if arr.size == 0:
        raise EmptyImage("image has no pixels")
    if arr.dtype != np.uint8:
        if arr.dtype.kind not in "iu" or arr.min() < 0 or arr.max() > 255:
            raise InvalidParams("pixel values must be integers in 0..255")
        arr = arr.astype(np.uint8)
    return np.ascontiguousarray(arr)


def nibble_split(pixel: int) -> tuple[int, int]:
    """(high nibble, low nibble) of a byte: the S-box row and column."""
    if not 0 <= pixel <= 255:
        raise InvalidParams(f"pixel must be a byte, got {pixel!r}")
    return pixel >> 4, pixel & 0x0F
