"""Pure-Python/numpy implementations of the hot kernels.

Semantics are the reference; the compiled module in ``_kernels.pyx`` must agree
bit-for-bit. Both return a negative failure index rather than raising so the
caller owns error construction.
"""

import numpy as np


def logistic_orbit(mu, x0, discard, count):
    """Iterate ``x <- mu * x * (1 - x)`` ``discard + count`` times.

    Returns ``(values, bad_step, bad_value)``. ``bad_step`` is -1 on success,
    otherwise the 1-based iteration at which the orbit left the open unit
    interval (``values`` is then incomplete).
    """
    out = np.empty(count, dtype=np.float64)
    x = float(x0)
    mu = float(mu)
    for step in range(1, discard + count + 1):
        x = mu * x * (1.0 - x)
        if not 0.0 < x < 1.0:
            return out, step, x
        if step > discard:
            out[step - discard - 1] = x
    return out, -1, 0.0


def srss_forward(pixels, sbox, modifiers, ops):
    return (sbox[pixels] ^ modifiers[ops].reshape(pixels.shape)).astype(np.uint8)


def srss_inverse(pixels, inverse, modifiers, ops):
    return inverse[pixels ^ modifiers[ops].reshape(pixels.shape)].astype(np.uint8)


def glcm_counts(binned, levels, dr, dc):
    """Count co-occurrences ``(binned[r, c], binned[r + dr, c + dc])``."""
    rows, cols = binned.shape
    r0, r1 = max(0, -dr), min(rows, rows - dr)
    c0, c1 = max(0, -dc), min(cols, cols - dc)
    counts = np.zeros((levels, levels), dtype=np.int64)
    if r1 <= r0 or c1 <= c0:
        return counts
    ref = binned[r0:r1, c0:c1].astype(np.int64)
    nbr = binned[r0 + dr:r1 + dr, c0 + dc:c1 + dc].astype(np.int64)
    flat = np.bincount((ref * levels + nbr).ravel(), minlength=levels * levels)
    return flat.reshape(levels, levels)
