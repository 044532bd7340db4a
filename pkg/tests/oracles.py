"""Independent reference computations used to freeze and check expected values."""

import itertools
import math
from collections import Counter


def _gf_mul(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a = ((a << 1) ^ 0x11B) & 0xFF if a & 0x80 else a << 1
        b >>= 1
    return out


def aes_sbox_from_field():
    """AES S-box built from GF(2^8) inverses and the affine map, no table lookups."""
    table = []
    for x in range(256):
        inv = 0 if x == 0 else next(y for y in range(1, 256) if _gf_mul(x, y) == 1)
        b = inv
        s = b
        for shift in range(1, 5):
            s ^= ((b << shift) | (b >> (8 - shift))) & 0xFF
        table.append(s ^ 0x63)
    return table


def entropy_direct(pixels):
    counts = Counter(pixels)
    n = len(pixels)
    return -sum((c / n) * math.log2(c / n) for c in counts.values())


def glcm_brute(img, levels, offset, symmetric=False):
    """Enumerate every (reference, neighbour) pair by hand; returns a dict of probabilities."""
    rows, cols = len(img), len(img[0])
    dr, dc = offset
    counts = Counter()
    for r, c in itertools.product(range(rows), range(cols)):
        r2, c2 = r + dr, c + dc
        if 0 <= r2 < rows and 0 <= c2 < cols:
            i = img[r][c] * levels // 256
            j = img[r2][c2] * levels // 256
            counts[i, j] += 1
            if symmetric:
                counts[j, i] += 1
    total = sum(counts.values())
    return {k: v / total for k, v in counts.items()}


def runs(flat):
    """Lengths of maximal runs of equal values in a sequence."""
    return [len(list(g)) for _, g in itertools.groupby(flat)]
