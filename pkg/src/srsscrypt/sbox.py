"""Bijective byte substitution tables addressed as 16x16 grids."""

from __future__ import annotations

from numbers import Integral

import numpy as np

from .chaos import LogisticParams, iterate_logistic, quantize
from .errors import IndexOutOfRange, InvalidParams, NotBijective, ParseError

_AES_HEX = """
63 7c 77 7b f2 6b 6f c5 30 01 67 2b fe d7 ab 76
ca 82 c9 7d fa 59 47 f0 ad d4 a2 af 9c a4 72 c0
b7 fd 93 26 36 3f f7 cc 34 a5 e5 f1 71 d8 31 15
04 c7 23 c3 18 96 05 9a 07 12 80 e2 eb 27 b2 75
09 83 2c 1a 1b 6e 5a a0 52 3b d6 b3 29 e3 2f 84
53 d1 00 ed 20 fc b1 5b 6a cb be 39 4a 4c 58 cf
d0 ef aa fb 43 4d 33 85 45 f9 02 7f 50 3c 9f a8
51 a3 40 8f 92 9d 38 f5 bc b6 da 21 10 ff f3 d2
cd 0c 13 ec 5f 97 44 17 c4 a7 7e 3d 64 5d 19 73
60 81 4f dc 22 2a 90 88 46 ee b8 14 de 5e 0b db
e0 32 3a 0a 49 06 24 5c c2 d3 ac 62 91 95 e4 79
e7 c8 37 6d 8d d5 4e a9 6c 56 f4 ea 65 7a ae 08
ba 78 25 2e 1c a6 b4 c6 e8 dd 74 1f 4b bd 8b 8a
70 3e b5 66 48 03 f6 0e 61 35 57 b9 86 c1 1d 9e
e1 f8 98 11 69 d9 8e 94 9b 1e 87 e9 ce 55 28 df
8c a1 89 0d bf e6 42 68 41 99 2d 0f b0 54 bb 16
"""

# Fisher-Yates draws need far more resolution than the 10^3 used for trits.
SHUFFLE_SCALE = 10**9


class SBox:
    """A validated permutation of 0..255, read-only.

    ``flat[16 * p + q]`` and ``grid[p, q]`` address the same entry.
    """

    __slots__ = ("flat", "_inverse")

    def __init__(self, table):
        arr = np.asarray(table)
        if arr.size != 256:
            raise InvalidParams(f"an S-box needs exactly 256 entries, got {arr.size}")
        arr = arr.reshape(256)
        if arr.dtype.kind not in "iu" or arr.min() < 0 or arr.max() > 255:
            raise InvalidParams("S-box entries must be integers in 0..255")
        arr = arr.astype(np.uint8)
        seen = np.zeros(256, dtype=bool)
        for v in arr.tolist():
            if seen[v]:
                raise NotBijective(v)
            seen[v] = True
        arr.flags.writeable = False
        self.flat = arr
        self._inverse = None

    @property
    def grid(self) -> np.ndarray:
        return self.flat.reshape(16, 16)

    def lookup(self, p: int, q: int) -> int:
        for name, idx in (("row", p), ("column", q)):
            if isinstance(idx, bool) or not isinstance(idx, Integral) or not 0 <= idx <= 15:
                raise IndexOutOfRange(f"S-box {name} index must be in 0..15, got {idx!r}")
        return int(self.flat[16 * p + q])

    def inverse(self) -> np.ndarray:
        """Inverse table: ``inverse()[flat[v]] == v`` for every byte ``v``."""
        if self._inverse is None:
            inv = np.empty(256, dtype=np.uint8)
            inv[self.flat] = np.arange(256, dtype=np.uint8)
            inv.flags.writeable = False
            self._inverse = inv
        return self._inverse

    def __eq__(self, other):
        if not isinstance(other, SBox):
            return NotImplemented
        return np.array_equal(self.flat, other.flat)

    def __hash__(self):
        return hash(self.flat.tobytes())

    def __repr__(self):
        head = " ".join(f"{v:02x}" for v in self.flat[:4])
        return f"SBox({head} ...)"


def validate(table) -> SBox:
    return SBox(table)


def invert(sbox: SBox) -> SBox:
    """The inverse substitution as an S-box in its own right."""
    return SBox(sbox.inverse())


def lookup(sbox: SBox, p: int, q: int) -> int:
    return sbox.lookup(p, q)


def identity_sbox() -> SBox:
    return SBox(np.arange(256))


def aes_sbox() -> SBox:
    return _AES


def generate_chaotic_sbox(params: LogisticParams) -> SBox:
    """Keyed Fisher-Yates shuffle of 0..255 driven by the logistic map.

    Step ``k`` (k = 0..254) swaps position ``i = 255 - k`` with index
    ``round(x_k * 10^9) mod (i + 1)``.
    """
    positions = np.arange(255, 0, -1)
    draws = quantize(iterate_logistic(params, positions.size), positions + 1, SHUFFLE_SCALE)
    table = list(range(256))
    for i, j in zip(positions.tolist(), draws.tolist()):
        table[i], table[j] = table[j], table[i]
    return SBox(table)


def parse_sbox(text: str) -> SBox:
    """Parse 256 hex bytes (16 rows of 16, '#' starts a comment line)."""
    tokens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        for tok in stripped.split():
            if len(tok) > 2 or any(ch not in "0123456789abcdefABCDEF" for ch in tok):
                raise ParseError(f"line {lineno}: bad S-box token {tok!r}")
            tokens.append(int(tok, 16))
    if len(tokens) != 256:
        raise ParseError(f"expected 256 S-box entries, found {len(tokens)}")
    return SBox(tokens)


def serialize_sbox(sbox: SBox) -> str:
    rows = (" ".join(f"{v:02x}" for v in row) for row in sbox.grid.tolist())
    return "\n".join(rows) + "\n"


def load_sbox(ref: str) -> SBox:
    """Resolve ``"aes"``/``"identity"`` or read an S-box file path."""
    if ref.lower() == "aes":
        return aes_sbox()
    if ref.lower() == "identity":
        return identity_sbox()
    with open(ref, encoding="utf-8") as fh:
        return parse_sbox(fh.read())


_AES = parse_sbox(_AES_HEX)

# Companion boxes for the multi-S-box baselines.
DEFAULT_SBOX_KEYS = (
    LogisticParams(mu=3.9999, x0=0.123456789, discard=500),
    LogisticParams(mu=3.9876, x0=0.654321, discard=500),
)


def default_sbox_set() -> list[SBox]:
    """AES plus two chaotic boxes from ``DEFAULT_SBOX_KEYS``."""
    return [aes_sbox(), *(generate_chaotic_sbox(k) for k in DEFAULT_SBOX_KEYS)]
