"""Single-round single-S-box cipher with chaotic XOR-modifier selection.

Each pixel ``v`` becomes ``S[v] ^ M[o]`` where ``o`` in {0, 1, 2} is the
pixel's entry in the logistic-map operation stream and ``M`` holds the three
modifier bytes. Decryption undoes the XOR and applies the inverse S-box.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from numbers import Integral

import numpy as np

from ._backend import kernels
from .chaos import LogisticParams, generate_operation_sequence
from .errors import InvalidKey, InvalidTrit, ParseError
from .image import as_gray_image
from .sbox import SBox, aes_sbox, load_sbox

KEY_FIELDS = ("mu", "x0", "discard", "m1", "m2", "m3", "sbox")


@dataclass(frozen=True)
class SrssKey:
    chaos: LogisticParams
    m1: int
    m2: int
    m3: int
    sbox: SBox = field(default_factory=aes_sbox)
    # how the S-box was named in a key file; only used when writing one back out
    sbox_ref: str = "aes"

    def __post_init__(self):
        if not isinstance(self.chaos, LogisticParams):
            raise InvalidKey("chaos must be a LogisticParams instance")
        for name in ("m1", "m2", "m3"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, Integral) or not 0 <= value <= 255:
                raise InvalidKey(f"{name} must be a byte in 0..255, got {value!r}")
            object.__setattr__(self, name, int(value))
        if not isinstance(self.sbox, SBox):
            raise InvalidKey("sbox must be an SBox")

    @property
    def modifiers(self) -> np.ndarray:
        return np.array([self.m1, self.m2, self.m3], dtype=np.uint8)


def cross_apply(sval: int, trit: int, key: SrssKey) -> int:
    """XOR an S-box output with the modifier selected by ``trit``."""
    if isinstance(trit, bool) or not isinstance(trit, Integral) or trit not in (0, 1, 2):
        raise InvalidTrit(f"operation selector must be 0, 1 or 2, got {trit!r}")
    return (int(sval) ^ (key.m1, key.m2, key.m3)[trit]) & 0xFF


def _ops(img: np.ndarray, key: SrssKey) -> np.ndarray:
    return generate_operation_sequence(key.chaos, img.size).astype(np.int64)


def srss_encrypt(img, key: SrssKey) -> np.ndarray:
    img = as_gray_image(img)
    return kernels.srss_forward(img, key.sbox.flat, key.modifiers, _ops(img, key))


def srss_decrypt(img, key: SrssKey) -> np.ndarray:
    img = as_gray_image(img)
    return kernels.srss_inverse(img, key.sbox.inverse(), key.modifiers, _ops(img, key))


def parse_key(text: str, base_dir: str | None = None) -> SrssKey:
    """Read ``name = value`` lines; ``#`` starts a comment.

    ``m1..m3`` are hex bytes (``0x`` prefix optional); ``sbox`` is ``aes``,
    ``identity`` or a path, resolved against ``base_dir`` when relative.
    """
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, value = line.partition("=")
        name, value = name.strip().lower(), value.strip()
        if not sep or not value:
            raise ParseError(f"line {lineno}: expected 'name = value', got {raw!r}")
        if name not in KEY_FIELDS:
            raise ParseError(f"line {lineno}: unknown key field {name!r}")
        if name in values:
            raise ParseError(f"line {lineno}: duplicate key field {name!r}")
        values[name] = value
    missing = [f for f in KEY_FIELDS[:6] if f not in values]
    if missing:
        raise ParseError(f"key file is missing field(s): {', '.join(missing)}")
    try:
        chaos = LogisticParams(float(values["mu"]), float(values["x0"]), int(values["discard"]))
        mods = [int(values[m], 16) for m in ("m1", "m2", "m3")]
    except ValueError as exc:
        if isinstance(exc, InvalidKey):
            raise
        raise ParseError(f"malformed key value: {exc}") from None
    ref = values.get("sbox", "aes")
    path = ref
    if ref.lower() not in ("aes", "identity") and base_dir and not os.path.isabs(ref):
        path = os.path.join(base_dir, ref)
    return SrssKey(chaos, *mods, sbox=load_sbox(path), sbox_ref=ref)


def serialize_key(key: SrssKey) -> str:
    # repr() of a float round-trips exactly
    return (
        f"mu = {key.chaos.mu!r}\n"
        f"x0 = {key.chaos.x0!r}\n"
        f"discard = {key.chaos.discard}\n"
        f"m1 = 0x{key.m1:02x}\n"
        f"m2 = 0x{key.m2:02x}\n"
        f"m3 = 0x{key.m3:02x}\n"
        f"sbox = {key.sbox_ref}\n"
    )


def load_key(path: str) -> SrssKey:
    with open(path, encoding="utf-8") as fh:
        return parse_key(fh.read(), base_dir=os.path.dirname(os.path.abspath(path)))
