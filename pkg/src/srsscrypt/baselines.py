"""The three pure-substitution methods used as comparison points.

All of them replace pixel ``v`` by ``S[v >> 4][v & 15]`` for some S-box
``S``; they differ only in how ``S`` is chosen (once, per pixel, or per
round) and how often the substitution is repeated. Pixels are traversed
row-major everywhere.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .chaos import LogisticParams, generate_index_sequence
from .errors import InvalidParams
from .image import as_gray_image
from .sbox import SBox


def encrypt_single_sbox(img, sbox: SBox) -> np.ndarray:
    # flat[16*p + q] == grid[p, q], so indexing by the pixel value is nibble addressing
    return sbox.flat[as_gray_image(img)]


def decrypt_single_sbox(img, sbox: SBox) -> np.ndarray:
    return sbox.inverse()[as_gray_image(img)]


def _check_sboxes(sboxes: Sequence[SBox]) -> list[SBox]:
    sboxes = list(sboxes)
    if not sboxes:
        raise InvalidParams("at least one S-box is required")
    for s in sboxes:
        if not isinstance(s, SBox):
            raise InvalidParams(f"expected SBox instances, got {type(s).__name__}")
    return sboxes


def _selectors(params: LogisticParams, pixels: int, n_boxes: int) -> np.ndarray:
    """One chaotic S-box index per pixel."""
    if n_boxes == 1:
        return np.zeros(pixels, dtype=np.int64)
    return generate_index_sequence(params, pixels, n_boxes)


def _substitute(img: np.ndarray, tables: np.ndarray, sel: np.ndarray) -> np.ndarray:
    flat = img.ravel()
    return tables[sel, flat].reshape(img.shape)


def encrypt_multi_sbox(img, sboxes: Sequence[SBox], params: LogisticParams) -> np.ndarray:
    img = as_gray_image(img)
    sboxes = _check_sboxes(sboxes)
    tables = np.stack([s.flat for s in sboxes])
    return _substitute(img, tables, _selectors(params, img.size, len(sboxes)))


def decrypt_multi_sbox(img, sboxes: Sequence[SBox], params: LogisticParams) -> np.ndarray:
    img = as_gray_image(img)
    sboxes = _check_sboxes(sboxes)
    tables = np.stack([s.inverse() for s in sboxes])
    return _substitute(img, tables, _selectors(params, img.size, len(sboxes)))


def _round_boxes(sboxes: list[SBox], rounds: int, params: LogisticParams) -> list[SBox]:
    if isinstance(rounds, bool) or not isinstance(rounds, int) or rounds < 1:
        raise InvalidParams(f"rounds must be a positive integer, got {rounds!r}")
    if len(sboxes) == 1:
        return sboxes * rounds
    return [sboxes[i] for i in generate_index_sequence(params, rounds, len(sboxes)).tolist()]


def encrypt_multi_round(img, sboxes: Sequence[SBox], rounds: int,
                        params: LogisticParams) -> list[np.ndarray]:
    """Substitute the whole image ``rounds`` times; returns every round's output.

    Round ``r`` pushes every pixel through one S-box, the ``r``-th chaotic
    pick from ``sboxes``. Each round is therefore a relabelling of gray
    levels, so the histogram (and entropy) never changes across rounds.
    """
    img = as_gray_image(img)
    outputs = []
    state = img
    for box in _round_boxes(_check_sboxes(sboxes), rounds, params):
        state = box.flat[state]
        outputs.append(state)
    return outputs


def decrypt_multi_round(img, sboxes: Sequence[SBox], rounds: int,
                        params: LogisticParams) -> np.ndarray:
    state = as_gray_image(img)
    for box in reversed(_round_boxes(_check_sboxes(sboxes), rounds, params)):
        state = box.inverse()[state]
    return state
