"""PGM (P2/P5) reading and writing plus synthetic test images."""

from __future__ import annotations

import numpy as np

from .errors import InvalidParams, ParseError
from .image import as_gray_image

_WHITESPACE = b" \t\n\r\v\f"


def _header_tokens(data: bytes, count: int):
    """Pull ``count`` whitespace-separated header tokens, skipping comments.

    Returns the tokens and the offset just past the single whitespace byte
    that terminates the last one.
    """
    tokens = []
    pos = 0
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos] in _WHITESPACE:
            pos += 1
        if pos < n and data[pos] == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
            continue
        if pos >= n:
            raise ParseError("truncated PGM header")
        start = pos
        while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
            pos += 1
        tokens.append(data[start:pos])
    if pos < n and data[pos] not in _WHITESPACE:
        raise ParseError("PGM header must end with a whitespace byte")
    return tokens, pos + 1


def read_pgm(data: bytes) -> np.ndarray:
    if data[:2] not in (b"P2", b"P5"):
        raise ParseError(f"not a grayscale PGM (magic {data[:2]!r})")
    try:
        tokens, offset = _header_tokens(data, 4)
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError:
        raise ParseError("non-integer value in PGM header") from None
    if tokens[0] not in (b"P2", b"P5"):
        raise ParseError(f"bad PGM magic {tokens[0]!r}")
    if width < 1 or height < 1:
        raise ParseError(f"bad PGM dimensions {width}x{height}")
    if not 1 <= maxval <= 255:
        raise ParseError(f"unsupported maxval {maxval}: only 8-bit PGM is handled")
    npix = width * height
    if tokens[0] == b"P5":
        raster = data[offset:offset + npix]
        if len(raster) < npix:
            raise ParseError(f"truncated P5 raster: expected {npix} bytes, got {len(raster)}")
        pixels = np.frombuffer(raster, dtype=np.uint8)
    else:
        body = data[offset:]
        # comments are tolerated in the ASCII raster as well
        words = b" ".join(line.split(b"#", 1)[0] for line in body.splitlines()).split()
        if len(words) < npix:
            raise ParseError(f"truncated P2 raster: expected {npix} values, got {len(words)}")
        try:
            pixels = np.array([int(w) for w in words[:npix]], dtype=np.int64)
        except ValueError:
            raise ParseError("non-integer value in P2 raster") from None
    if pixels.min() < 0 or pixels.max() > maxval:
        raise ParseError(f"pixel value outside 0..{maxval}")
    return pixels.astype(np.uint8).reshape(height, width)


def write_pgm(img, variant: str = "P5") -> bytes:
    img = as_gray_image(img)
    height, width = img.shape
    if variant == "P5":
        return f"P5\n{width} {height}\n255\n".encode("ascii") + img.tobytes()
    if variant == "P2":
        lines = [f"P2\n{width} {height}\n255"]
        lines += (" ".join(map(str, row)) for row in img.tolist())
        return ("\n".join(lines) + "\n").encode("ascii")
    raise InvalidParams(f"unknown PGM variant {variant!r}")


def load_pgm(path: str) -> np.ndarray:
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def save_pgm(path: str, img, variant: str = "P5") -> None:
    with open(path, "wb") as fh:
        fh.write(write_pgm(img, variant))


SYNTH_KINDS = ("constant", "checkerboard", "gradient", "disks", "random")


def _disks(width, height, rng, count=None):
    """Coin-like scene: flat background, non-overlapping disks with a rim and a face."""
    img = np.full((height, width), 48, dtype=np.uint8)
    rr, cc = np.mgrid[0:height, 0:width]
    small = min(width, height)
    count = count if count is not None else max(3, (width * height) // 6000)
    placed = []
    for _ in range(count * 50):
        if len(placed) == count:
            break
        r = int(rng.integers(max(2, small // 20), max(3, small // 8) + 1))
        cy = int(rng.integers(r, height - r)) if height > 2 * r else height // 2
        cx = int(rng.integers(r, width - r)) if width > 2 * r else width // 2
        if any((cy - y) ** 2 + (cx - x) ** 2 < (r + rad + 2) ** 2 for y, x, rad in placed):
            continue
        placed.append((cy, cx, r))
    faces = (150, 176, 200, 224)
    for idx, (cy, cx, r) in enumerate(placed):
        d2 = (rr - cy) ** 2 + (cc - cx) ** 2
        img[d2 <= r * r] = 120  # rim
        img[d2 <= (r - max(1, r // 5)) ** 2] = faces[idx % len(faces)]
    return img


def synth(kind: str, width: int, height: int, seed: int = 0, *, value: int = 0,
          cell: int = 1) -> np.ndarray:
    """Deterministic synthetic image.

    ``constant`` uses ``value``; ``checkerboard`` alternates 0/255 squares of
    side ``cell`` starting with 0; ``gradient`` is a horizontal ramp;
    ``disks`` stands in for a coins photograph (few gray levels, large flat
    regions, sharp edges); ``random`` is uniform noise.
    """
    if width < 1 or height < 1:
        raise InvalidParams(f"image size must be positive, got {width}x{height}")
    if kind == "constant":
        if not 0 <= value <= 255:
            raise InvalidParams(f"constant value must be a byte, got {value}")
        return np.full((height, width), value, dtype=np.uint8)
    if kind == "checkerboard":
        if cell < 1:
            raise InvalidParams(f"checkerboard cell must be positive, got {cell}")
        rr, cc = np.mgrid[0:height, 0:width]
        return np.where(((rr // cell) + (cc // cell)) % 2 == 0, 0, 255).astype(np.uint8)
    if kind == "gradient":
        ramp = np.arange(width) * 255 // max(1, width - 1)
        return np.tile(ramp.astype(np.uint8), (height, 1))
    rng = np.random.default_rng(seed)
    if kind == "disks":
        return _disks(width, height, rng)
    if kind == "random":
        return rng.integers(0, 256, size=(height, width), dtype=np.uint8)
    raise InvalidParams(f"unknown image kind {kind!r}; choose from {', '.join(SYNTH_KINDS)}")
