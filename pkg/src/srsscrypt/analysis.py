"""Statistical security metrics: histogram entropy, GLCM texture features, key space."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._backend import kernels
from .errors import EmptyImage, InvalidParams, NoPairs, ZeroVariance
from .image import as_gray_image


@dataclass(frozen=True)
class GlcmConfig:
    levels: int = 8
    offset: tuple[int, int] = (0, 1)
    symmetric: bool = False

    def __post_init__(self):
        if isinstance(self.levels, bool) or not isinstance(self.levels, int) or not 2 <= self.levels <= 256:
            raise InvalidParams(f"GLCM levels must be an integer in [2, 256], got {self.levels!r}")
        dr, dc = (int(v) for v in self.offset)
        if (dr, dc) == (0, 0):
            raise InvalidParams("GLCM offset must not be (0, 0)")
        object.__setattr__(self, "offset", (dr, dc))


def histogram(img) -> np.ndarray:
    """256-bin pixel counts (int64)."""
    return np.bincount(as_gray_image(img).ravel(), minlength=256).astype(np.int64)


def entropy_from_histogram(counts) -> float:
    counts = np.asarray(counts, dtype=np.int64)
    total = counts.sum()
    if total == 0:
        raise EmptyImage("histogram is empty")
    # sorted, exactly rounded summation: the result depends only on the multiset
    # of counts, so relabelling gray levels leaves it bit-identical
    p = np.sort(counts[counts > 0]) / total
    return max(0.0, -math.fsum((p * np.log2(p)).tolist()))


def shannon_entropy(img) -> float:
    """Shannon entropy of the 8-bit histogram in bits, within [0, 8]."""
    return entropy_from_histogram(histogram(img))


def glcm(img, cfg: GlcmConfig = GlcmConfig()) -> np.ndarray:
    """Normalized co-occurrence matrix, ``levels x levels``.

    Pixels are binned with ``floor(v * levels / 256)``; entry ``(i, j)``
    counts reference pixels in bin ``i`` whose neighbour at ``offset``
    (row, column) is in bin ``j``.
    """
    img = as_gray_image(img)
    binned = ((img.astype(np.int64) * cfg.levels) >> 8).astype(np.uint8)
    dr, dc = cfg.offset
    counts = kernels.glcm_counts(binned, cfg.levels, dr, dc)
    if cfg.symmetric:
        counts = counts + counts.T
    total = counts.sum()
    if total == 0:
        raise NoPairs(f"image of shape {img.shape} has no pixel pairs at offset {cfg.offset}")
    return counts / total


def _indices(p: np.ndarray):
    n = p.shape[0]
    i, j = np.meshgrid(np.arange(n, dtype=np.float64), np.arange(n, dtype=np.float64), indexing="ij")
    return i, j


def glcm_contrast(p: np.ndarray) -> float:
    i, j = _indices(p)
    return float(np.sum(p * (i - j) ** 2))


def glcm_energy(p: np.ndarray) -> float:
    return float(np.sum(p * p))


def glcm_homogeneity(p: np.ndarray) -> float:
    i, j = _indices(p)
    return float(np.sum(p / (1.0 + np.abs(i - j))))


def glcm_correlation(p: np.ndarray) -> float:
    """Pearson correlation of the (row bin, column bin) pair.

    Raises ZeroVariance if either marginal is degenerate.
    """
    i, j = _indices(p)
    mu_i, mu_j = np.sum(p * i), np.sum(p * j)
    var_i = np.sum(p * (i - mu_i) ** 2)
    var_j = np.sum(p * (j - mu_j) ** 2)
    denom = math.sqrt(var_i * var_j)
    if denom <= 1e-15:
        raise ZeroVariance("GLCM correlation is undefined: a marginal has zero variance")
    corr = float(np.sum(p * (i - mu_i) * (j - mu_j)) / denom)
    return min(1.0, max(-1.0, corr))


def key_space(confusion_bits_per_stage: Sequence[float], diffusion_bits: float, n: int, m: int) -> float:
    """log2 of ``(prod(KS_confusion) ** n * KS_diffusion) ** m``, in bits."""
    values = [*confusion_bits_per_stage, diffusion_bits, n, m]
    if any(v < 0 for v in values):
        raise InvalidParams("key-space inputs must be non-negative")
    return float(m * (n * math.fsum(confusion_bits_per_stage) + diffusion_bits))


@dataclass(frozen=True)
class SecurityReport:
    entropy: float
    contrast: float
    correlation: float | None  # None when undefined (zero-variance GLCM)
    energy: float
    homogeneity: float
    histogram: np.ndarray

    @property
    def correlation_text(self) -> str:
        return "undefined" if self.correlation is None else f"{self.correlation:.4f}"


def build_report(img, cfg: GlcmConfig = GlcmConfig()) -> SecurityReport:
    img = as_gray_image(img)
    counts = histogram(img)
    p = glcm(img, cfg)
    try:
        corr = glcm_correlation(p)
    except ZeroVariance:
        corr = None
    return SecurityReport(
        entropy=entropy_from_histogram(counts),
        contrast=glcm_contrast(p),
        correlation=corr,
        energy=glcm_energy(p),
        homogeneity=glcm_homogeneity(p),
        histogram=counts,
    )


METRICS = ("entropy", "contrast", "correlation", "energy", "homogeneity")


def reports_to_csv(rows: Iterable[tuple[str, SecurityReport]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("label", *METRICS))
    for label, rep in rows:
        writer.writerow((
            label,
            repr(rep.entropy),
            repr(rep.contrast),
            "undefined" if rep.correlation is None else repr(rep.correlation),
            repr(rep.energy),
            repr(rep.homogeneity),
        ))
    return buf.getvalue()


def format_table(rows: Sequence[tuple[str, SecurityReport]]) -> str:
    """Plain-text table: one metric per line, one column per labelled report."""
    labels = [label for label, _ in rows]
    cells = {
        "Entropy": [f"{r.entropy:.3f}" for _, r in rows],
        "Contrast": [f"{r.contrast:.2f}" for _, r in rows],
        "Correlation": [r.correlation_text for _, r in rows],
        "Energy": [f"{r.energy:.3f}" for _, r in rows],
        "Homogeneity": [f"{r.homogeneity:.3f}" for _, r in rows],
    }
    width = max([len(x) for x in labels] + [len(v) for col in cells.values() for v in col] + [9])
    head = f"{'Parameter':<12}" + "".join(f" | {x:>{width}}" for x in labels)
    lines = [head, "-" * len(head)]
    for name, col in cells.items():
        lines.append(f"{name:<12}" + "".join(f" | {v:>{width}}" for v in col))
    return "\n".join(lines) + "\n"
