"""Shared value types, validation and normalization helpers.

Vectors, histograms and PDFs are carried as read-only 1-D float64 numpy
arrays; the ``as_*`` helpers validate and convert whatever the caller hands
in. Strings are any sequence of hashable, equality-comparable symbols
(``str`` is the common case).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Mapping, NamedTuple

import numpy as np
from scipy.stats import rankdata

from .errors import (
    DimensionMismatch,
    InvalidPdf,
    InvalidVector,
    MissingWeight,
    ZeroMassHistogram,
    ZeroRange,
)

PDF_TOLERANCE = 1e-9


class SimDistPair(NamedTuple):
    similarity: float
    distance: float


class NoConversion:
    """Outcome of a rearrangement distance when no operator sequence converts
    one string into the other (the distance is infinite)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NO_CONVERSION"

    def __float__(self):
        return float("inf")

    def __reduce__(self):
        return (NoConversion, ())


NO_CONVERSION = NoConversion()


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def as_vector(values, name: str = "vector") -> np.ndarray:
    """Validate a real vector: 1-D, non-empty, all entries finite."""
    arr = np.array(values, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidVector(f"{name} must be a non-empty 1-D sequence, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise InvalidVector(f"{name} contains NaN or infinite entries")
    return _freeze(arr)


def as_histogram(counts, name: str = "histogram") -> np.ndarray:
    arr = as_vector(counts, name)
    if (arr < 0).any():
        raise InvalidVector(f"{name} has negative counts")
    return arr


def as_pdf(probs, name: str = "pdf") -> np.ndarray:
    """Validate a discrete PDF. Entries in [0, 1] summing to 1 within 1e-9.

    Inputs off by more than the tolerance are rejected, never renormalized;
    use :func:`normalize` for raw counts.
    """
    arr = as_vector(probs, name)
    if (arr < 0).any() or (arr > 1).any():
        raise InvalidPdf(f"{name} has entries outside [0, 1]")
    total = arr.sum()
    if abs(total - 1.0) > PDF_TOLERANCE:
        raise InvalidPdf(f"{name} sums to {total!r}, not 1")
    return arr


def same_dim(p: np.ndarray, q: np.ndarray) -> None:
    if p.shape != q.shape:
        raise DimensionMismatch(f"dimensions differ: {p.size} vs {q.size}")


def vector_pair(p, q) -> tuple[np.ndarray, np.ndarray]:
    p = as_vector(p, "p")
    q = as_vector(q, "q")
    same_dim(p, q)
    return p, q


def pdf_pair(p, q) -> tuple[np.ndarray, np.ndarray]:
    p = as_pdf(p, "p")
    q = as_pdf(q, "q")
    same_dim(p, q)
    return p, q


def as_ranges(ranges, dim: int) -> np.ndarray:
    """Feature ranges as a (dim, 2) array of (low, high) rows."""
    arr = np.array(ranges, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InvalidVector("ranges must be a sequence of (low, high) pairs")
    if arr.shape[0] != dim:
        raise DimensionMismatch(f"{arr.shape[0]} ranges for a {dim}-dimensional vector")
    if not np.isfinite(arr).all() or (arr[:, 0] > arr[:, 1]).any():
        raise ZeroRange("each range needs finite low <= high")
    return arr


def as_dataset(rows) -> np.ndarray:
    arr = np.array(rows, dtype=float)
    if arr.ndim != 2:
        raise InvalidVector("a data sample must be a 2-D array of rows")
    if arr.shape[0] < 2:
        raise InvalidVector("a data sample needs at least two rows")
    if arr.shape[1] < 1 or not np.isfinite(arr).all():
        raise InvalidVector("data sample rows must be non-empty and finite")
    return _freeze(arr)


def as_weights(weights: Mapping[Hashable, float], symbols) -> Mapping[Hashable, float]:
    """Check that every symbol in ``symbols`` has a positive weight."""
    for s in set(symbols):
        if s not in weights:
            raise MissingWeight(f"no weight for symbol {s!r}")
        if not weights[s] > 0:
            raise MissingWeight(f"weight for {s!r} must be positive")
    return weights


def normalize(counts) -> np.ndarray:
    """Turn a histogram into a PDF by dividing by the total count."""
    h = as_histogram(counts, "histogram")
    total = h.sum()
    if total == 0:
        raise ZeroMassHistogram("histogram has no mass")
    return _freeze(h / total)


def rank_vector(values) -> np.ndarray:
    """Ranks of the entries, 1 for the smallest; ties share their average rank."""
    v = as_vector(values)
    return _freeze(rankdata(v, method="average"))


@dataclass(frozen=True)
class Fixtures:
    """Worked-example inputs reused across the test-suite and docs."""

    V1: tuple = (5.0, 3.0, 4.0)
    V2: tuple = (2.0, 5.0, 7.0)
    # 2x2 matrices flattened row-major; trace inner product = dot product
    F1: tuple = (1.0, 2.0, 3.0, 4.0)
    F2: tuple = (-1.0, -2.0, -3.0, -4.0)
    P_STAR: tuple = tuple(float(Fraction(c, 14)) for c in (2, 3, 4, 5))
    Q_STAR: tuple = tuple(float(Fraction(c, 14)) for c in (1, 2, 5, 6))
    S1: str = "abrakadabra"
    GOWER_RANGES: tuple = ((2.0, 6.0), (1.0, 6.0), (2.0, 10.0))
    MAHALANOBIS_SAMPLE: tuple = (
        (64.0, 580.0, 29.0),
        (66.0, 570.0, 33.0),
        (68.0, 590.0, 37.0),
        (69.0, 660.0, 46.0),
        (73.0, 600.0, 55.0),
    )
    MAHALANOBIS_P: tuple = (66.0, 640.0, 44.0)
    MAHALANOBIS_PAIR: tuple = ((66.0, 570.0, 33.0), (69.0, 660.0, 46.0))


FIXTURES = Fixtures()
