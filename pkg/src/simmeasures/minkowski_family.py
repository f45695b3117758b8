"""The L_p ladder and the normalized L1 variants."""
from __future__ import annotations

import math

import numpy as np

from .core import as_ranges, vector_pair
from .errors import (
    AllZeroAdkins,
    DegenerateDenominator,
    InvalidExponent,
    NegativeRadicand,
    ZeroRange,
)

INFINITY = math.inf


def minkowski(p, q, exp: float = 2.0) -> float:
    """``(sum |p_i - q_i|^exp)^(1/exp)``; ``exp=math.inf`` gives Chebyshev.

    Exponents below 1 are rejected (they do not give a norm).
    """
    p, q = vector_pair(p, q)
    if not exp >= 1:
        raise InvalidExponent(f"exponent must be >= 1 or inf, got {exp!r}")
    diff = np.abs(p - q)
    if exp == INFINITY:
        return float(diff.max())
    if exp == 1:
        return float(diff.sum())
    # scale by the max so that squares neither overflow nor underflow
    top = diff.max()
    if top == 0:
        return 0.0
    return float(top * np.sum((diff / top) ** exp) ** (1.0 / exp))


def euclidean(p, q) -> float:
    return minkowski(p, q, 2.0)


def manhattan(p, q) -> float:
    return minkowski(p, q, 1.0)


def chebyshev(p, q) -> float:
    return minkowski(p, q, INFINITY)


def squared_euclidean(p, q) -> float:
    p, q = vector_pair(p, q)
    diff = p - q
    return float(diff @ diff)


def gower(p, q, ranges, range_size: str = "count") -> float:
    """Mean absolute difference, each term scaled by the size of its feature range.

    ``range_size="count"`` sizes a range ``[low, high]`` as ``high - low + 1``,
    the number of integer values it holds (so ``[2, 6]`` has size 5).
    ``range_size="width"`` uses ``high - low`` for continuous features; a
    zero-width range is then only an error when the two values differ there.
    """
    p, q = vector_pair(p, q)
    r = as_ranges(ranges, p.size)
    if range_size == "count":
        size = r[:, 1] - r[:, 0] + 1.0
    elif range_size == "width":
        size = r[:, 1] - r[:, 0]
    else:
        raise ValueError(f"unknown range size convention {range_size!r}")
    diff = np.abs(p - q)
    bad = (size == 0) & (diff != 0)
    if bad.any():
        raise ZeroRange(f"zero-width range at dimension {int(np.argmax(bad))} with differing values")
    safe = np.where(size == 0, 1.0, size)
    return float(np.sum(diff / safe) / p.size)


def soergel(p, q) -> float:
    p, q = vector_pair(p, q)
    denom = float(np.maximum(p, q).sum())
    if denom == 0:
        raise DegenerateDenominator("sum of maxima is zero")
    return float(np.abs(p - q).sum()) / denom


def kulczynski_vector(p, q) -> float:
    p, q = vector_pair(p, q)
    denom = float(np.minimum(p, q).sum())
    if denom == 0:
        raise DegenerateDenominator("sum of minima is zero")
    return float(np.abs(p - q).sum()) / denom


def canberra(p, q, adkins: bool = False) -> float:
    """Canberra distance; 0/0 terms count as 0.

    With ``adkins=True`` the sum is divided by the number of dimensions where
    not both entries are zero.
    """
    p, q = vector_pair(p, q)
    num = np.abs(p - q)
    den = np.abs(p) + np.abs(q)
    both_zero = den == 0
    total = float(np.sum(num[~both_zero] / den[~both_zero]))
    if not adkins:
        return total
    live = p.size - int(both_zero.sum())
    if live == 0:
        raise AllZeroAdkins("every dimension is zero in both vectors")
    return total / live


def lorentzian(p, q, mode: str = "paper") -> float:
    """Lorentzian distance.

    ``mode="paper"``: ``sqrt(sum_{i<d} (p_i - q_i)^2 - (p_d - q_d)^2)``, the
    Minkowski-spacetime interval with the last coordinate as time. Far-apart
    points can get distance 0 and the radicand can go negative
    (:class:`NegativeRadicand`).

    ``mode="log"``: ``sum ln(1 + |p_i - q_i|)``.
    """
    p, q = vector_pair(p, q)
    diff = p - q
    if mode == "log":
        return float(np.log1p(np.abs(diff)).sum())
    if mode != "paper":
        raise ValueError(f"unknown Lorentzian mode {mode!r}")
    space = float(diff[:-1] @ diff[:-1])
    time = float(diff[-1] ** 2)
    rad = space - time
    if rad < 0:
        if rad >= -1e-12 * max(space, time):
            return 0.0
        raise NegativeRadicand(f"radicand {rad!r} is negative; pre-process the points first")
    return math.sqrt(rad)
