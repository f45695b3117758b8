"""Measures built on the dot product.

Any finite-dimensional inner product space used in practice (n x n matrices
with the trace product, polynomial coefficient vectors) reduces to the plain
dot product once the elements are flattened, e.g. ``tr(P.T @ Q) ==
P.ravel() @ Q.ravel()``. Everything here therefore works on flat vectors.
"""
from __future__ import annotations

import math

import numpy as np

from .core import SimDistPair, vector_pair
from .errors import DegenerateDenominator, ZeroVector


def inner_product(p, q) -> SimDistPair:
    """Dot product as similarity, induced-norm distance ``||p - q||``.

    The distance is *not* ``1 - similarity``.
    """
    p, q = vector_pair(p, q)
    diff = p - q
    return SimDistPair(float(p @ q), math.sqrt(float(diff @ diff)))


def _cos(p: np.ndarray, q: np.ndarray) -> float:
    np_, nq = math.sqrt(float(p @ p)), math.sqrt(float(q @ q))
    if np_ == 0 or nq == 0:
        raise ZeroVector("cosine is undefined for a zero vector")
    c = float(p @ q) / (np_ * nq)
    return min(1.0, max(-1.0, c))


def cosine(p, q) -> SimDistPair:
    p, q = vector_pair(p, q)
    c = _cos(p, q)
    return SimDistPair(c, 1.0 - c)


def angular(p, q) -> SimDistPair:
    """Normalized angle ``arccos(cos) / pi`` in [0, 1]; similarity is its complement.

    The angle is computed as ``2 atan2(|u - v|, |u + v|)`` on the unit vectors,
    which stays accurate near 0 and pi where ``arccos`` loses half its digits.
    """
    p, q = vector_pair(p, q)
    _cos(p, q)
    u = p / np.linalg.norm(p)
    v = q / np.linalg.norm(q)
    d = 2.0 * math.atan2(float(np.linalg.norm(u - v)), float(np.linalg.norm(u + v))) / math.pi
    return SimDistPair(1.0 - d, d)


def jaccard_vector(p, q) -> SimDistPair:
    """Tanimoto form ``<p,q> / (|p|^2 + |q|^2 - <p,q>)``.

    Signed inputs may give a negative similarity; it is returned unchanged.
    """
    p, q = vector_pair(p, q)
    pq = float(p @ q)
    denom = float(p @ p) + float(q @ q) - pq
    if denom == 0:
        raise DegenerateDenominator("|p|^2 + |q|^2 - <p,q> is zero")
    diff = p - q
    return SimDistPair(pq / denom, float(diff @ diff) / denom)


def dice(p, q) -> SimDistPair:
    p, q = vector_pair(p, q)
    denom = float(p @ p) + float(q @ q)
    if denom == 0:
        raise DegenerateDenominator("both vectors are zero")
    diff = p - q
    return SimDistPair(2.0 * float(p @ q) / denom, float(diff @ diff) / denom)
