"""Measures derived from the Bhattacharyya coefficient (fidelity)."""
from __future__ import annotations

import math

import numpy as np

from .core import SimDistPair, pdf_pair
from .errors import DisjointSupport


def _kernel(p, q) -> tuple[float, float]:
    """Return ``(BC, chord)`` with ``BC = sum sqrt(p q)`` and
    ``chord = sum (sqrt p - sqrt q)^2``.

    ``chord`` equals ``2 - 2 BC`` for exact PDFs; it is summed directly so
    that identical inputs give exactly 0 instead of a rounding residue.
    """
    p, q = pdf_pair(p, q)
    rp, rq = np.sqrt(p), np.sqrt(q)
    bc = float(rp @ rq)
    chord = float(np.sum((rp - rq) ** 2))
    return min(bc, 1.0), chord


def bhattacharyya_coefficient(p, q) -> float:
    return _kernel(p, q)[0]


fidelity = bhattacharyya_coefficient


def bhattacharyya_distance(p, q) -> float:
    """``-ln BC``; unbounded above and not a metric."""
    bc, chord = _kernel(p, q)
    if bc <= 0:
        raise DisjointSupport("PDFs have disjoint support (BC = 0)")
    if chord == 0:
        return 0.0
    return -math.log(bc)


def hellinger(p, q) -> float:
    """``sqrt(1 - BC)``, in [0, 1]."""
    return math.sqrt(min(1.0, _kernel(p, q)[1] / 2.0))


def matusita(p, q) -> float:
    """``sqrt(2 - 2 BC)`` = ``sqrt(2) * hellinger``."""
    return math.sqrt(min(2.0, _kernel(p, q)[1]))


def squared_chord(p, q) -> SimDistPair:
    """Matusita without the root; similarity ``2 BC - 1`` may be negative."""
    dist = min(2.0, _kernel(p, q)[1])
    return SimDistPair(1.0 - dist, dist)
