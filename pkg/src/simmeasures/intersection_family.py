"""Min/max based measures on PDFs."""
from __future__ import annotations

import numpy as np

from .core import SimDistPair, pdf_pair
from .errors import DisjointSupport, IdenticalInputs


def intersection(p, q) -> SimDistPair:
    """Histogram intersection ``sum min(p_i, q_i)``.

    For two PDFs the distance ``1 - sim`` equals half the L1 distance; the
    half-L1 form is what is returned since it does not cancel.
    """
    p, q = pdf_pair(p, q)
    sim = float(np.minimum(p, q).sum())
    return SimDistPair(sim, 0.5 * float(np.abs(p - q).sum()))


def wave_hedges(p, q, form: str = "ratio") -> float:
    """``sum (1 - min/max)`` (``form="ratio"``) or ``sum |p-q|/max``
    (``form="absdiff"``). Bins where both are zero contribute nothing."""
    p, q = pdf_pair(p, q)
    hi = np.maximum(p, q)
    live = hi > 0
    if form == "ratio":
        return float(np.sum(1.0 - np.minimum(p, q)[live] / hi[live]))
    if form == "absdiff":
        return float(np.sum(np.abs(p - q)[live] / hi[live]))
    raise ValueError(f"unknown Wave-Hedges form {form!r}")


def sorensen(p, q) -> SimDistPair:
    """Sorensen / Bray-Curtis / Czekanowski."""
    p, q = pdf_pair(p, q)
    total = float((p + q).sum())
    return SimDistPair(
        2.0 * float(np.minimum(p, q).sum()) / total,
        float(np.abs(p - q).sum()) / total,
    )


def motyka(p, q) -> SimDistPair:
    """Half the Sorensen similarity. Note that ``motyka(p, p)`` is (0.5, 0.5)."""
    p, q = pdf_pair(p, q)
    total = float((p + q).sum())
    return SimDistPair(
        float(np.minimum(p, q).sum()) / total,
        float(np.maximum(p, q).sum()) / total,
    )


def kulczynski_pdf(p, q) -> SimDistPair:
    """Kulczynski similarity and its reciprocal distance.

    Raises :class:`IdenticalInputs` when ``p == q`` (the similarity is
    unbounded) and :class:`DisjointSupport` when the supports do not overlap
    (the distance is unbounded).
    """
    p, q = pdf_pair(p, q)
    common = float(np.minimum(p, q).sum())
    apart = float(np.abs(p - q).sum())
    if apart == 0:
        raise IdenticalInputs("Kulczynski similarity is unbounded for identical PDFs")
    if common == 0:
        raise DisjointSupport("Kulczynski distance is unbounded for disjoint PDFs")
    return SimDistPair(common / apart, apart / common)


def kulczynski_pdf_distance(p, q) -> float:
    """The distance half alone; defined (and 0) for identical inputs."""
    p, q = pdf_pair(p, q)
    common = float(np.minimum(p, q).sum())
    if common == 0:
        raise DisjointSupport("Kulczynski distance is unbounded for disjoint PDFs")
    return float(np.abs(p - q).sum()) / common


def jaccard_pdf(p, q) -> SimDistPair:
    """Jaccard/Tanimoto distance with the Ruzicka similarity as complement."""
    p, q = pdf_pair(p, q)
    hi = np.maximum(p, q)
    lo = np.minimum(p, q)
    top = float(hi.sum())
    return SimDistPair(float(lo.sum()) / top, float((hi - lo).sum()) / top)
