"""Subsequence, Jaro and N-gram similarities on symbol strings."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .core import SimDistPair, as_weights
from .errors import EmptyProfile, EmptyUnion, InvalidK, InvalidN, InvalidScale


def lcs(p: Sequence, q: Sequence) -> int:
    """Length of a longest common subsequence."""
    prev = [0] * (len(q) + 1)
    for a in p:
        cur = [0]
        for j, b in enumerate(q, 1):
            cur.append(prev[j - 1] + 1 if a == b else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def lcsk(p: Sequence, q: Sequence, k: int) -> int:
    """Most non-overlapping, in-order pairs of equal length-``k`` blocks.

    ``lcsk(p, q, 1) == lcs(p, q)``.
    """
    if not (isinstance(k, int) and k >= 1):
        raise InvalidK(f"k must be an integer >= 1, got {k!r}")
    n, m = len(p), len(q)
    # run[i][j]: length of the common suffix of p[:i] and q[:j]
    run = [[0] * (m + 1) for _ in range(n + 1)]
    best = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if p[i - 1] == q[j - 1]:
                run[i][j] = run[i - 1][j - 1] + 1
            val = max(best[i - 1][j], best[i][j - 1])
            if run[i][j] >= k:
                val = max(val, best[i - k][j - k] + 1)
            best[i][j] = val
    return best[n][m]


def hcs(p: Sequence, q: Sequence, weights: Mapping[Hashable, float]) -> float:
    """Heaviest common subsequence: maximal summed symbol weight."""
    as_weights(weights, set(p) & set(q))
    prev = [0.0] * (len(q) + 1)
    for a in p:
        cur = [0.0]
        for j, b in enumerate(q, 1):
            val = max(prev[j], cur[j - 1])
            if a == b:
                val = max(val, prev[j - 1] + weights[a])
            cur.append(val)
        prev = cur
    return prev[-1]


JARO_MODES = ("paper", "standard")


def _jaro_match(p: Sequence, q: Sequence):
    """Greedy Jaro matching inside the window ``max(0, max(|p|,|q|)//2 - 1)``.

    Returns the matched index pairs in order of ``p``.
    """
    window = max(0, max(len(p), len(q)) // 2 - 1)
    used = [False] * len(q)
    pairs = []
    for i, a in enumerate(p):
        lo, hi = max(0, i - window), min(len(q), i + window + 1)
        for j in range(lo, hi):
            if not used[j] and q[j] == a:
                used[j] = True
                pairs.append((i, j))
                break
    return pairs


def jaro(p: Sequence, q: Sequence, mode: str = "paper") -> SimDistPair:
    """Jaro similarity ``(m/|p| + m/|q| + (m - t)/m) / 3``, 0 when ``m == 0``.

    ``mode="paper"``: ``t`` is half the number of matched pairs sitting at
    different positions. ``mode="standard"``: ``t`` is half the number of
    matched symbols that are out of order.
    """
    if mode not in JARO_MODES:
        raise ValueError(f"unknown Jaro mode {mode!r}")
    pairs = _jaro_match(p, q)
    m = len(pairs)
    if m == 0:
        return SimDistPair(0.0, 1.0)
    if mode == "paper":
        t = sum(i != j for i, j in pairs) / 2.0
    else:
        p_order = [p[i] for i, _ in pairs]
        q_order = [q[j] for _, j in sorted(pairs, key=lambda ij: ij[1])]
        t = sum(a != b for a, b in zip(p_order, q_order)) / 2.0
    sim = (m / len(p) + m / len(q) + (m - t) / m) / 3.0
    return SimDistPair(sim, 1.0 - sim)


def jaro_winkler(
    p: Sequence,
    q: Sequence,
    scale: float = 0.1,
    max_prefix: int = 4,
    mode: str = "paper",
) -> SimDistPair:
    """Jaro boosted by the common prefix: ``sim + l * scale * (1 - sim)``."""
    if not 0 <= scale <= 0.25:
        raise InvalidScale(f"scale must lie in [0, 0.25], got {scale!r}")
    base = jaro(p, q, mode).similarity
    ell = 0
    for a, b in zip(p, q):
        if ell >= max_prefix or a != b:
            break
        ell += 1
    sim = base + ell * scale * (1.0 - base)
    return SimDistPair(sim, 1.0 - sim)


@dataclass(frozen=True)
class NgramProfile:
    n: int
    counts: Mapping[tuple, int]

    @property
    def distinct(self) -> frozenset:
        return frozenset(self.counts)

    def basis(self, other: "NgramProfile | None" = None) -> list:
        """Sorted n-grams of this profile (joined with ``other`` if given)."""
        grams = set(self.counts) | (set(other.counts) if other else set())
        return sorted(grams, key=_gram_key)

    def vector(self, basis: Sequence) -> list[int]:
        return [self.counts.get(g, 0) for g in basis]


def _gram_key(g: tuple):
    return tuple(repr(s) if not isinstance(s, str) else s for s in g)


def _check_n(n) -> None:
    if not (isinstance(n, int) and n >= 1):
        raise InvalidN(f"n must be an integer >= 1, got {n!r}")


def ngram_profile(s: Sequence, n: int) -> NgramProfile:
    """All ``len(s) - n + 1`` windows of ``s``, unpadded.

    Grams are tuples of symbols; :func:`gram_text` joins them for display.
    """
    _check_n(n)
    counts = Counter(tuple(s[i:i + n]) for i in range(len(s) - n + 1))
    return NgramProfile(n, dict(counts))


def gram_text(g: tuple) -> str:
    return "".join(map(str, g))


def ngram_measure(p: Sequence, q: Sequence, n: int = 2) -> SimDistPair:
    """Shared distinct n-grams as similarity, unshared ones as distance."""
    a, b = ngram_profile(p, n).distinct, ngram_profile(q, n).distinct
    common = len(a & b)
    return SimDistPair(common, len(a | b) - common)


def ngram_jaccard(p: Sequence, q: Sequence, n: int = 2) -> SimDistPair:
    a, b = ngram_profile(p, n).distinct, ngram_profile(q, n).distinct
    union = len(a | b)
    if union == 0:
        raise EmptyUnion("neither string is long enough to contain an n-gram")
    sim = len(a & b) / union
    return SimDistPair(sim, 1.0 - sim)


def ngram_cosine(p: Sequence, q: Sequence, n: int = 2) -> SimDistPair:
    """Cosine of the n-gram count vectors over the sorted joint basis."""
    a, b = ngram_profile(p, n), ngram_profile(q, n)
    if not a.counts or not b.counts:
        raise EmptyProfile("both strings need at least one n-gram")
    basis = a.basis(b)
    u, v = a.vector(basis), b.vector(basis)
    dot = sum(x * y for x, y in zip(u, v))
    sim = dot / (math.sqrt(sum(x * x for x in u)) * math.sqrt(sum(y * y for y in v)))
    sim = min(1.0, sim)
    return SimDistPair(sim, 1.0 - sim)
