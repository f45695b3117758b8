"""Edit-system distances on symbol strings and operator-sequence costs.

Positions are 1-based in :class:`RearrangementOp`, 0-based everywhere else.
A distance that cannot convert one string into the other returns
:data:`NO_CONVERSION` instead of a number.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, Mapping, Sequence

import numpy as np

from .core import NO_CONVERSION, as_weights
from .errors import InvalidExponent, InvalidSequence, LengthMismatch, SizeLimit

INTERCHANGE_SEARCH_LIMIT = 10


def _equal_length(p: Sequence, q: Sequence) -> None:
    if len(p) != len(q):
        raise LengthMismatch(f"strings must have equal length, got {len(p)} and {len(q)}")


def hamming(p: Sequence, q: Sequence) -> int:
    _equal_length(p, q)
    return sum(a != b for a, b in zip(p, q))


def levenshtein(p: Sequence, q: Sequence, sub: float = 1, ins: float = 1, dele: float = 1):
    """Minimum-cost edit distance with per-operation costs (Wagner-Fischer).

    Converts ``p`` into ``q``: ``ins`` is paid per symbol of ``q`` not taken
    from ``p``, ``dele`` per symbol of ``p`` dropped. Returns an int when all
    costs are ints.
    """
    if min(sub, ins, dele) < 0:
        raise ValueError("edit costs must be non-negative")
    prev = [j * ins for j in range(len(q) + 1)]
    for i, a in enumerate(p, 1):
        cur = [i * dele]
        for j, b in enumerate(q, 1):
            cur.append(min(
                prev[j] + dele,
                cur[j - 1] + ins,
                prev[j - 1] + (0 if a == b else sub),
            ))
        prev = cur
    return prev[-1]


def damerau_levenshtein(p: Sequence, q: Sequence) -> int:
    """Optimal-string-alignment distance: unit edits plus adjacent transposition,
    where no substring is edited more than once.

    This restricted variant can differ from the unrestricted Damerau distance,
    e.g. ``("ca", "abc")`` is 3 here and 2 unrestricted.
    """
    n, m = len(p), len(q)
    d = np.zeros((n + 1, m + 1), dtype=np.int64)
    d[:, 0] = np.arange(n + 1)
    d[0, :] = np.arange(m + 1)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            cost = 0 if p[i - 1] == q[j - 1] else 1
            best = min(d[i - 1, j] + 1, d[i, j - 1] + 1, d[i - 1, j - 1] + cost)
            if i > 1 and j > 1 and p[i - 1] == q[j - 2] and p[i - 2] == q[j - 1]:
                best = min(best, d[i - 2, j - 2] + 1)
            d[i, j] = best
    return int(d[n, m])


def swap_distance(p: Sequence, q: Sequence):
    """Number of disjoint adjacent transpositions turning ``p`` into ``q``.

    Each mismatch at ``i`` must be repaired together with ``i + 1`` (position
    ``i - 1`` is already settled when scanning left to right), so the pairing is
    forced and the answer is ``hamming / 2`` or :data:`NO_CONVERSION`.
    """
    _equal_length(p, q)
    n = len(p)
    i = count = 0
    while i < n:
        if p[i] == q[i]:
            i += 1
            continue
        if i + 1 < n and p[i] == q[i + 1] and p[i + 1] == q[i]:
            count += 1
            i += 2
        else:
            return NO_CONVERSION
    return count


def _cycle_count(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            k = start
            while not seen[k]:
                seen[k] = True
                k = perm[k]
    return cycles


def interchange_distance(p: Sequence, q: Sequence):
    """Minimum number of transpositions (any two positions) turning ``p`` into ``q``.

    Duplicate-free strings use ``n - #cycles`` of the induced permutation.
    With repeated symbols the minimum is found by exact search over the
    mismatched positions, limited to ``INTERCHANGE_SEARCH_LIMIT`` of them
    (:class:`SizeLimit` beyond).
    """
    _equal_length(p, q)
    if Counter(p) != Counter(q):
        return NO_CONVERSION
    idx = [k for k in range(len(p)) if p[k] != q[k]]
    if not idx:
        return 0
    src = [p[k] for k in idx]
    dst = [q[k] for k in idx]
    if len(set(src)) == len(src):
        where = {s: k for k, s in enumerate(dst)}
        perm = [where[s] for s in src]
        return len(perm) - _cycle_count(perm)
    if len(idx) > INTERCHANGE_SEARCH_LIMIT:
        raise SizeLimit(
            f"{len(idx)} mismatched positions with repeated symbols; exact search "
            f"is limited to {INTERCHANGE_SEARCH_LIMIT}"
        )
    return _interchange_search(tuple(src), tuple(dst))


def _interchange_search(src: tuple, dst: tuple) -> int:
    n = len(src)

    @lru_cache(maxsize=None)
    def solve(state: tuple) -> int:
        i = next((k for k in range(n) if state[k] != dst[k]), None)
        if i is None:
            return 0
        cands = [j for j in range(i + 1, n) if state[j] == dst[i] and state[j] != dst[j]]
        # a swap fixing both ends closes a 2-cycle and is always optimal
        both = [j for j in cands if dst[j] == state[i]]
        if both:
            cands = both[:1]
        best = math.inf
        for j in cands:
            nxt = list(state)
            nxt[i], nxt[j] = nxt[j], nxt[i]
            best = min(best, 1 + solve(tuple(nxt)))
        return best

    return int(solve(src))


def parallel_interchange_distance(p: Sequence, q: Sequence):
    """Number of position-disjoint transpositions turning ``p`` into ``q``.

    Every mismatch ``(p_i, q_i) = (a, b)`` needs a partner with ``(b, a)``;
    this exists for all of them iff each ordered pair is as frequent as its
    reverse. The answer is then ``hamming / 2``.
    """
    _equal_length(p, q)
    pairs = Counter((a, b) for a, b in zip(p, q) if a != b)
    for (a, b), c in pairs.items():
        if pairs.get((b, a), 0) != c:
            return NO_CONVERSION
    return sum(pairs.values()) // 2


# operator sequences and cost models

_KINDS = ("substitute", "insert", "delete", "swap", "interchange", "reverse")


@dataclass(frozen=True)
class RearrangementOp:
    """One edit operator with 1-based positions.

    ``swap(i)`` exchanges positions ``i`` and ``i + 1``; ``interchange(i, j)``
    and ``reverse(i, j)`` act on ``i <= j``. ``reverse`` reverses the block
    ``i..j`` and exists only to price caller-supplied sequences.
    """

    kind: str
    i: int
    j: int | None = None
    symbol: Hashable = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InvalidSequence(f"unknown operator kind {self.kind!r}")
        if self.kind in ("interchange", "reverse"):
            if self.j is None or self.i > self.j:
                raise InvalidSequence(f"{self.kind} needs i <= j, got ({self.i}, {self.j})")
        if self.kind in ("substitute", "insert") and self.symbol is None:
            raise InvalidSequence(f"{self.kind} needs a symbol")

    @classmethod
    def substitute(cls, i: int, symbol) -> "RearrangementOp":
        return cls("substitute", i, symbol=symbol)

    @classmethod
    def insert(cls, i: int, symbol) -> "RearrangementOp":
        return cls("insert", i, symbol=symbol)

    @classmethod
    def delete(cls, i: int) -> "RearrangementOp":
        return cls("delete", i)

    @classmethod
    def swap(cls, i: int) -> "RearrangementOp":
        return cls("swap", i, i + 1)

    @classmethod
    def interchange(cls, i: int, j: int) -> "RearrangementOp":
        return cls("interchange", i, j)

    @classmethod
    def reverse(cls, i: int, j: int) -> "RearrangementOp":
        return cls("reverse", i, j)

    def positions(self) -> tuple[int, ...]:
        """1-based positions the operator touches."""
        if self.kind == "reverse":
            return tuple(range(self.i, self.j + 1))
        if self.kind in ("swap", "interchange"):
            return (self.i,) if self.i == self.j else (self.i, self.j)
        return (self.i,)

    def extent(self) -> int:
        """Right-most minus left-most touched position, counted inclusively."""
        pos = self.positions()
        return max(pos) - min(pos) + 1


@dataclass(frozen=True)
class UCM:
    pass


@dataclass(frozen=True)
class LCM:
    exponent: float = 1.0

    def __post_init__(self):
        if not self.exponent >= 1:
            raise InvalidExponent(f"LCM exponent must be >= 1, got {self.exponent!r}")


@dataclass(frozen=True)
class ECM:
    weights: Mapping[Hashable, float] = field(default_factory=dict)


def _apply(cur: list, op: RearrangementOp) -> list:
    n = len(cur)
    hi = n + 1 if op.kind == "insert" else n
    for pos in op.positions():
        if not 1 <= pos <= hi:
            raise InvalidSequence(f"{op.kind} at position {pos} is outside 1..{hi}")
    i = op.i - 1
    out = list(cur)
    if op.kind == "substitute":
        out[i] = op.symbol
    elif op.kind == "insert":
        out.insert(i, op.symbol)
    elif op.kind == "delete":
        del out[i]
    elif op.kind in ("swap", "interchange"):
        j = op.j - 1
        out[i], out[j] = out[j], out[i]
    else:
        out[i:op.j] = out[i:op.j][::-1]
    return out


def _participants(cur: list, op: RearrangementOp) -> list:
    if op.kind == "insert":
        return [op.symbol]
    if op.kind == "substitute":
        return [cur[op.i - 1], op.symbol]
    return [cur[k - 1] for k in op.positions()]


_RULES = ("swap", "parallel-interchange")


def check_sequence(seq: Sequence[RearrangementOp], base: Sequence, rule: str | None = None) -> None:
    """Raise :class:`InvalidSequence` unless ``seq`` applies cleanly to ``base``
    and obeys ``rule``.

    ``rule="swap"``: swap operators only, no two touching the same or
    neighbouring positions. ``rule="parallel-interchange"``: swaps or
    interchanges only, each position touched at most once.
    """
    if rule is not None and rule not in _RULES:
        raise ValueError(f"unknown sequence rule {rule!r}")
    cur = list(base)
    for op in seq:
        cur = _apply(cur, op)
    if rule == "swap":
        if any(op.kind != "swap" for op in seq):
            raise InvalidSequence("a swap sequence may contain only swap operators")
        starts = sorted(op.i for op in seq)
        if any(b - a < 2 for a, b in zip(starts, starts[1:])):
            raise InvalidSequence("swap operators must not share or neighbour positions")
    elif rule == "parallel-interchange":
        if any(op.kind not in ("swap", "interchange") for op in seq):
            raise InvalidSequence("only interchange operators are allowed")
        touched = [pos for op in seq for pos in (op.i, op.j)]
        if len(touched) != len(set(touched)):
            raise InvalidSequence("interchanges must touch each position at most once")


def apply_sequence(seq: Sequence[RearrangementOp], base: Sequence):
    """Apply the operators in order; returns a ``str`` when ``base`` is one."""
    cur = list(base)
    for op in seq:
        cur = _apply(cur, op)
    if isinstance(base, str):
        return "".join(cur)
    return tuple(cur)


def sequence_cost(seq: Sequence[RearrangementOp], model, base: Sequence) -> float:
    """Cost of ``seq`` applied to ``base`` under UCM, LCM or ECM.

    UCM counts operators. LCM charges ``extent ** exponent`` per operator,
    where the extent counts positions from left-most to right-most inclusive
    (single-position edits have extent 1). ECM charges the summed weights of
    the symbols an operator moves, or removes and adds for edits.
    """
    cur = list(base)
    total = 0.0
    for op in seq:
        if isinstance(model, UCM):
            total += 1
        elif isinstance(model, LCM):
            total += float(op.extent()) ** model.exponent
        elif isinstance(model, ECM):
            nxt = _apply(cur, op)
            syms = _participants(cur, op)
            as_weights(model.weights, syms)
            total += sum(model.weights[s] for s in syms)
            cur = nxt
            continue
        else:
            raise TypeError(f"unknown cost model {model!r}")
        cur = _apply(cur, op)
    return total
