"""Independent reference implementations used to derive and check frozen values.

Numeric oracles work in 50-digit mpmath arithmetic straight from the textbook
formulas; string oracles are brute-force searches. None of this imports the
package under test.
"""
from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction

from mpmath import mp, mpf

mp.dps = 50


def mpv(xs):
    return [mpf(x) if not isinstance(x, Fraction) else mpf(x.numerator) / x.denominator
            for x in xs]


P_STAR = [Fraction(c, 14) for c in (2, 3, 4, 5)]
Q_STAR = [Fraction(c, 14) for c in (1, 2, 5, 6)]


# entropy family

def entropy(p):
    return -sum(x * mp.log(x) for x in mpv(p) if x > 0)


def kl(p, q):
    return sum(a * mp.log(a / b) for a, b in zip(mpv(p), mpv(q)) if a > 0)


def js(p, q):
    p, q = mpv(p), mpv(q)
    m = [(a + b) / 2 for a, b in zip(p, q)]
    return (kl(p, m) + kl(q, m)) / 2


def sed_entropy(p, q):
    p, q = mpv(p), mpv(q)
    m = [(a + b) / 2 for a, b in zip(p, q)]
    return mp.exp(entropy(m)) / mp.sqrt(mp.exp(entropy(p)) * mp.exp(entropy(q))) - 1


def sed_literal(p, q):
    p, q = mpv(p), mpv(q)
    m = [(a + b) / 2 for a, b in zip(p, q)]

    def c(x):
        return mp.exp(sum(v * mp.log(v) for v in x if v > 0))

    return c(m) / mp.sqrt(c(p) * c(q)) - 1


# chi-squared family

def pearson(p, q):
    return sum((a - b) ** 2 / b for a, b in zip(mpv(p), mpv(q)))


def clark(p, q):
    return mp.sqrt(sum(((a - b) / (a + b)) ** 2 for a, b in zip(mpv(p), mpv(q)) if a + b))


def divergence(p, q):
    return 2 * sum(((a - b) / (a + b)) ** 2 for a, b in zip(mpv(p), mpv(q)) if a + b)


def pearson_r(x, y):
    x, y = mpv(x), mpv(y)
    n = len(x)
    ex, ey = sum(x) / n, sum(y) / n
    exy = sum(a * b for a, b in zip(x, y)) / n
    vx = sum(a * a for a in x) / n - ex ** 2
    vy = sum(b * b for b in y) / n - ey ** 2
    return (exy - ex * ey) / mp.sqrt(vx * vy)


def mahalanobis(sample, p, q=None):
    rows = [mpv(r) for r in sample]
    n, d = len(rows), len(rows[0])
    mu = [sum(r[j] for r in rows) / n for j in range(d)]
    cov = mp.matrix(d, d)
    for i in range(d):
        for j in range(d):
            cov[i, j] = sum((r[i] - mu[i]) * (r[j] - mu[j]) for r in rows) / (n - 1)
    q = mu if q is None else mpv(q)
    diff = mp.matrix([a - b for a, b in zip(mpv(p), q)])
    return mp.sqrt((diff.T * mp.inverse(cov) * diff)[0, 0]), mu, cov, mp.inverse(cov)


# fidelity family

def bc(p, q):
    return sum(mp.sqrt(a * b) for a, b in zip(mpv(p), mpv(q)))


# strings

def bfs_transpositions(p: str, q: str):
    """Fewest transpositions turning p into q; None if unreachable."""
    if sorted(p) != sorted(q):
        return None
    seen = {p: 0}
    queue = deque([p])
    while queue:
        s = queue.popleft()
        if s == q:
            return seen[s]
        lst = list(s)
        for i, j in itertools.combinations(range(len(s)), 2):
            if lst[i] == lst[j]:
                continue
            lst[i], lst[j] = lst[j], lst[i]
            t = "".join(lst)
            lst[i], lst[j] = lst[j], lst[i]
            if t not in seen:
                seen[t] = seen[s] + 1
                queue.append(t)
    return None


def bfs_transposition_ball(p: str) -> dict:
    """Transposition distance from p to every arrangement of its symbols."""
    seen = {p: 0}
    queue = deque([p])
    while queue:
        s = queue.popleft()
        lst = list(s)
        for i, j in itertools.combinations(range(len(s)), 2):
            if lst[i] == lst[j]:
                continue
            lst[i], lst[j] = lst[j], lst[i]
            t = "".join(lst)
            lst[i], lst[j] = lst[j], lst[i]
            if t not in seen:
                seen[t] = seen[s] + 1
                queue.append(t)
    return seen


def bfs_edit(p: str, q: str) -> int:
    """Fewest unit insert/delete/substitute operations turning p into q."""
    alphabet = sorted(set(p) | set(q)) or ["a"]
    cap = max(len(p), len(q)) + 1
    seen = {p: 0}
    queue = deque([p])
    while queue:
        s = queue.popleft()
        if s == q:
            return seen[s]
        nxt = []
        for i in range(len(s) + 1):
            if len(s) < cap:
                nxt.extend(s[:i] + c + s[i:] for c in alphabet)
            if i < len(s):
                nxt.append(s[:i] + s[i + 1:])
                nxt.extend(s[:i] + c + s[i + 1:] for c in alphabet if c != s[i])
        for t in nxt:
            if t not in seen:
                seen[t] = seen[s] + 1
                queue.append(t)
    raise AssertionError("unreachable")


def bfs_edit_swap(p: str, q: str) -> int:
    """Like bfs_edit, with adjacent transposition as a fourth unit operation
    (the unrestricted Damerau distance)."""
    alphabet = sorted(set(p) | set(q)) or ["a"]
    cap = max(len(p), len(q)) + 1
    seen = {p: 0}
    queue = deque([p])
    while queue:
        s = queue.popleft()
        if s == q:
            return seen[s]
        nxt = []
        for i in range(len(s) + 1):
            if len(s) < cap:
                nxt.extend(s[:i] + c + s[i:] for c in alphabet)
            if i < len(s):
                nxt.append(s[:i] + s[i + 1:])
                nxt.extend(s[:i] + c + s[i + 1:] for c in alphabet if c != s[i])
            if i + 1 < len(s):
                nxt.append(s[:i] + s[i + 1] + s[i] + s[i + 2:])
        for t in nxt:
            if t not in seen:
                seen[t] = seen[s] + 1
                queue.append(t)
    raise AssertionError("unreachable")


def lcs_brute(p: str, q: str) -> int:
    """Longest subsequence of p (by enumeration) that is a subsequence of q."""
    def is_sub(s, t):
        it = iter(t)
        return all(c in it for c in s)

    for size in range(min(len(p), len(q)), 0, -1):
        for idx in itertools.combinations(range(len(p)), size):
            if is_sub("".join(p[i] for i in idx), q):
                return size
    return 0


def lcsk_brute(p: str, q: str, k: int) -> int:
    """Most pairs of equal k-blocks, in order and non-overlapping in both strings."""
    blocks = [(i, j) for i in range(len(p) - k + 1) for j in range(len(q) - k + 1)
              if p[i:i + k] == q[j:j + k]]
    best = 0

    def extend(last_i, last_j, start, count):
        nonlocal best
        best = max(best, count)
        for n in range(start, len(blocks)):
            i, j = blocks[n]
            if i >= last_i + k and j >= last_j + k:
                extend(i, j, n + 1, count + 1)

    extend(-k, -k, 0, 0)
    return best


def swap_brute(p: str, q: str):
    """Smallest set of pairwise non-adjacent adjacent swaps turning p into q."""
    n = len(p)
    for size in range(n // 2 + 1):
        for starts in itertools.combinations(range(n - 1), size):
            if any(b - a < 2 for a, b in zip(starts, starts[1:])):
                continue
            s = list(p)
            for i in starts:
                s[i], s[i + 1] = s[i + 1], s[i]
            if "".join(s) == q:
                return size
    return None


def parallel_brute(p: str, q: str):
    """Smallest set of position-disjoint transpositions turning p into q."""
    n = len(p)
    pairs = list(itertools.combinations(range(n), 2))
    for size in range(n // 2 + 1):
        for chosen in itertools.combinations(pairs, size):
            used = [x for pr in chosen for x in pr]
            if len(used) != len(set(used)):
                continue
            s = list(p)
            for i, j in chosen:
                s[i], s[j] = s[j], s[i]
            if "".join(s) == q:
                return size
    return None
