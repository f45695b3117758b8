"""Shannon-entropy based divergences between PDFs.

Natural logarithms throughout and ``0 * ln 0 = 0``. Divergences whose value
would be infinite (``p_i > 0`` where ``q_i == 0``) raise
:class:`AbsoluteContinuityViolation` unless the caller opts into additive
smoothing with ``eps``.
"""
from __future__ import annotations

import math

import numpy as np

from .core import as_pdf, pdf_pair
from .errors import AbsoluteContinuityViolation


def _xlogx(x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = x[pos] * np.log(x[pos])
    return out


def _xlog_ratio(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Elementwise ``x ln(x/y)`` with ``0 ln(0/y) = 0``; caller guarantees
    ``y > 0`` wherever ``x > 0``."""
    out = np.zeros_like(x)
    pos = x > 0
    # difference of logs: x / y overflows when y is subnormal
    out[pos] = x[pos] * (np.log(x[pos]) - np.log(y[pos]))
    return out


def _xlog_mix(x: np.ndarray, total: np.ndarray) -> np.ndarray:
    """``x ln(x / m)`` for the mixture ``m = total / 2``, written so that a
    subnormal ``total / 2`` cannot round to zero."""
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = x[pos] * np.log(2.0 * x[pos] / total[pos])
    return out


def _smooth(p: np.ndarray, eps: float) -> np.ndarray:
    s = p + eps
    return s / s.sum()


def _pair(p, q, eps):
    p, q = pdf_pair(p, q)
    if eps:
        p, q = _smooth(p, eps), _smooth(q, eps)
    return p, q


def _check_continuity(p: np.ndarray, q: np.ndarray) -> None:
    bad = (p > 0) & (q == 0)
    if bad.any():
        raise AbsoluteContinuityViolation(
            f"q is zero where p has mass (bin {int(np.argmax(bad))})"
        )


def shannon_entropy(p) -> float:
    """Non-negative entropy ``H(p) = -sum p_i ln p_i``.

    This is the negation of the ``sum p ln p`` quantity some texts call SE.
    """
    p = as_pdf(p)
    return float(-_xlogx(p).sum()) + 0.0


def kl_divergence(p, q, eps: float = 0.0) -> float:
    p, q = _pair(p, q, eps)
    _check_continuity(p, q)
    return float(_xlog_ratio(p, q).sum())


def cross_entropy(p, q, eps: float = 0.0) -> float:
    """``-sum p_i ln q_i``; equals ``kl_divergence(p, q) + shannon_entropy(p)``."""
    p, q = _pair(p, q, eps)
    _check_continuity(p, q)
    pos = p > 0
    return float(-np.sum(p[pos] * np.log(q[pos]))) + 0.0


def j_divergence(p, q, eps: float = 0.0) -> float:
    """Jeffreys divergence ``sum (p_i - q_i) ln(p_i / q_i)``."""
    p, q = _pair(p, q, eps)
    _check_continuity(p, q)
    _check_continuity(q, p)
    pos = p > 0
    return float(np.sum((p[pos] - q[pos]) * (np.log(p[pos]) - np.log(q[pos]))))


def k_divergence(p, q) -> float:
    """KL divergence from ``p`` to the mixture ``(p + q) / 2``."""
    p, q = pdf_pair(p, q)
    return float(_xlog_mix(p, p + q).sum())


def topsoe(p, q) -> float:
    p, q = pdf_pair(p, q)
    total = p + q
    return float(_xlog_mix(p, total).sum() + _xlog_mix(q, total).sum())


def jensen_shannon(p, q) -> float:
    """Half the Topsoe divergence; bounded by ln 2."""
    return 0.5 * topsoe(p, q)


def jensen_shannon_distance(p, q) -> float:
    """Square root of the Jensen-Shannon divergence (a metric)."""
    return math.sqrt(max(0.0, jensen_shannon(p, q)))


def jensen_difference(p, q) -> float:
    """Average information of the inputs minus the information of their average.

    Algebraically identical to :func:`jensen_shannon`; computed from its own
    formula.
    """
    p, q = pdf_pair(p, q)
    m = (p + q) / 2.0
    return float(np.sum((_xlogx(p) + _xlogx(q)) / 2.0 - _xlogx(m)))


def sed(p, q, mode: str = "entropy") -> float:
    """Structural entropic distance ``C(m) / sqrt(C(p) C(q)) - 1``.

    ``mode="entropy"`` uses the complexity ``C(X) = exp(H(X))``, which makes
    the result ``exp(JS) - 1``: non-negative and zero only for ``p == q``.
    ``mode="paper-literal"`` uses ``C(X) = exp(sum X ln X)`` exactly as it is
    usually printed, which can go negative.
    """
    p, q = pdf_pair(p, q)
    m = (p + q) / 2.0
    h_p, h_q, h_m = (float(-_xlogx(x).sum()) for x in (p, q, m))
    if mode == "entropy":
        return math.exp(h_m - 0.5 * (h_p + h_q)) - 1.0
    if mode == "paper-literal":
        return math.exp(-h_m + 0.5 * (h_p + h_q)) - 1.0
    raise ValueError(f"unknown SED mode {mode!r}")
