"""Chi-squared style measures, rank correlation and Mahalanobis distance."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import SimDistPair, as_dataset, as_vector, pdf_pair, rank_vector, vector_pair
from .errors import (
    DimensionMismatch,
    NegativeQuadraticForm,
    SingularCovariance,
    ZeroExpectedBin,
    ZeroVariance,
)


def _chi2_terms(num: np.ndarray, den: np.ndarray) -> float:
    # 0/0 bins drop out
    live = den != 0
    return float(np.sum(num[live] / den[live]))


def pearson_chi2(p, q) -> float:
    """``sum (p_i - q_i)^2 / q_i`` with ``q`` as the expected distribution."""
    p, q = pdf_pair(p, q)
    sq = (p - q) ** 2
    if ((q == 0) & (sq != 0)).any():
        raise ZeroExpectedBin("expected bin is zero where the observed bin is not")
    return _chi2_terms(sq, q)


def neyman_chi2(p, q) -> float:
    """``sum (p_i - q_i)^2 / p_i``; the mirror image of :func:`pearson_chi2`."""
    p, q = pdf_pair(p, q)
    sq = (p - q) ** 2
    if ((p == 0) & (sq != 0)).any():
        raise ZeroExpectedBin("first PDF is zero in a bin where the PDFs differ")
    return _chi2_terms(sq, p)


def additive_symmetric_chi2(p, q) -> float:
    """``sum (p_i - q_i)^2 (p_i + q_i) / (p_i q_i)``, i.e. Pearson plus Neyman."""
    p, q = pdf_pair(p, q)
    sq = (p - q) ** 2
    if (((p == 0) | (q == 0)) & (sq != 0)).any():
        raise ZeroExpectedBin("a PDF is zero in a bin where the PDFs differ")
    return _chi2_terms(sq * (p + q), p * q)


def pearson_correlation(p, q) -> float:
    """Pearson's rho from population moments ``E[PQ] - E[P]E[Q]`` over paired entries."""
    p, q = vector_pair(p, q)
    dp = p - p.mean()
    dq = q - q.mean()
    vp = float(dp @ dp)
    vq = float(dq @ dq)
    if vp == 0 or vq == 0:
        raise ZeroVariance("a vector with zero variance has no correlation")
    return max(-1.0, min(1.0, float(dp @ dq) / math.sqrt(vp * vq)))


def spearman(p, q, mode: str = "paper") -> SimDistPair:
    """Spearman rank correlation (as similarity) and distance.

    ``mode="paper"`` divides by ``n(n-1)``; ``mode="classic"`` by ``n(n^2-1)``,
    the textbook denominator that keeps the correlation in [-1, 1].
    """
    p, q = vector_pair(p, q)
    n = p.size
    if n < 2:
        raise DimensionMismatch("Spearman needs at least two entries")
    if mode == "paper":
        denom = n * (n - 1)
    elif mode == "classic":
        denom = n * (n * n - 1)
    else:
        raise ValueError(f"unknown Spearman mode {mode!r}")
    gap = rank_vector(p) - rank_vector(q)
    dist = 6.0 * float(gap @ gap) / denom
    return SimDistPair(1.0 - dist, dist)


def squared_chi2(p, q, probabilistic_symmetric: bool = False) -> float:
    """Triangular discrimination ``sum (p-q)^2/(p+q)``; doubled when
    ``probabilistic_symmetric`` is set."""
    p, q = pdf_pair(p, q)
    val = _chi2_terms((p - q) ** 2, p + q)
    return 2.0 * val if probabilistic_symmetric else val


def divergence_distance(p, q) -> float:
    p, q = pdf_pair(p, q)
    return 2.0 * _chi2_terms((p - q) ** 2, (p + q) ** 2)


def clark(p, q) -> float:
    """Coefficient of divergence, ``sqrt(divergence_distance / 2)``."""
    p, q = pdf_pair(p, q)
    return math.sqrt(_chi2_terms((p - q) ** 2, (p + q) ** 2))


@dataclass(frozen=True)
class CovarianceModel:
    mean: np.ndarray
    cov: np.ndarray
    inv: np.ndarray
    source_n: int
    pseudo: bool = False

    @property
    def dim(self) -> int:
        return self.mean.size


PINV_CUTOFF = 1e-10


def estimate_covariance(sample, pseudo_inverse: bool = False) -> CovarianceModel:
    """Column means and the unbiased (n-1) covariance of a data sample.

    The inverse is exact unless ``pseudo_inverse`` is set, in which case
    eigenvalues below ``1e-10 * max eigenvalue`` are dropped.
    """
    data = as_dataset(sample)
    n = data.shape[0]
    mean = data.mean(axis=0)
    centered = data - mean
    cov = centered.T @ centered / (n - 1)
    cov = (cov + cov.T) / 2.0
    evals, evecs = np.linalg.eigh(cov)
    top = evals.max() if evals.size else 0.0
    small = evals <= PINV_CUTOFF * top if top > 0 else np.ones_like(evals, dtype=bool)
    if small.any() and not pseudo_inverse:
        raise SingularCovariance(
            f"covariance is singular ({int(small.sum())} of {evals.size} eigenvalues ~ 0)"
        )
    if pseudo_inverse:
        recip = np.where(small, 0.0, 1.0 / np.where(small, 1.0, evals))
        inv = (evecs * recip) @ evecs.T
    else:
        inv = np.linalg.inv(cov)
    inv = (inv + inv.T) / 2.0
    for arr in (mean, cov, inv):
        arr.setflags(write=False)
    return CovarianceModel(mean=mean, cov=cov, inv=inv, source_n=n, pseudo=pseudo_inverse)


def identity_model(dim: int) -> CovarianceModel:
    eye = np.eye(dim)
    eye.setflags(write=False)
    zero = np.zeros(dim)
    zero.setflags(write=False)
    return CovarianceModel(mean=zero, cov=eye, inv=eye, source_n=0)


def mahalanobis(p, q=None, model: CovarianceModel | None = None) -> float:
    """``sqrt((p - q)^T cov^-1 (p - q))``.

    Leave ``q`` as None for the point-to-distribution distance (``q`` is the
    model mean).
    """
    if model is None:
        raise TypeError("mahalanobis needs a CovarianceModel (see estimate_covariance)")
    p = as_vector(p, "p")
    q = model.mean if q is None else as_vector(q, "q")
    if p.size != model.dim or q.size != model.dim:
        raise DimensionMismatch(f"model is {model.dim}-dimensional, got {p.size} and {q.size}")
    d = p - q
    form = float(d @ model.inv @ d)
    if form < 0:
        if form < -1e-9:
            raise NegativeQuadraticForm(f"quadratic form is {form!r}; inverse is not PSD")
        form = 0.0
    return math.sqrt(form)
