import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from simmeasures import (
    FIXTURES,
    additive_symmetric_chi2,
    clark,
    divergence_distance,
    estimate_covariance,
    mahalanobis,
    neyman_chi2,
    pearson_chi2,
    pearson_correlation,
    spearman,
    squared_chi2,
)
from simmeasures.chi_square_family import identity_model
from simmeasures.errors import (
    DimensionMismatch,
    SingularCovariance,
    ZeroExpectedBin,
    ZeroVariance,
)
from simmeasures.minkowski_family import euclidean

from strategies import pdf_pairs, vector_pairs

P, Q = FIXTURES.P_STAR, FIXTURES.Q_STAR

CLARK = 0.414392631369543
DIVERGENCE = 0.343442505866748
PEARSON_R = 0.997948715788673
MAHAL_TO_MEAN = 5.33454048876251
MAHAL_PQ = 2.55363804133766
INV_ROW0 = (3.68851865266208, 0.0627308946034046, -1.28214415067005)


def test_chi2_values():
    assert pearson_chi2(P, Q) == pytest.approx(2 / 15, abs=1e-14)
    assert neyman_chi2(P, Q) == pytest.approx(11 / 120, abs=1e-14)
    assert additive_symmetric_chi2(P, Q) == pytest.approx(2 / 15 + 11 / 120, abs=1e-14)
    assert squared_chi2(P, Q) == pytest.approx(0.053, abs=1e-3)
    assert squared_chi2(P, Q, probabilistic_symmetric=True) == pytest.approx(2 * squared_chi2(P, Q))
    assert divergence_distance(P, Q) == pytest.approx(DIVERGENCE, abs=1e-13)
    assert clark(P, Q) == pytest.approx(CLARK, abs=1e-13)
    assert pearson_chi2(P, P) == 0


def test_zero_expected_bin():
    with pytest.raises(ZeroExpectedBin):
        pearson_chi2((0.5, 0.5), (1, 0))
    with pytest.raises(ZeroExpectedBin):
        neyman_chi2((1, 0), (0.5, 0.5))
    # empty in both is skipped
    assert pearson_chi2((0.5, 0.5, 0), (0.5, 0.5, 0)) == 0


def test_pearson_correlation():
    assert pearson_correlation((1, 2, 3), (2, 4, 6.5)) == pytest.approx(PEARSON_R, abs=1e-13)
    assert pearson_correlation((1, 2, 3), (2, 4, 6)) == pytest.approx(1)
    assert pearson_correlation((1, 2, 3), (3, 2, 1)) == pytest.approx(-1)
    with pytest.raises(ZeroVariance):
        pearson_correlation((1, 1, 1), (1, 2, 3))


def test_spearman():
    assert spearman(P, Q) == (1, 0)
    s = spearman((1, 2, 3), (3, 2, 1))
    assert s.distance == pytest.approx(8)
    assert s.similarity + s.distance == 1
    assert spearman((1, 2, 3), (3, 2, 1), mode="classic").similarity == pytest.approx(-1)
    with pytest.raises(DimensionMismatch):
        spearman((1,), (2,))


def test_mahalanobis_sample():
    model = estimate_covariance(FIXTURES.MAHALANOBIS_SAMPLE)
    assert np.allclose(model.mean, (68, 600, 40))
    assert np.allclose(model.cov, [[11.5, 50, 34.75], [50, 1250, 205], [34.75, 205, 110]])
    assert np.allclose(model.inv[0], INV_ROW0, rtol=1e-12)
    assert mahalanobis(FIXTURES.MAHALANOBIS_P, model=model) == pytest.approx(MAHAL_TO_MEAN, abs=1e-12)
    d = mahalanobis(*FIXTURES.MAHALANOBIS_PAIR, model=model)
    assert d == pytest.approx(MAHAL_PQ, abs=1e-12)
    assert mahalanobis(FIXTURES.MAHALANOBIS_P, FIXTURES.MAHALANOBIS_P, model=model) == 0


def test_singular_covariance():
    with pytest.raises(SingularCovariance):
        estimate_covariance([(1, 2), (2, 4), (3, 6)])
    model = estimate_covariance([(1, 2), (2, 4), (3, 6)], pseudo_inverse=True)
    assert model.pseudo
    assert mahalanobis((1, 2), (2, 4), model=model) == pytest.approx(1)


@given(vector_pairs(min_dim=1, max_dim=6))
def test_identity_covariance_is_euclidean(pq):
    p, q = pq
    model = identity_model(len(p))
    assert mahalanobis(p, q, model=model) == pytest.approx(euclidean(p, q), rel=1e-9, abs=1e-9)


@given(st.integers(0, 2**32 - 1))
def test_mahalanobis_affine_invariance(seed):
    rng = np.random.default_rng(seed)
    sample = rng.normal(size=(5, 3))
    a = rng.normal(size=(3, 3)) + 3 * np.eye(3)
    assume(abs(np.linalg.det(a)) > 0.5)
    b = rng.normal(size=3)
    p, q = rng.normal(size=3), rng.normal(size=3)
    base = mahalanobis(p, q, model=estimate_covariance(sample))
    moved = mahalanobis(a @ p + b, a @ q + b, model=estimate_covariance(sample @ a.T + b))
    assert moved == pytest.approx(base, rel=1e-6, abs=1e-6)


@given(pdf_pairs(floor=0.01))
def test_chi2_relations(pq):
    p, q = pq
    assert pearson_chi2(p, q) == pytest.approx(neyman_chi2(q, p), rel=1e-12, abs=1e-15)
    assert additive_symmetric_chi2(p, q) == pytest.approx(
        pearson_chi2(p, q) + neyman_chi2(p, q), rel=1e-10, abs=1e-14)
    assert 2 * clark(p, q) ** 2 == pytest.approx(divergence_distance(p, q), rel=1e-12, abs=1e-15)


@given(st.lists(st.floats(-100, 100, allow_nan=False), min_size=2, max_size=8, unique=True),
       st.sampled_from([np.exp, np.cbrt, lambda x: 3 * x + 1]))
def test_spearman_invariant_under_increasing_maps(xs, f):
    y = list(reversed(xs))
    base = spearman(xs, y)
    xs_t = [float(f(np.float64(v) / 50)) for v in xs]
    assume(len(set(xs_t)) == len(xs_t))
    assert spearman(xs_t, y) == base


@given(vector_pairs(min_dim=2, max_dim=8))
def test_pearson_correlation_bounded(pq):
    p, q = pq
    assume(np.ptp(p) > 1e-3 and np.ptp(q) > 1e-3)
    assert -1 <= pearson_correlation(p, q) <= 1
