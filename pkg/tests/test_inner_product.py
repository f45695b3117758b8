import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from simmeasures import FIXTURES, angular, cosine, dice, euclidean, inner_product, jaccard_vector
from simmeasures.errors import DegenerateDenominator, DimensionMismatch, ZeroVector

from strategies import positive, vector_pairs

F1, F2 = FIXTURES.F1, FIXTURES.F2


def test_inner_product_examples():
    sim, dist = inner_product(F1, F2)
    assert sim == -30
    assert dist == pytest.approx(math.sqrt(120), abs=1e-12)
    assert dist == pytest.approx(10.95, abs=1e-2)
    assert inner_product(F1, F1).distance == 0
    assert inner_product((1, 0), (0, 1)) == (0, pytest.approx(math.sqrt(2)))


def test_inner_product_is_trace_product_of_matrices():
    a = np.array(F1).reshape(2, 2)
    b = np.array(F2).reshape(2, 2)
    assert inner_product(F1, F2).similarity == np.trace(a.T @ b)


def test_cosine_examples():
    assert cosine(F1, F2) == (-1, 2)
    assert cosine(F1, F1) == (pytest.approx(1, abs=1e-15), pytest.approx(0, abs=1e-15))
    assert cosine((1, 0), (0, 1)) == (0, 1)
    with pytest.raises(ZeroVector):
        cosine((0, 0), (1, 1))


def test_angular_examples():
    assert angular(F1, F2).distance == pytest.approx(1, abs=1e-12)
    assert angular(F1, F1).distance == 0
    assert angular((1, 0), (0, 1)).distance == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(ZeroVector):
        angular((0, 0), (1, 1))


def test_jaccard_examples():
    sim, dist = jaccard_vector(F1, F2)
    assert sim == pytest.approx(-1 / 3, abs=1e-12)
    assert dist == pytest.approx(4 / 3, abs=1e-12)
    assert jaccard_vector(F1, F1) == (1, 0)
    # set-overlap oracle |A & B| / |A | B| on the supports {0,1} and {0,2}
    assert jaccard_vector((1, 1, 0), (1, 0, 1)).similarity == pytest.approx(1 / 3)
    with pytest.raises(DegenerateDenominator):
        jaccard_vector((0, 0), (0, 0))


def test_dice_examples():
    assert dice(F1, F2) == (-1, 2)
    assert dice(F1, F1) == (1, 0)
    assert dice((1, 1, 0), (1, 0, 1)).similarity == pytest.approx(0.5)
    with pytest.raises(DegenerateDenominator):
        dice((0, 0), (0, 0))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        inner_product((1, 2), (1, 2, 3))


@given(vector_pairs())
def test_inner_product_distance_is_l2(pq):
    p, q = pq
    assert inner_product(p, q).distance == pytest.approx(euclidean(p, q), rel=1e-12, abs=1e-12)


@given(vector_pairs(), positive, positive)
def test_cosine_scale_invariance(pq, a, b):
    p, q = pq
    assume(np.linalg.norm(p) > 1e-3 and np.linalg.norm(q) > 1e-3)
    base = cosine(p, q)
    scaled = cosine(np.multiply(p, a), np.multiply(q, b))
    assert scaled.similarity == pytest.approx(base.similarity, abs=1e-12)
    assert scaled.distance == pytest.approx(base.distance, abs=1e-12)


@given(vector_pairs())
def test_pair_complements(pq):
    p, q = pq
    assume(np.linalg.norm(p) > 1e-3 and np.linalg.norm(q) > 1e-3)
    for f in (cosine, angular, jaccard_vector, dice):
        s, d = f(p, q)
        assert s + d == pytest.approx(1, abs=1e-12)
    assert 0 <= angular(p, q).distance <= 1


@given(vector_pairs(elements=st.floats(0, 100, allow_nan=False)))
def test_dice_from_jaccard(pq):
    p, q = pq
    assume(np.dot(p, p) + np.dot(q, q) > 1e-6)
    j = jaccard_vector(p, q).similarity
    assert dice(p, q).similarity == pytest.approx(2 * j / (1 + j), abs=1e-12)


def test_jaccard_triangle_fails_on_general_nonnegative_reals():
    x, y, z = (5, 2, 3), (2, 1, 3), (1, 0, 2)
    d = lambda a, b: jaccard_vector(a, b).distance
    assert d(x, z) > d(x, y) + d(y, z)
