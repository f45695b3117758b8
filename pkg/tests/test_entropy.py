import math

import pytest
from hypothesis import given

from simmeasures import (
    FIXTURES,
    cross_entropy,
    j_divergence,
    jensen_difference,
    jensen_shannon,
    jensen_shannon_distance,
    k_divergence,
    kl_divergence,
    sed,
    shannon_entropy,
    topsoe,
)
from simmeasures.errors import AbsoluteContinuityViolation

from strategies import pdf_pairs

P, Q = FIXTURES.P_STAR, FIXTURES.Q_STAR

# 50-digit reference values from tests/oracles.py
H_P = 1.33373602720281
H_Q = 1.19734013399678
KL_PQ = 0.0570362640155551
KL_QP = 0.0503978357541787
JS_PQ = 0.0132773001117355
SED_ENTROPY = 0.0133658348610849
SED_LITERAL = -0.0131895455730626


def test_entropy():
    assert shannon_entropy(P) == pytest.approx(H_P, abs=1e-13)
    assert shannon_entropy(Q) == pytest.approx(H_Q, abs=1e-13)
    assert shannon_entropy((1, 0, 0)) == 0
    assert shannon_entropy([0.25] * 4) == pytest.approx(math.log(4))


def test_kl():
    assert kl_divergence(P, Q) == pytest.approx(KL_PQ, abs=1e-13)
    assert kl_divergence(Q, P) == pytest.approx(KL_QP, abs=1e-13)
    assert kl_divergence(P, P) == 0
    assert kl_divergence((0.5, 0.5, 0), (0.25, 0.25, 0.5)) == pytest.approx(math.log(2))
    with pytest.raises(AbsoluteContinuityViolation):
        kl_divergence((0.5, 0.5), (1, 0))
    smoothed = kl_divergence((0.5, 0.5), (1, 0), eps=1e-6)
    assert math.isfinite(smoothed) and smoothed > 0


def test_divergence_family_values():
    assert j_divergence(P, Q) == pytest.approx(KL_PQ + KL_QP, abs=1e-13)
    assert j_divergence(P, Q) == pytest.approx(0.1074, abs=1e-3)
    assert k_divergence(P, Q) == pytest.approx(0.012, abs=1e-3)
    assert topsoe(P, Q) == pytest.approx(2 * JS_PQ, abs=1e-13)
    assert topsoe(P, Q) == pytest.approx(0.026, abs=1e-3)
    assert jensen_shannon(P, Q) == pytest.approx(JS_PQ, abs=1e-13)
    assert jensen_difference(P, Q) == pytest.approx(JS_PQ, abs=1e-13)
    assert jensen_shannon_distance(P, Q) == pytest.approx(math.sqrt(JS_PQ), abs=1e-12)
    assert cross_entropy(P, Q) == pytest.approx(KL_PQ + H_P, abs=1e-13)


def test_sed_modes():
    assert sed(P, Q) == pytest.approx(SED_ENTROPY, abs=1e-13)
    assert sed(P, Q, mode="paper-literal") == pytest.approx(SED_LITERAL, abs=1e-13)
    assert sed(P, P) == 0
    with pytest.raises(ValueError):
        sed(P, Q, mode="bogus")


def test_js_bounded_on_disjoint_support():
    assert jensen_shannon((1, 0), (0, 1)) == pytest.approx(math.log(2))
    assert topsoe((1, 0), (0, 1)) == pytest.approx(2 * math.log(2))


@given(pdf_pairs(floor=0.0))
def test_js_family_identities(pq):
    p, q = pq
    js = jensen_shannon(p, q)
    assert 0 <= js <= math.log(2) + 1e-12
    assert topsoe(p, q) == pytest.approx(2 * js, abs=1e-12)
    assert jensen_difference(p, q) == pytest.approx(js, abs=1e-12)
    assert k_divergence(p, q) + k_divergence(q, p) == pytest.approx(topsoe(p, q), abs=1e-12)
    assert sed(p, q) == pytest.approx(math.expm1(js), abs=1e-12)


@given(pdf_pairs(floor=0.01))
def test_kl_gibbs_and_j(pq):
    p, q = pq
    assert kl_divergence(p, q) >= -1e-15
    assert j_divergence(p, q) == pytest.approx(kl_divergence(p, q) + kl_divergence(q, p), abs=1e-12)
    assert cross_entropy(p, q) == pytest.approx(kl_divergence(p, q) + shannon_entropy(p), abs=1e-12)
