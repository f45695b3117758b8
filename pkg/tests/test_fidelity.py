import math

import pytest
from hypothesis import given

from simmeasures import (
    FIXTURES,
    bhattacharyya_coefficient,
    bhattacharyya_distance,
    hellinger,
    matusita,
    squared_chord,
)
from simmeasures.errors import DisjointSupport

from strategies import pdf_pairs

P, Q = FIXTURES.P_STAR, FIXTURES.Q_STAR

BC = 0.986647488229108
BHATTACHARYYA = 0.0134424581266871
HELLINGER = 0.115553069067385
MATUSITA = 0.163416717448931
CHORD = 0.0267050235417838


def test_values():
    assert bhattacharyya_coefficient(P, Q) == pytest.approx(BC, abs=1e-14)
    assert bhattacharyya_distance(P, Q) == pytest.approx(BHATTACHARYYA, abs=1e-13)
    assert hellinger(P, Q) == pytest.approx(HELLINGER, abs=1e-13)
    assert matusita(P, Q) == pytest.approx(MATUSITA, abs=1e-13)
    sim, dist = squared_chord(P, Q)
    assert dist == pytest.approx(CHORD, abs=1e-13)
    assert sim == pytest.approx(1 - CHORD, abs=1e-13)


def test_edge_cases():
    assert bhattacharyya_distance(P, P) == 0
    assert hellinger(P, P) == 0
    assert bhattacharyya_coefficient((1, 0), (0, 1)) == 0
    assert hellinger((1, 0), (0, 1)) == pytest.approx(1)
    assert matusita((1, 0), (0, 1)) == pytest.approx(math.sqrt(2))
    with pytest.raises(DisjointSupport):
        bhattacharyya_distance((1, 0), (0, 1))


@given(pdf_pairs(floor=0.0))
def test_fidelity_identities(pq):
    p, q = pq
    bc = bhattacharyya_coefficient(p, q)
    h = hellinger(p, q)
    assert 0 <= bc <= 1
    assert h ** 2 == pytest.approx(1 - bc, abs=1e-12)
    assert matusita(p, q) == pytest.approx(math.sqrt(2) * h, abs=1e-12)
    assert squared_chord(p, q).distance == pytest.approx(2 - 2 * bc, abs=1e-12)
    assert squared_chord(p, q).distance == pytest.approx(matusita(p, q) ** 2, abs=1e-12)
