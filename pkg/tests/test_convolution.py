import math
from collections import Counter
from fractions import Fraction as F
from itertools import product

import pytest

from ordmult.convolution import check_mattner_roos, mattner_roos_grid, max_prob, pmf


def enumerated_pmf(q, L):
    counts = Counter(sum(c) for c in product(range(q + 1), repeat=L))
    total = (q + 1) ** L
    return [F(counts[k], total) for k in range(q * L + 1)]


def test_pmf_examples():
    assert pmf(4, 2)[4] == F(5, 25)
    assert pmf(1, 1).probs == (F(1, 2), F(1, 2))
    assert list(pmf(2, 2).probs) == enumerated_pmf(2, 2) == [
        F(1, 9), F(2, 9), F(3, 9), F(2, 9), F(1, 9)
    ]
    with pytest.raises(ValueError):
        pmf(0, 3)


@pytest.mark.parametrize("q,L", [(2, 5), (3, 4), (5, 3), (6, 2)])
def test_pmf_matches_enumeration(q, L):
    assert list(pmf(q, L).probs) == enumerated_pmf(q, L)


def test_pmf_invariants_on_grid():
    for q in range(1, 9):
        for L in range(0, 41):
            p = pmf(q, L).probs
            assert sum(p) == 1
            assert p == p[::-1]


def test_max_prob_examples():
    assert max_prob(4, 2).value == F(1, 5)
    m = max_prob(5, 3)
    assert m.value == F(27, 216) == F(1, 8)
    assert m.arg == 8 and m.mode_indices == (7, 8)
    assert max_prob(1, 1).value == F(1, 2)
    assert max_prob(3, 0).value == 1


def test_formula_agrees_with_scan_on_grid():
    for q in range(1, 9):
        for L in range(0, 41):
            m = max_prob(q, L)
            assert m.agrees
            assert 0 < m.value <= 1


def test_maximal_probability_never_increases():
    for q in range(1, 9):
        values = [max_prob(q, L).value for L in range(1, 41)]
        assert all(b <= a for a, b in zip(values, values[1:]))


def test_mattner_roos_examples():
    r = check_mattner_roos(5, 3)
    assert r.holds and r.value == F(1, 8)
    assert abs(float(r.bound) - math.sqrt(6 / (math.pi * 5 * 7 * 3))) < 1e-15
    assert abs(float(r.bound) - 0.134867106) < 1e-9

    r = check_mattner_roos(1, 1)
    assert r.holds
    assert abs(float(r.bound) - math.sqrt(6 / (3 * math.pi))) < 1e-15

    # c_{4,2} = 1/5 exceeds sqrt(6 / (48 pi)) = 0.19947...
    r = check_mattner_roos(4, 2)
    assert not r.holds
    assert math.sqrt(6 / (math.pi * 4 * 6 * 2)) < 0.2
    assert r.slack < 0


def test_mattner_roos_failures_are_exactly_L2_q_ge_4():
    failures = [(r.q, r.L) for r in mattner_roos_grid(range(1, 9), range(1, 41)) if not r.holds]
    assert failures == [(q, 2) for q in range(4, 9)]


def test_mattner_roos_rejects_L0():
    with pytest.raises(ValueError):
        check_mattner_roos(2, 0)
