import math

import pytest
from hypothesis import given, strategies as st

from pinchcalc.classify import (
    Tag,
    batson_family,
    classify,
    counterexample_family,
    example_family,
    moebius_form,
)
from pinchcalc.core import ConstraintError, TorusKnot, normalize
from pinchcalc.pinch import pinch_sequence


def test_moebius_t53():
    c = classify(TorusKnot(5, 3))
    assert c.tag is Tag.MOEBIUS and c.n == 1
    # 5 = 3*1 + 2
    assert c.detail["moebius"] == {"q": 3, "m": 1, "sign": 1}
    assert c.detail["gamma4"] == 1


def test_verified_t65():
    c = classify(TorusKnot(6, 5))
    assert c.tag is Tag.VERIFIED and c.n == 2 and c.gamma4_bounds == (2, 2)


def test_counterexample_t49():
    c = classify(TorusKnot(4, 9))
    assert c.tag is Tag.COUNTEREXAMPLE
    assert (c.n, c.gap) == (2, 0)
    assert c.detail["bounds"] == [0, 2]
    assert c.detail["gamma4_known"] == 1
    assert c.gamma4_bounds == (0, 1)


def test_descendant_of_t49():
    c = classify(counterexample_family(3))
    assert c.knot == TorusKnot(6, 13)
    assert c.detail["descends_from_4_9"] and c.detail["gamma4_upper_from_4_9"] == 2
    assert "gamma4_known" not in c.detail


def test_unknot():
    c = classify(TorusKnot(3, 1))
    assert c.tag is Tag.UNKNOT and c.n == 0


def test_gap_n_minus_one_example():
    # n = 1 with p odd and q1 - eps1 = 2 (mod 4): gap 0 = n - 1.
    c = classify(TorusKnot(7, 3))
    assert c.tag is Tag.MOEBIUS
    assert c.detail["n_minus_one_conditions"] and c.gap == 0


def test_tags_found_in_scan():
    seen = set()
    for p in range(2, 40):
        for q in range(3, 40, 2):
            if math.gcd(p, q) == 1 and not (p % 2 and p < q):
                seen.add(classify(TorusKnot(p, q)).tag)
    assert seen == set(Tag) - {Tag.UNKNOT}


@pytest.mark.parametrize("k, pair", [(1, (4, 3)), (2, (6, 5)), (3, (8, 7))])
def test_batson(k, pair):
    knot = batson_family(k)
    assert knot.pair == pair
    c = classify(knot)
    assert c.n == c.gap == k
    assert c.detail["equals_n_conditions"]


def test_batson_rejects():
    with pytest.raises(ValueError):
        batson_family(0)


def test_example_family():
    assert example_family(2, 3, 1, 2) == TorusKnot(6, 5)
    assert example_family(1, 5, 1, 1) == TorusKnot(5, 3)
    with pytest.raises(ConstraintError) as info:
        example_family(0, 3, 1, 2)
    assert info.value.clause == "(b)"
    with pytest.raises(ConstraintError):
        example_family(2, 4, 1, 1)


@given(st.integers(2, 12), st.sampled_from(range(3, 25, 2)), st.integers(1, 6))
def test_example_family_gamma4(p0, q1, k):
    eps = 1 if p0 % 2 == 0 else (1 if q1 % 4 == 1 else -1)
    c = classify(example_family(p0, q1, eps, k))
    assert c.n == c.gap == k


def test_counterexample_family():
    assert counterexample_family(2) == TorusKnot(4, 9)
    assert counterexample_family(3, [2, 2], [-1, -1, -1]) == TorusKnot(6, 13)
    assert all(counterexample_family(n) == TorusKnot(2 * n, 4 * n + 1) for n in range(2, 26))
    k = counterexample_family(4, [2, 6, 4], [-1, -1, 1, -1])
    assert pinch_sequence(k).visits((4, 9))
    for bad in ((1,), ):
        with pytest.raises(ConstraintError):
            counterexample_family(*bad)
    with pytest.raises(ConstraintError):
        counterexample_family(3, [4, 2])
    with pytest.raises(ConstraintError):
        counterexample_family(3, [2, 2], [-1, 1, -1])


@pytest.mark.parametrize("q", range(3, 20, 2))
@pytest.mark.parametrize("m", range(0, 11))
def test_moebius_family_iff_n_is_one(q, m):
    for p in (q * m + 2, q * m - 2):
        if p <= 1 or math.gcd(p, q) != 1:
            continue
        seq = pinch_sequence(normalize(p, q))
        assert seq.n == 1
        form = moebius_form(seq)
        assert form["q"] * form["m"] + 2 * form["sign"] == seq.p(1)


@given(st.integers(2, 300), st.integers(1, 150))
def test_n_one_is_moebius(p, half):
    q = 2 * half + 1
    if math.gcd(p, q) != 1:
        return
    k = normalize(p, q)
    seq = pinch_sequence(k)
    if seq.n == 1:
        assert classify(k).tag is Tag.MOEBIUS
        f = moebius_form(seq)
        assert k.p == f["q"] * f["m"] + 2 * f["sign"] and k.q == f["q"]
