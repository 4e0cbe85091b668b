import pytest
from hypothesis import given, strategies as st

from pinchcalc.core import ConstraintError, DomainError, TorusKnot, UnknotError
from pinchcalc.pinch import (
    SeedData,
    pinch_move,
    pinch_params,
    pinch_sequence,
    rho_table,
    seed_of,
    synthesize,
)
from pinchcalc.selftest import check_rho, check_steps


@st.composite
def seeds(draw, max_n=8, ms=(2, 4, 6, 8, 10)):
    n = draw(st.integers(1, max_n))
    p0 = draw(st.integers(0, 15))
    q1 = draw(st.sampled_from(range(3, 30, 2)))
    eps = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    if p0 in (0, 1):
        eps[0] = -1
    m = draw(st.lists(st.sampled_from(ms), min_size=n - 1, max_size=n - 1))
    return SeedData(n, p0, q1, eps, m)


def test_pinch_params_and_move():
    assert pinch_params((4, 9)) == (3, 7)  # 4*7 - 9*3 = 1
    step = pinch_move((4, 9))
    assert step.target == (2, 5) and step.epsilon == -1
    # the move on the raw pair T(7,4) gives T(3,2)
    assert pinch_move((7, 4)).target == (3, 2)


def test_degenerate_sign_is_negative():
    step = pinch_move((2, 7))
    assert step.target == (0, 1)
    assert step.epsilon == -1


def test_unknot_has_no_move():
    with pytest.raises(UnknotError):
        pinch_move((5, 1))


def test_sequence_t49():
    seq = pinch_sequence(TorusKnot(4, 9))
    assert seq.knots == ((4, 9), (2, 5), (0, 1))
    assert (seq.n, seq.p0, seq.q1, seq.epsilons, seq.ms) == (2, 0, 5, (-1, -1), (2,))
    assert seq.knot(0) == (0, 1) and seq.knot(2) == (4, 9)
    assert seq.p(1) == 2 and seq.q(1) == 5 and seq.m(1) == 2
    assert seq.visits((2, 5))


def test_sequence_t87():
    seq = pinch_sequence(TorusKnot(8, 7))
    assert seq.knots == ((8, 7), (6, 5), (4, 3), (2, 1))
    assert seq.epsilons == (1, 1, 1) and seq.ms == (2, 2)


def test_sequence_of_unknot():
    seq = pinch_sequence(TorusKnot(2, 1))
    assert seq.n == 0 and seq.steps == () and seq.q1 is None


def test_mirror_reduces_as_positive():
    assert pinch_sequence((-9, 4)) == pinch_sequence((4, 9))


def test_index_errors():
    seq = pinch_sequence(TorusKnot(4, 9))
    for call in (lambda: seq.knot(3), lambda: seq.epsilon(0), lambda: seq.m(2)):
        with pytest.raises(IndexError):
            call()


def test_synthesize_examples():
    assert synthesize(SeedData(2, 0, 5, (-1, -1), (2,))).top == TorusKnot(4, 9)
    assert synthesize(SeedData(2, 2, 3, (1, 1), (2,))).top == TorusKnot(6, 5)
    assert synthesize(SeedData(0, 3, None, ())).top == TorusKnot(3, 1)


@pytest.mark.parametrize(
    "seed, clause",
    [
        (SeedData(1, 1, 3, (1,)), "(b)"),
        (SeedData(1, 0, 3, (1,)), "(b)"),
        (SeedData(1, 2, 4, (1,)), "(c)"),
        (SeedData(1, 2, 1, (1,)), "(c)"),
        (SeedData(2, 2, 3, (1, 1), (3,)), "m_k even"),
        (SeedData(2, 2, 3, (1, 1), (0,)), "m_k even"),
        (SeedData(2, 2, 3, (1,), (2,)), "eps"),
        (SeedData(1, 2, 3, (2,)), "eps"),
        (SeedData(2, 2, 3, (1, 1)), "m"),
        (SeedData(1, -1, 3, (1,)), "(b)"),
    ],
)
def test_seed_constraints(seed, clause):
    with pytest.raises(ConstraintError) as info:
        synthesize(seed)
    assert info.value.clause == clause


@given(seeds())
def test_round_trip_from_seed(seed):
    seq = synthesize(seed)
    assert pinch_sequence(seq.top) == seq
    assert seed_of(seq.top) == seed


@given(st.integers(2, 400), st.integers(1, 200))
def test_round_trip_from_knot(p, q):
    import math
    if math.gcd(p, 2 * q + 1) != 1:
        return
    from pinchcalc.core import normalize
    seq = pinch_sequence(normalize(p, 2 * q + 1))
    assert synthesize(seq.seed()) == seq
    assert check_steps(seq) == []


def test_rho_t87():
    table = rho_table(pinch_sequence(TorusKnot(8, 7)))
    assert [table.r(n) for n in range(4)] == [0, 1, 2, 3]
    assert table.s(2) == 1 and table.s(3) == 2
    assert table.rho(3, 2) == 0 and table.rho(3, 3) == 1


def test_rho_t49():
    assert rho_table(pinch_sequence(TorusKnot(4, 9))).r(2) == 2


def test_rho_table_ranges():
    seed = SeedData(3, 2, 3, (1, 1, 1), (2, 2))
    small = rho_table(seed, max_n=1)
    assert small.max_n == 1
    with pytest.raises(IndexError):
        small.rho(1, 2)
    with pytest.raises(DomainError):
        rho_table(seed, max_n=4)


@given(seeds(ms=(2, 4, 6, 8)))
def test_rho_properties(seed):
    assert check_rho(synthesize(seed)) == []
