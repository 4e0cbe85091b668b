"""Status of torus knots with respect to the conjecture gamma_4(T(p, q)) = n.

The tag records the strongest statement about gamma_4 that the pinch data
supports; ``detail`` keeps every predicate so nothing is lost to the
priority order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence

from .core import ConsistencyError, ConstraintError, KnotLike, TorusKnot, as_knot, normalize
from .invariants import gap_closed, index_set_even, index_set_odd
from .pinch import PinchSequence, SeedData, pinch_sequence, synthesize

COUNTEREXAMPLE_ROOT = (4, 9)
# gamma_4(T(4, 9)) = 1: it bounds a Moebius band in the 4-ball.
COUNTEREXAMPLE_ROOT_GAMMA4 = 1


class Tag(str, enum.Enum):
    UNKNOT = "Unknot"
    MOEBIUS = "MoebiusBand"
    VERIFIED = "VerifiedEqualsN"
    GAP_N_MINUS_ONE = "GapNMinusOne"
    COUNTEREXAMPLE = "CounterexampleDescended"
    BOUNDS_ONLY = "BoundsOnly"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    knot: TorusKnot
    tag: Tag
    n: int
    gap: int
    detail: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def gamma4_bounds(self) -> tuple:
        lower, upper = self.gap, self.n
        if self.detail.get("descends_from_4_9"):
            upper = self.detail["gamma4_upper_from_4_9"]
        return (lower, upper)


def equals_n_conditions(seq: PinchSequence) -> bool:
    """Conditions under which upsilon - sigma/2 equals n.

    p odd: q1 = eps_1 (mod 4) and every m_k = 2 (mod 4).
    p even: every move is positive.
    """
    if seq.n == 0:
        return False
    if seq.p0 % 2:
        return (seq.q1 - seq.epsilon(1)) % 4 == 0 and all(m % 4 == 2 for m in seq.ms)
    return all(e == 1 for e in seq.epsilons)


def n_minus_one_conditions(seq: PinchSequence) -> bool:
    """Conditions under which upsilon - sigma/2 equals n - 1.

    p odd, q1 - eps_1 = 0 (mod 4): the indices with m_k = 0 (mod 4) are
    exactly {n-1}, or exactly two consecutive indices.
    p odd, q1 - eps_1 = 2 (mod 4): those indices are exactly {1}; for n = 1
    there are no m's and the index set is empty.
    p even: exactly one move is negative.
    """
    n = seq.n
    if n == 0:
        return False
    if seq.p0 % 2 == 0:
        return sum(1 for e in seq.epsilons if e == -1) == 1
    fours = index_set_odd(seq)
    if (seq.q1 - seq.epsilon(1)) % 4 == 0:
        last_only = n >= 2 and fours == [n - 1]
        adjacent_pair = len(fours) == 2 and fours[1] == fours[0] + 1
        return last_only or adjacent_pair
    if n == 1:
        return not fours
    return fours == [1]


def moebius_form(seq: PinchSequence) -> Optional[Dict[str, int]]:
    """For n = 1 return ``{q, m, sign}`` with p = q*m + sign*2."""
    if seq.n != 1:
        return None
    return {"q": seq.q1, "m": seq.p0, "sign": -seq.epsilon(1)}


def classify(knot: KnotLike) -> Classification:
    k = as_knot(knot)
    seq = pinch_sequence(k)
    n = seq.n
    gap = gap_closed(seq)
    if n == 0:
        return Classification(k, Tag.UNKNOT, 0, 0, {"gamma4": 0})

    equals_n = equals_n_conditions(seq)
    minus_one = n_minus_one_conditions(seq)
    if equals_n != (gap == n):
        raise ConsistencyError(f"{k}: equality conditions {equals_n} but gap {gap}, n {n}")
    if minus_one != (gap == n - 1):
        raise ConsistencyError(f"{k}: n-1 conditions {minus_one} but gap {gap}, n {n}")

    detail: Dict[str, Any] = {
        "p_parity": "odd" if seq.p0 % 2 else "even",
        "equals_n_conditions": equals_n,
        "n_minus_one_conditions": minus_one,
        "bounds": [gap, n],
    }
    if seq.p0 % 2:
        detail["I"] = index_set_odd(seq)
        detail["q1_minus_eps1_mod4"] = (seq.q1 - seq.epsilon(1)) % 4
    else:
        detail["J"] = index_set_even(seq)
    descended = seq.visits(COUNTEREXAMPLE_ROOT)
    detail["descends_from_4_9"] = descended
    if descended:
        steps_above = seq.knots.index(COUNTEREXAMPLE_ROOT)
        detail["gamma4_upper_from_4_9"] = COUNTEREXAMPLE_ROOT_GAMMA4 + steps_above
        if seq.knots[0] == COUNTEREXAMPLE_ROOT:
            detail["gamma4_known"] = COUNTEREXAMPLE_ROOT_GAMMA4
    moebius = moebius_form(seq)
    if moebius:
        detail["moebius"] = moebius
        detail["gamma4"] = 1

    if moebius:
        tag = Tag.MOEBIUS
    elif equals_n:
        tag = Tag.VERIFIED
        detail["gamma4"] = n
    elif minus_one:
        tag = Tag.GAP_N_MINUS_ONE
    elif descended:
        tag = Tag.COUNTEREXAMPLE
    else:
        tag = Tag.BOUNDS_ONLY
    return Classification(k, tag, n, gap, detail)


def batson_family(k: int) -> TorusKnot:
    """T(2k + 2, 2k + 1): all moves positive, so gamma_4 = k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return TorusKnot(2 * k + 2, 2 * k + 1)


def example_family(p0: int, q1: int, eps: int, k: int) -> TorusKnot:
    """The m_k = 2 family T(p0 + k(p0(q1 - 1) - 2 eps), 1 + k(q1 - 1)).

    Returned in normal form.  When ``p0 >= 2`` is even with ``eps = 1``, or
    ``p0`` is odd with ``q1 = eps (mod 4)`` and the seed is admissible, the
    result has gamma_4 = k.
    """
    if eps not in (1, -1):
        raise ConstraintError(f"eps must be +1 or -1, got {eps}", "eps")
    if q1 < 3 or q1 % 2 == 0:
        raise ConstraintError(f"q1 must be odd and >= 3, got {q1}", "(c)")
    if p0 < 1:
        raise ConstraintError("the family needs p0 >= 1 (p0 = 0 forces eps = -1)", "(b)")
    if k < 1:
        raise ConstraintError(f"k must be >= 1, got {k}", "k")
    return normalize(p0 + k * (p0 * (q1 - 1) - 2 * eps), 1 + k * (q1 - 1))


def counterexample_family(
    n: int,
    ms: Optional[Sequence[int]] = None,
    eps: Optional[Sequence[int]] = None,
) -> TorusKnot:
    """A knot whose pinch sequence passes through T(4, 9).

    The seed starts p0 = 0, q1 = 5, eps_1 = eps_2 = -1, m_1 = 2; the
    remaining ``m`` and signs default to 2 and -1, which gives T(2n, 4n + 1).
    """
    if n < 2:
        raise ConstraintError(f"n must be >= 2, got {n}", "n")
    ms = tuple(ms) if ms is not None else (2,) * (n - 1)
    eps = tuple(eps) if eps is not None else (-1,) * n
    if len(ms) != n - 1 or len(eps) != n:
        raise ConstraintError("need n - 1 values of m and n signs", "length")
    if ms[0] != 2 or eps[0] != -1 or eps[1] != -1:
        raise ConstraintError("passing through T(4,9) requires m_1 = 2, eps_1 = eps_2 = -1", "root")
    return synthesize(SeedData(n, 0, 5, eps, ms)).top
