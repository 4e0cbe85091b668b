"""Pinch moves on torus knots.

A pinch move takes T(p, q) to T(|p - 2t|, |q - 2h|) where ``p*h - q*t = 1``
and ``1 <= h <= q - 1``.  Iterating from the normal form reaches an unknot
T(p0, 1) after ``n`` moves; the whole chain is determined by the seed
``{n, p0, q1, eps_1..eps_n, m_1..m_{n-1}}`` and vice versa.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from .core import (
    ConsistencyError,
    ConstraintError,
    DomainError,
    KnotLike,
    TorusKnot,
    UnknotError,
    as_knot,
    mod_inverse,
    sign,
)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class PinchStep:
    """One pinch move ``source --epsilon--> target``."""

    source: Pair
    target: Pair
    t: int
    h: int
    epsilon: int


@dataclass(frozen=True)
class SeedData:
    n: int
    p0: int
    q1: Optional[int]
    epsilons: Tuple[int, ...]
    ms: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "epsilons", tuple(self.epsilons))
        object.__setattr__(self, "ms", tuple(self.ms))

    def validate(self) -> None:
        """Raise ConstraintError naming the first violated constraint."""
        n = self.n
        if n < 0:
            raise ConstraintError(f"n must be >= 0, got {n}", "n")
        if self.p0 < 0:
            raise ConstraintError(f"p0 must be >= 0, got {self.p0}", "(b)")
        if len(self.epsilons) != n:
            raise ConstraintError(f"expected {n} signs, got {len(self.epsilons)}", "eps")
        if any(e not in (1, -1) for e in self.epsilons):
            raise ConstraintError(f"signs must be +1 or -1: {self.epsilons}", "eps")
        if len(self.ms) != max(n - 1, 0):
            raise ConstraintError(f"expected {max(n - 1, 0)} values of m, got {len(self.ms)}", "m")
        if n == 0:
            if self.q1 is not None:
                raise ConstraintError("an unknot seed carries no q1", "(c)")
            return
        if self.q1 is None or self.q1 < 3 or self.q1 % 2 == 0:
            raise ConstraintError(f"q1 must be odd and >= 3, got {self.q1}", "(c)")
        if self.p0 in (0, 1) and self.epsilons[0] != -1:
            raise ConstraintError("p0 in {0, 1} forces eps_1 = -1", "(b)")
        for k, m in enumerate(self.ms, start=1):
            if m < 2 or m % 2:
                raise ConstraintError(f"m_{k} = {m} must be an even integer >= 2", "m_k even")


@dataclass(frozen=True)
class PinchSequence:
    """Full record of the reduction of T(p_n, q_n) to T(p0, 1).

    ``knots`` and ``steps`` are in reduction order (index n first), while
    ``epsilons`` and ``ms`` are in ascending index order.  Use the
    accessors ``p(k)``, ``q(k)``, ``epsilon(k)`` and ``m(k)`` rather than
    indexing the tuples directly.
    """

    n: int
    knots: Tuple[Pair, ...]
    steps: Tuple[PinchStep, ...]
    epsilons: Tuple[int, ...]
    ms: Tuple[int, ...]
    p0: int
    q1: Optional[int]

    def knot(self, k: int) -> Pair:
        if not 0 <= k <= self.n:
            raise IndexError(f"knot index {k} outside 0..{self.n}")
        return self.knots[self.n - k]

    def p(self, k: int) -> int:
        return self.knot(k)[0]

    def q(self, k: int) -> int:
        return self.knot(k)[1]

    def epsilon(self, k: int) -> int:
        if not 1 <= k <= self.n:
            raise IndexError(f"sign index {k} outside 1..{self.n}")
        return self.epsilons[k - 1]

    def m(self, k: int) -> int:
        if not 1 <= k <= self.n - 1:
            raise IndexError(f"m index {k} outside 1..{self.n - 1}")
        return self.ms[k - 1]

    @property
    def top(self) -> TorusKnot:
        p, q = self.knots[0]
        return TorusKnot(p, q)

    def seed(self) -> SeedData:
        return SeedData(self.n, self.p0, self.q1, self.epsilons, self.ms)

    def visits(self, pair: Pair) -> bool:
        return tuple(pair) in self.knots


def _raw_pair(knot: Union[KnotLike, Pair]) -> Pair:
    if isinstance(knot, TorusKnot):
        return knot.pair
    p, q = knot
    return operator.index(p), operator.index(q)


def pinch_params(knot: Union[KnotLike, Pair]) -> Tuple[int, int]:
    """Return ``(t, h)`` with ``p*h - q*t = 1`` and ``1 <= h <= q - 1``.

    The pair is used as given (it need not be in normal form), but both
    entries must exceed 1.
    """
    p, q = _raw_pair(knot)
    if p <= 1 or q <= 1:
        raise UnknotError(f"T({p},{q}) is an unknot; no pinch move is defined")
    h = mod_inverse(p, q)
    t, rem = divmod(p * h - 1, q)
    assert rem == 0
    return t, h


def pinch_move(knot: Union[KnotLike, Pair]) -> PinchStep:
    """Apply one pinch move.

    The sign is that of ``p - 2t``.  The only way that difference vanishes
    (in normal form) is T(2, l) -> T(0, 1); there the sign is taken to be
    -1, which agrees with the sign of ``q - 2h``.
    """
    p, q = _raw_pair(knot)
    t, h = pinch_params((p, q))
    dp, dq = p - 2 * t, q - 2 * h
    eps = sign(dp) or sign(dq)
    return PinchStep((p, q), (abs(dp), abs(dq)), t, h, eps)


def derive_ms(knots_ascending: Sequence[Pair], epsilons: Sequence[int]) -> Tuple[int, ...]:
    """Recover ``m_k = (p_{k+1} + eps_k eps_{k+1} p_{k-1}) / p_k`` for ``k = 1..n-1``.

    ``knots_ascending[k]`` is ``(p_k, q_k)``.  The same quotient computed
    from the q-coordinates is checked against the p-coordinate value.
    """
    n = len(epsilons)
    ms = []
    for k in range(1, n):
        ee = epsilons[k - 1] * epsilons[k]
        p_prev, q_prev = knots_ascending[k - 1]
        p_k, q_k = knots_ascending[k]
        p_next, q_next = knots_ascending[k + 1]
        m, rem = divmod(p_next + ee * p_prev, p_k)
        m_q, rem_q = divmod(q_next + ee * q_prev, q_k)
        if rem or rem_q or m != m_q:
            raise ConsistencyError(f"m_{k} is not a common integer quotient")
        if m < 2 or m % 2:
            raise ConsistencyError(f"m_{k} = {m} is not an even integer >= 2")
        ms.append(m)
    return tuple(ms)


def pinch_sequence(knot: KnotLike) -> PinchSequence:
    """Pinch the normal form of ``knot`` down to an unknot T(p0, 1).

    A mirrored input is reduced as its positive counterpart.
    """
    k = as_knot(knot)
    pair = (k.p, k.q)
    knots = [pair]
    steps = []
    while pair[1] != 1:
        step = pinch_move(pair)
        steps.append(step)
        pair = step.target
        knots.append(pair)
    n = len(steps)
    epsilons = tuple(s.epsilon for s in reversed(steps))
    ascending = knots[::-1]
    ms = derive_ms(ascending, epsilons)
    q1 = ascending[1][1] if n >= 1 else None
    return PinchSequence(n, tuple(knots), tuple(steps), epsilons, ms, pair[0], q1)


def seed_of(knot: KnotLike) -> SeedData:
    return pinch_sequence(knot).seed()


def _chain(seed: SeedData) -> list:
    """Pairs (p_k, q_k) for k = 0..n built from the seed recursions."""
    chain = [(seed.p0, 1)]
    if seed.n >= 1:
        chain.append((seed.p0 * seed.q1 - 2 * seed.epsilons[0], seed.q1))
    for k in range(2, seed.n + 1):
        m = seed.ms[k - 2]
        ee = seed.epsilons[k - 2] * seed.epsilons[k - 1]
        (pa, qa), (pb, qb) = chain[k - 2], chain[k - 1]
        chain.append((m * pb - ee * pa, m * qb - ee * qa))
    return chain


def synthesize(seed: SeedData) -> PinchSequence:
    """Build the pinch sequence determined by a seed.

    Each step records ``h_k = (q_k - eps_k q_{k-1}) / 2`` and
    ``t_k = (p_k - eps_k p_{k-1}) / 2``, the move parameters implied by the
    recursion, so the result compares equal to ``pinch_sequence`` of the
    top knot exactly when the two routes agree.
    """
    seed.validate()
    chain = _chain(seed)
    steps = []
    for k in range(seed.n, 0, -1):
        eps = seed.epsilons[k - 1]
        (p, q), (pb, qb) = chain[k], chain[k - 1]
        t2, h2 = p - eps * pb, q - eps * qb
        if t2 % 2 or h2 % 2:
            raise ConsistencyError(f"non-integral move parameters at k={k}")
        steps.append(PinchStep((p, q), (pb, qb), t2 // 2, h2 // 2, eps))
    return PinchSequence(
        seed.n,
        tuple(reversed(chain)),
        tuple(steps),
        seed.epsilons,
        seed.ms,
        seed.p0,
        seed.q1,
    )


def synthesize_knot(seed: SeedData) -> TorusKnot:
    return synthesize(seed).top


@dataclass(frozen=True)
class RhoTable:
    """The integers rho_{k,n} for ``n <= max_n`` and ``1 <= k <= n + 1``."""

    max_n: int
    values: Dict[Tuple[int, int], int] = field(repr=False)

    def rho(self, k: int, n: int) -> int:
        try:
            return self.values[(k, n)]
        except KeyError:
            raise IndexError(f"rho_({k},{n}) is outside the table") from None

    def r(self, n: int) -> int:
        return self.rho(1, n)

    def s(self, n: int) -> int:
        return self.rho(2, n)

    def indices(self) -> Iterable[Tuple[int, int]]:
        return sorted(self.values)


def rho_table(source: Union[SeedData, PinchSequence], max_n: Optional[int] = None) -> RhoTable:
    """Tabulate rho_{k,n} from a seed (or a sequence) up to column ``max_n``.

    Entries whose defining recursion would reach past the seed's last sign
    (rho_{n+1,n} at ``n = seed.n``) are fixed by the vanishing of the bracket
    they multiply, which is checked.
    """
    seq = source if isinstance(source, PinchSequence) else synthesize(source)
    seed_n = seq.n
    if max_n is None:
        max_n = seed_n
    if not 0 <= max_n <= seed_n:
        raise DomainError(f"max_n must lie in 0..{seed_n}, got {max_n}")
    if seed_n == 0:
        return RhoTable(0, {(1, 0): 0})

    eps = (None,) + seq.epsilons  # eps[k] for k = 1..n
    p0, q1 = seq.p0, seq.q1
    vals: Dict[Tuple[int, int], int] = {}

    def signed(k_lo: int, k_hi: int, inner: int, where: str) -> int:
        if k_hi > seed_n:
            if inner != 0:
                raise ConsistencyError(f"{where}: bracket {inner} should vanish")
            return 0
        return eps[k_lo] * eps[k_hi] * inner

    for n in range(0, max_n + 1):
        p_n, q_n = seq.knot(n)
        r2 = eps[1] * (p0 * q_n - p_n)
        if r2 % 2:
            raise ConsistencyError(f"r_{n} is not an integer")
        vals[(1, n)] = r2 // 2
        if n >= 1:
            vals[(2, n)] = signed(1, 2, q1 * vals[(1, n)] - q_n, f"rho_(2,{n})")
        for k in range(3, n + 2):
            inner = seq.m(k - 2) * vals[(k - 1, n)] - vals[(k - 2, n)]
            vals[(k, n)] = signed(k - 1, k, inner, f"rho_({k},{n})")
    return RhoTable(max_n, vals)
