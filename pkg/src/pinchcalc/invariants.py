"""Signature, upsilon and the OSS bound for torus knots.

Every quantity has two routes: a recursion on the parameter pair
(Gordon-Litherland-Murasugi for the signature, Feller-Krcatovich for
upsilon) and a closed formula in terms of the pinch data.  ``report``
cross-checks them.

Sign convention: positive torus knots have negative signature, e.g.
sigma(T(2, 3)) = -2, and upsilon(T(2, 3)) = -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from .core import ConsistencyError, KnotLike, TorusKnot, as_knot
from .pinch import PinchSequence, pinch_sequence, rho_table


# -- recursions ---------------------------------------------------------------

@lru_cache(maxsize=None)
def signature_of_pair(a: int, b: int) -> int:
    """GLM recursion for the signature of the positive torus knot T(a, b).

    Runs of the ``2a < b`` case are collapsed into one step, so the depth
    is logarithmic in the parameters.
    """
    if a > b:
        a, b = b, a
    if a <= 1:
        return 0
    if a == 2:
        return -(b - 1)
    if 2 * a < b:
        runs, rest = divmod(b, 2 * a)
        drop = a * a - 1 if a % 2 else a * a
        return signature_of_pair(rest, a) - runs * drop
    drop = a * a - 1 if a % 2 else a * a - 2
    return -signature_of_pair(2 * a - b, a) - drop


@lru_cache(maxsize=None)
def _upsilon_quarters(a: int, b: int) -> int:
    if a > b:
        a, b = b, a
    if a <= 1:
        return 0
    runs, rest = divmod(b, a)
    if rest == 0:
        raise ValueError(f"T({a},{b}) is not a knot")
    step = a * a if a % 2 == 0 else a * a - 1
    return _upsilon_quarters(rest, a) - runs * step


def upsilon_of_pair(a: int, b: int) -> int:
    """Upsilon of the positive torus knot T(a, b) by the subtract-the-smaller recursion."""
    quarters = _upsilon_quarters(abs(a), abs(b))
    if quarters % 4:
        raise ConsistencyError(f"upsilon(T({a},{b})) is not an integer")
    return quarters // 4


def _mirror(knot: TorusKnot, value: int) -> int:
    return -value if knot.mirrored else value


def signature_recursive(knot: KnotLike) -> int:
    k = as_knot(knot)
    return _mirror(k, signature_of_pair(k.p, k.q))


def upsilon_recursive(knot: KnotLike) -> int:
    k = as_knot(knot)
    return _mirror(k, upsilon_of_pair(k.p, k.q))


# -- closed formulas ----------------------------------------------------------

def index_set_odd(seq: PinchSequence) -> List[int]:
    """Indices k in 1..n-1 with m_k divisible by 4."""
    return [k for k, m in enumerate(seq.ms, start=1) if m % 4 == 0]


def index_set_even(seq: PinchSequence) -> List[int]:
    """Indices k in 2..n-1 where eps_k and eps_{k+1} differ (empty for n <= 2)."""
    return [k for k in range(2, seq.n) if seq.epsilon(k) * seq.epsilon(k + 1) == -1]


def alternating_sum(indices: List[int], n: int) -> int:
    return sum((n - k) if i % 2 == 0 else -(n - k) for i, k in enumerate(indices))


def _quarter_base(seq: PinchSequence) -> Tuple[int, int]:
    p, q = seq.knots[0]
    return seq.p0 - p * q, p % 2


def signature_closed(seq: PinchSequence) -> int:
    n = seq.n
    if n == 0:
        return 0
    base2, p_odd = _quarter_base(seq)
    if base2 % 2:
        raise ConsistencyError("p0 - pq is odd")
    half = base2 // 2
    eps1 = seq.epsilon(1)
    if p_odd:
        bracket = n - 2 * alternating_sum(index_set_odd(seq), n)
        if (seq.q1 - eps1) % 4 == 0:
            return half - bracket
        return half + bracket
    if n == 1:
        return half - eps1
    bracket = n - 2 * alternating_sum(index_set_even(seq), n)
    if eps1 * seq.epsilon(2) == 1:
        return half - eps1 * bracket
    return half - 2 * eps1 + eps1 * bracket


def upsilon_closed(seq: PinchSequence) -> int:
    """``n/2 + (p0 - pq)/4``, held in quarters until the final division."""
    base, _ = _quarter_base(seq)
    quarters = 2 * seq.n + base
    if quarters % 4:
        raise ConsistencyError(f"upsilon closed form is not integral ({quarters}/4)")
    if base % 2 or (seq.n - base // 2) % 2:
        raise ConsistencyError("parity relation n = (p0 - pq)/2 mod 2 fails")
    return quarters // 4


def gap_closed(seq: PinchSequence) -> int:
    """upsilon - sigma/2 from the pinch data alone."""
    n = seq.n
    if n == 0:
        return 0
    _, p_odd = _quarter_base(seq)
    eps1 = seq.epsilon(1)
    if p_odd:
        alt = alternating_sum(index_set_odd(seq), n)
        return n - alt if (seq.q1 - eps1) % 4 == 0 else alt
    if n == 1:
        return 1 if eps1 == 1 else 0
    alt = alternating_sum(index_set_even(seq), n)
    eps2 = seq.epsilon(2)
    if eps1 == 1:
        return n - alt if eps2 == 1 else 1 + alt
    return (n - 1) - alt if eps2 == 1 else alt


# -- report -------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    """Invariants of one torus knot.

    ``sigma`` and ``upsilon`` belong to the knot as given (negated for a
    mirror); ``gap`` and the bounds are those of the positive knot, which
    are mirror independent in absolute value.
    """

    knot: TorusKnot
    n: int
    sigma: int
    upsilon: int
    gap: int
    oss_lower: int
    gamma4_conjectured: int
    gamma4_lower: int
    gamma4_upper: int

    @property
    def positive_sigma(self) -> int:
        return -self.sigma if self.knot.mirrored else self.sigma

    @property
    def positive_upsilon(self) -> int:
        return -self.upsilon if self.knot.mirrored else self.upsilon


def report(knot: KnotLike, check: bool = True) -> InvariantReport:
    """Assemble the invariants of ``knot``.

    With ``check`` (the default) sigma, upsilon and the gap are each
    computed by the closed formulas and by the recursions and must agree;
    without it only the closed formulas run.
    """
    k = as_knot(knot)
    seq = pinch_sequence(k)
    sigma = signature_closed(seq)
    ups = upsilon_closed(seq)
    gap = gap_closed(seq)
    if check:
        sig_r = signature_of_pair(k.p, k.q)
        ups_r = upsilon_of_pair(k.p, k.q)
        if sig_r != sigma:
            raise ConsistencyError(f"{k}: sigma closed {sigma} != recursive {sig_r}")
        if ups_r != ups:
            raise ConsistencyError(f"{k}: upsilon closed {ups} != recursive {ups_r}")
        if 2 * ups - sigma != 2 * gap:
            raise ConsistencyError(f"{k}: gap {gap} != upsilon - sigma/2")
    if gap < 0:
        raise ConsistencyError(f"{k}: negative gap {gap}")
    return InvariantReport(
        knot=k,
        n=seq.n,
        sigma=_mirror(k, sigma),
        upsilon=_mirror(k, ups),
        gap=gap,
        oss_lower=gap,
        gamma4_conjectured=seq.n,
        gamma4_lower=gap,
        gamma4_upper=seq.n,
    )


# -- stage identities ---------------------------------------------------------

@dataclass(frozen=True)
class StageCheck:
    k: int
    pair: Tuple[int, int]
    recursive: int
    closed_quarters: int

    @property
    def ok(self) -> bool:
        return 4 * self.recursive == self.closed_quarters


@dataclass(frozen=True)
class StageReport:
    checks: Tuple[StageCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> Tuple[StageCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def verify_stage_identities(seq: PinchSequence) -> StageReport:
    """Compare recursive upsilon of the rho-combination knots with their closed values.

    For each k in 1..n, with a = rho_{k,n} and b = rho_{k+1,n}:

        upsilon(T(a+b, a-b)) = (n-k)/2 + (b^2 - a^2 + 1)/4
        upsilon(T(a-b, 2b))  = (n-k + b^2 - a*b)/2
        upsilon(T(a+b, 2b))  = (n-k - b^2 - a*b)/2
    """
    n = seq.n
    checks = []
    if n == 0:
        return StageReport(())
    table = rho_table(seq)
    for k in range(1, n + 1):
        a, b = table.rho(k, n), table.rho(k + 1, n)
        cases = (
            ((a + b, a - b), 2 * (n - k) + b * b - a * a + 1),
            ((a - b, 2 * b), 2 * (n - k + b * b - a * b)),
            ((a + b, 2 * b), 2 * (n - k - b * b - a * b)),
        )
        for pair, quarters in cases:
            checks.append(StageCheck(k, pair, upsilon_of_pair(*pair), quarters))
    return StageReport(tuple(checks))
