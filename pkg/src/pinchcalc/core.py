"""Integer helpers and the normal form for torus knot parameters.

A torus knot T(p, q) is stored in the normal form used throughout the
package: ``q`` is odd, and ``p > q`` whenever ``p`` is odd too.  Unknots
land on ``(p0, 1)``.  Negative parameters describe the mirror image.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Tuple, Union


class PinchCalcError(ValueError):
    """Base class for input errors raised by pinchcalc."""


class DomainError(PinchCalcError):
    pass


class NormalizationError(PinchCalcError):
    pass


class UnknotError(PinchCalcError):
    pass


class ConstraintError(PinchCalcError):
    """A seed violates one of the constraints on pinch data.

    ``clause`` names the violated constraint, e.g. ``"(b)"`` or ``"m_k even"``.
    """

    def __init__(self, message: str, clause: str = ""):
        super().__init__(message)
        self.clause = clause


class ConsistencyError(AssertionError):
    """Two routes to the same quantity disagreed. Never expected to fire."""


@dataclass(frozen=True)
class ExtGcdResult:
    g: int
    x: int
    y: int


def ext_gcd(a: int, b: int) -> ExtGcdResult:
    """Return ``g = gcd(a, b) > 0`` together with ``x, y`` such that ``a*x + b*y = g``."""
    a, b = operator.index(a), operator.index(b)
    if a == 0 and b == 0:
        raise DomainError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_x, x = x, old_x - quo * x
        old_y, y = y, old_y - quo * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return ExtGcdResult(old_r, old_x, old_y)


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m``, as a representative in ``1..m-1``."""
    a, m = operator.index(a), operator.index(m)
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise DomainError(f"{a} is not invertible modulo {m}") from None


@dataclass(frozen=True, order=True)
class TorusKnot:
    """A torus knot in normal form.

    ``mirrored`` records that the input parameters described the mirror
    image of T(p, q); the stored pair is always nonnegative.
    """

    p: int
    q: int
    mirrored: bool = False

    def __post_init__(self):
        p, q = self.p, self.q
        if p < 0 or q < 0:
            raise NormalizationError(f"stored parameters must be nonnegative: ({p}, {q})")
        if p % 2 == 0 and q % 2 == 0:
            raise NormalizationError(f"({p}, {q}): parameters are both even")
        if math.gcd(p, q) != 1:
            raise NormalizationError(f"({p}, {q}): parameters are not coprime")
        if q % 2 == 0:
            raise NormalizationError(f"({p}, {q}) is not in normal form: q must be odd")
        if p % 2 == 1 and p < q:
            raise NormalizationError(f"({p}, {q}) is not in normal form: p odd requires p >= q")

    @property
    def is_unknot(self) -> bool:
        return self.q == 1 or self.p <= 1

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.p, self.q)

    def __str__(self) -> str:
        name = f"T({self.p},{self.q})"
        return f"mirror {name}" if self.mirrored else name


KnotLike = Union[TorusKnot, Tuple[int, int]]


def normalize(p: int, q: int) -> TorusKnot:
    """Bring an arbitrary parameter pair into normal form.

    The pair may be given in either order.  If exactly one of the two
    parameters is negative the result is flagged as mirrored; reversing
    both signs only reverses the orientation, which does not change a
    torus knot.
    """
    p, q = operator.index(p), operator.index(q)
    mirrored = (p < 0) != (q < 0) and p != 0 and q != 0
    a, b = abs(p), abs(q)
    if a % 2 == 0 and b % 2 == 0:
        raise NormalizationError(f"({p}, {q}): parameters are both even")
    if math.gcd(a, b) != 1:
        raise NormalizationError(f"({p}, {q}): parameters are not coprime")
    if a % 2 == 1 and b % 2 == 1:
        a, b = max(a, b), min(a, b)
    elif b % 2 == 0:
        a, b = b, a
    return TorusKnot(a, b, mirrored)


def as_knot(knot: KnotLike) -> TorusKnot:
    if isinstance(knot, TorusKnot):
        return knot
    p, q = knot
    return normalize(p, q)


def sign(x: int) -> int:
    return (x > 0) - (x < 0)
