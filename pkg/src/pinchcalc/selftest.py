"""Cross-checks shared by ``pinchcalc selftest`` and the test suite.

Each ``check_*`` function returns a list of human readable problems; an
empty list means the check passed.  They look up the recursions through
their modules at call time, so a test can monkeypatch a broken recursion
and watch the suite fail.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .classify import equals_n_conditions, n_minus_one_conditions
from . import invariants as _inv
from . import oracle as _oracle
from .core import ConsistencyError, TorusKnot
from .pinch import PinchSequence, pinch_sequence, rho_table, synthesize

MAX_LISTED = 10


def scan_knots(pmax: int, qmax: int) -> List[TorusKnot]:
    """Nontrivial knots with normal form 2 <= p <= pmax, 3 <= q <= qmax, sorted by (p, q)."""
    knots = []
    for p in range(2, pmax + 1):
        for q in range(3, qmax + 1, 2):
            if math.gcd(p, q) == 1 and not (p % 2 and p < q):
                knots.append(TorusKnot(p, q))
    return knots


def check_invariants(seq: PinchSequence) -> List[str]:
    """Closed against recursive sigma and upsilon, the gap identity, 0 <= gap <= n."""
    p, q = seq.knots[0]
    out = []
    sig_c, sig_r = _inv.signature_closed(seq), _inv.signature_of_pair(p, q)
    ups_c, ups_r = _inv.upsilon_closed(seq), _inv.upsilon_of_pair(p, q)
    gap = _inv.gap_closed(seq)
    if sig_c != sig_r:
        out.append(f"sigma closed {sig_c} != recursive {sig_r}")
    if ups_c != ups_r:
        out.append(f"upsilon closed {ups_c} != recursive {ups_r}")
    if sig_r % 2:
        out.append(f"odd signature {sig_r}")
    if 2 * gap != 2 * ups_r - sig_r:
        out.append(f"gap {gap} != upsilon - sigma/2 = {ups_r - sig_r / 2}")
    if not 0 <= gap <= seq.n:
        out.append(f"gap {gap} outside 0..{seq.n}")
    return out


def check_conditions(seq: PinchSequence) -> List[str]:
    """The combinatorial conditions for gap = n and gap = n - 1 match the gap."""
    if seq.n == 0:
        return []
    gap = _inv.gap_closed(seq)
    out = []
    if equals_n_conditions(seq) != (gap == seq.n):
        out.append(f"equals-n conditions disagree with gap {gap}, n {seq.n}")
    if n_minus_one_conditions(seq) != (gap == seq.n - 1):
        out.append(f"n-1 conditions disagree with gap {gap}, n {seq.n}")
    return out


def check_steps(seq: PinchSequence) -> List[str]:
    """Per move: ph - qt = 1, rq - sp = 2 eps, (p-2t)(q-2h) >= 0 (zero iff p = 2), size order, parity."""
    out = []
    for st in seq.steps:
        (p, q), (r, s) = st.source, st.target
        tag = f"T({p},{q})->T({r},{s})"
        if p * st.h - q * st.t != 1 or not 1 <= st.h <= q - 1:
            out.append(f"{tag}: bad (t, h) = ({st.t}, {st.h})")
        if r * q - s * p != 2 * st.epsilon:
            out.append(f"{tag}: rq - sp = {r * q - s * p}, expected {2 * st.epsilon}")
        prod = (p - 2 * st.t) * (q - 2 * st.h)
        if prod < 0 or (prod == 0) != (p == 2):
            out.append(f"{tag}: (p-2t)(q-2h) = {prod}")
        big, small = (r, s) if p > q else (s, r)
        if big < small or (st.epsilon == 1 and big == small):
            out.append(f"{tag}: size order violated for eps {st.epsilon}")
        if (r - p) % 2 or s % 2 == 0:
            out.append(f"{tag}: parity not preserved")
    return out


def check_rho(seq: PinchSequence) -> List[str]:
    """Boundary values, strict monotonicity, 2 r_n < q_n and the parity rule of the rho table."""
    n = seq.n
    if n == 0:
        return []
    table = rho_table(seq)
    out = []
    for k in range(1, n + 1):
        if table.rho(k, k - 1) != 0 or table.rho(k, k) != 1:
            out.append(f"rho boundary values fail at k={k}")
        if k <= n - 1 and table.rho(k, k + 1) != seq.m(k):
            out.append(f"rho_({k},{k + 1}) != m_{k}")
    for k, j in table.indices():
        v = table.rho(k, j)
        # rho_{k,k-1} = 0 and rho_{k,k} = 1, so rho_{k,j} has the parity of j - k + 1.
        if (v - (j - k + 1)) % 2:
            out.append(f"rho_({k},{j}) = {v} has the wrong parity")
        if (k, j - 1) in table.values and not table.rho(k, j - 1) < v:
            out.append(f"rho_({k},{j}) not increasing in n")
        if k >= 2 and not v < table.rho(k - 1, j):
            out.append(f"rho_({k},{j}) not decreasing in k")
    for j in range(1, n + 1):
        if not 2 * table.r(j) < seq.q(j):
            out.append(f"2 r_{j} >= q_{j}")
    return out


def check_round_trip(seq: PinchSequence) -> List[str]:
    again = synthesize(seq.seed())
    if again != seq:
        return [f"synthesize(seed) gives {again.top}, not the original sequence"]
    if pinch_sequence(again.top) != seq:
        return ["pinch_sequence of the synthesized knot differs"]
    return []


def check_stages(seq: PinchSequence) -> List[str]:
    return [
        f"stage k={c.k} T{c.pair}: upsilon {c.recursive} != {c.closed_quarters}/4"
        for c in _inv.verify_stage_identities(seq).failures
    ]


def check_oracle(knot: TorusKnot, cap: Optional[int] = None) -> List[str]:
    sig = _oracle.oracle_signature(knot, cap)
    rec = _inv.signature_recursive(knot)
    return [] if sig == rec else [f"oracle signature {sig} != recursive {rec}"]


SEQUENCE_CHECKS: Dict[str, Callable[[PinchSequence], List[str]]] = {
    "closed vs recursive": check_invariants,
    "gap conditions": check_conditions,
    "pinch steps": check_steps,
    "rho table": check_rho,
    "round trip": check_round_trip,
    "stage identities": check_stages,
}


@dataclass
class Section:
    name: str
    checked: int = 0
    failures: List[Tuple[TorusKnot, str]] = field(default_factory=list)

    def run(self, knot: TorusKnot, problems: Iterable[str]) -> None:
        self.checked += 1
        self.failures.extend((knot, msg) for msg in problems)


@dataclass
class Summary:
    sections: List[Section]

    @property
    def failures(self) -> List[Tuple[TorusKnot, str]]:
        return [f for s in self.sections for f in s.failures]

    @property
    def ok(self) -> bool:
        return not self.failures

    def render(self) -> str:
        lines = [
            f"{s.name}: {s.checked} knots checked, {len(s.failures)} failures"
            for s in self.sections
        ]
        fails = self.failures
        lines.append(f"{len(fails)} failures")
        for knot, msg in fails[:MAX_LISTED]:
            lines.append(f"  {knot}: {msg}")
        return "\n".join(lines) + "\n"


def run_selftest(pmax: int = 60, qmax: int = 60, oracle_cap: Optional[int] = None) -> Summary:
    cap = _oracle.oracle_cap() if oracle_cap is None else oracle_cap
    sections = {name: Section(name) for name in SEQUENCE_CHECKS}
    oracle_section = Section(f"oracle (dim <= {cap})")
    for knot in scan_knots(pmax, qmax):
        try:
            seq = pinch_sequence(knot)
        except ConsistencyError as exc:
            sections["round trip"].run(knot, [str(exc)])
            continue
        for name, check in SEQUENCE_CHECKS.items():
            try:
                problems = check(seq)
            except ConsistencyError as exc:
                problems = [str(exc)]
            sections[name].run(knot, problems)
        if (knot.p - 1) * (knot.q - 1) <= cap:
            oracle_section.run(knot, check_oracle(knot, cap))
    return Summary(list(sections.values()) + [oracle_section])
