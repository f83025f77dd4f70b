"""Initializedness, the numeric four-case classification, and the brute-force
ACM oracle.

A line bundle is ACM when h1 of every integer twist D + l*H vanishes, and
initialized when h0(D) > 0 but h0(D - H) = 0.  The classification matches
(D^2, D.H) against four numeric patterns; the oracle instead truncates the
twist line to a certified finite window (beyond it the twist or its dual is
nef and big, so h1 vanishes) and checks every interior twist directly.  The
two routes are deliberately independent so the equivalence scan in the
verification harness is a genuine cross-check, not a tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cohomology import cohomology, is_nef
from .cone import is_effective
from .lattice import DivisorClass, PolarizedK3Lattice


class TheoremCase(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


# (square, accepted degrees) for each numeric case.  classify_numeric reads
# this at call time so tests can mutate a pattern and confirm the
# oracle-vs-classifier scan really has teeth.
CASE_PATTERNS: dict[TheoremCase, tuple[int, frozenset[int]]] = {
    TheoremCase.A: (-2, frozenset({1, 2, 3})),
    TheoremCase.B: (0, frozenset({3, 4})),
    TheoremCase.C: (2, frozenset({5})),
    TheoremCase.D: (4, frozenset({6})),
}

REASON_ZERO = "zero-class"
REASON_NOT_EFFECTIVE = "not-effective"
REASON_MISMATCH = "numeric-mismatch"
REASON_EMPTINESS = "emptiness-violated"


@dataclass(frozen=True)
class Classification:
    """Outcome of the numeric classification: a case, or None with a reason."""

    case: TheoremCase | None
    reason: str | None = None

    @property
    def matched(self) -> bool:
        return self.case is not None


@dataclass(frozen=True)
class TwistWindow:
    """Twist bounds outside of which h1(D + l*H) = 0 is certified.

    D + l_plus*H is effective, nef and big, and stays so for larger l; the
    dual of D + l_minus*H likewise for smaller l.  Only the open interval
    between them needs direct inspection.
    """

    l_minus: int
    l_plus: int

    def __post_init__(self) -> None:
        if self.l_minus >= self.l_plus:
            raise ValueError("twist window is inverted")

    def interior(self) -> range:
        return range(self.l_minus + 1, self.l_plus)


def is_initialized(lattice: PolarizedK3Lattice, d: DivisorClass) -> bool:
    """h0(D) > 0 and h0(D - H) = 0; section existence equals effectivity."""
    return is_effective(lattice, d) and not is_effective(lattice, d - lattice.polarization)


def classify_numeric(lattice: PolarizedK3Lattice, d: DivisorClass) -> Classification:
    """Match (D^2, D.H) against the four numeric patterns.

    The (4, 6) pattern additionally requires both D - H and 2H - D to be
    non-effective; the other patterns are pure arithmetic on the pair.
    """
    if d.is_zero():
        return Classification(None, REASON_ZERO)
    if not is_effective(lattice, d):
        return Classification(None, REASON_NOT_EFFECTIVE)
    sq = lattice.square(d)
    deg = lattice.degree(d)
    h = lattice.polarization
    for case, (want_sq, degrees) in CASE_PATTERNS.items():
        if sq == want_sq and deg in degrees:
            if case is TheoremCase.D:
                if is_effective(lattice, d - h) or is_effective(lattice, 2 * h - d):
                    return Classification(None, REASON_EMPTINESS)
            return Classification(case)
    return Classification(None, REASON_MISMATCH)


def twist_window(lattice: PolarizedK3Lattice, d: DivisorClass, cap: int = 64) -> TwistWindow:
    """Certified truncation of the twist line for the ACM oracle."""
    l_plus = _nef_big_twist(lattice, d, cap)
    l_minus = -_nef_big_twist(lattice, -d, cap)
    return TwistWindow(l_minus=l_minus, l_plus=l_plus)


def _nef_big_twist(lattice: PolarizedK3Lattice, d: DivisorClass, cap: int) -> int:
    """Smallest l (from a heuristic start) with D + l*H effective, nef and big.

    Adding further copies of the ample H preserves all three properties, so
    every l beyond the returned one is covered too.  The start only affects
    how tight the window is, never correctness.
    """
    h = lattice.polarization
    start = -((lattice.degree(d) - 2) // 4)  # ceil((2 - deg)/4)
    l = max(start, -cap)
    while l <= cap:
        twisted = d + l * h
        if (
            lattice.square(twisted) > 0
            and is_effective(lattice, twisted)
            and is_nef(lattice, twisted)
        ):
            return l
        l += 1
    raise RuntimeError(
        f"no nef-and-big twist of {d.coords} within |l| <= {cap}; "
        "the lattice is unlikely to be admissible"
    )


def is_acm_oracle(lattice: PolarizedK3Lattice, d: DivisorClass, cap: int = 64) -> bool:
    """Definitional ACM test: h1 of every twist vanishes.

    Scans every twist inside the certified window; the window guarantee
    covers the rest.  Never inspects the (D^2, D.H) patterns.
    """
    window = twist_window(lattice, d, cap)
    h = lattice.polarization
    return all(cohomology(lattice, d + l * h).h1 == 0 for l in window.interior())


def lemma22_sufficient(lattice: PolarizedK3Lattice, d: DivisorClass) -> bool:
    """Fast sufficient test for ACM on an effective class.

    Requires h1(D) = 0 and either degree <= 3 with h1(H - D) = 0, or
    degree <= 7 with h1(H - D) = h1(2H - D) = 0.
    """
    if not is_effective(lattice, d):
        raise ValueError("the sufficient test applies to effective classes")
    if cohomology(lattice, d).h1 != 0:
        return False
    h = lattice.polarization
    deg = lattice.degree(d)
    if cohomology(lattice, h - d).h1 != 0:
        return False
    if deg <= 3:
        return True
    return deg <= 7 and cohomology(lattice, 2 * h - d).h1 == 0
