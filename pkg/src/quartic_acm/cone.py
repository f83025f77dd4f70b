"""Effective-cone decision procedures.

Effectivity of a class is decided by Riemann-Roch plus a recursion over
irreducible (-2)-roots: a class of square <= -4 is effective exactly when
some irreducible root pairs negatively with it and the difference stays
effective.  All enumerations run over certified finite boxes: an effective
class of degree e is a sum of at most e irreducible classes, which forces
x^2 >= -2e^2 on its degree slice.

Queries are pure and memoized; the caches are transparent (idempotent
inserts of values that depend only on the arguments), so concurrent use is
safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .lattice import DivisorClass, PolarizedK3Lattice, classes_of_degree


@dataclass(frozen=True)
class Root:
    """A (-2)-class on the effective side, tagged with irreducibility."""

    divisor: DivisorClass
    degree: int
    irreducible: bool


def candidate_classes(lattice: PolarizedK3Lattice, degree: int) -> list[DivisorClass]:
    """Every class of the given positive degree that could possibly be effective.

    The box bound x^2 >= -2*degree^2 is complete: any sum of classes with
    square >= -2 and positive degrees summing to ``degree`` lands inside it.
    """
    if degree < 1:
        return []
    return classes_of_degree(lattice, degree, -2 * degree * degree)


@lru_cache(maxsize=None)
def roots_of_degree(lattice: PolarizedK3Lattice, degree: int) -> tuple[DivisorClass, ...]:
    if degree < 1:
        return ()
    found = [x for x in classes_of_degree(lattice, degree, -2) if lattice.square(x) == -2]
    return tuple(found)


@lru_cache(maxsize=None)
def irreducible_roots_up_to(
    lattice: PolarizedK3Lattice, max_degree: int
) -> tuple[DivisorClass, ...]:
    """Irreducible (-2)-roots of degree 1..max_degree, sorted by (degree, coords)."""
    out = []
    for e in range(1, max_degree + 1):
        for r in roots_of_degree(lattice, e):
            if not _splits(lattice, r, e):
                out.append(r)
    return tuple(out)


def _splits(lattice: PolarizedK3Lattice, d: DivisorClass, degree: int) -> bool:
    """Whether d decomposes into two non-zero effective classes."""
    for a in range(1, degree // 2 + 1):
        for part in candidate_classes(lattice, a):
            if is_effective(lattice, part) and is_effective(lattice, d - part):
                return True
    return False


@lru_cache(maxsize=None)
def is_effective(lattice: PolarizedK3Lattice, d: DivisorClass) -> bool:
    """Whether the class has a section (d = 0 counts, via the trivial section).

    Degree <= 0 non-zero classes are never effective against an ample
    polarization.  Square >= -2 with positive degree is forced by
    Riemann-Roch.  Otherwise recurse through irreducible roots that pair
    negatively: such a root lies in every decomposition, so subtracting it
    preserves effectivity.
    """
    if d.is_zero():
        return True
    e = lattice.degree(d)
    if e <= 0:
        return False
    if lattice.square(d) >= -2:
        return True
    for r in irreducible_roots_up_to(lattice, e):
        if lattice.intersect(d, r) < 0 and is_effective(lattice, d - r):
            return True
    return False


def roots_up_to_degree(lattice: PolarizedK3Lattice, max_degree: int) -> list[Root]:
    """All roots with 1 <= R.H <= max_degree, each tagged with irreducibility."""
    if max_degree < 1:
        raise ValueError("max_degree must be positive")
    irreducible = set(irreducible_roots_up_to(lattice, max_degree))
    return [
        Root(r, e, r in irreducible)
        for e in range(1, max_degree + 1)
        for r in roots_of_degree(lattice, e)
    ]


def is_irreducible_class(lattice: PolarizedK3Lattice, d: DivisorClass) -> bool:
    """Whether an effective class admits no effective splitting."""
    if d.is_zero() or not is_effective(lattice, d):
        raise ValueError("irreducibility is defined for non-zero effective classes")
    return not _splits(lattice, d, lattice.degree(d))


def isotropic_primitives(lattice: PolarizedK3Lattice, max_degree: int) -> list[DivisorClass]:
    """Primitive classes E with E^2 = 0 and 1 <= E.H <= max_degree.

    Such classes are automatically effective (chi = 2) and generate the
    elliptic pencils the lattice carries.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be positive")
    out = []
    for e in range(1, max_degree + 1):
        for x in classes_of_degree(lattice, e, 0):
            if lattice.square(x) == 0 and math.gcd(*x.coords) == 1:
                out.append(x)
    return out
