"""Cohomology of line bundles on a polarized K3 lattice.

Section counts come from the classical nef-reduction rules (Saint-Donat):
subtract the fixed (-2)-curves until the class is nef, then

  * nef and big:      h0 = chi = 2 + M^2/2   (vanishing h1 = h2 = 0),
  * isotropic M = kE: h0 = k + 1             (multiple of an elliptic pencil),
  * M = 0:            h0 = 1.

h2 is Serre duality (h2(D) = h0(-D), trivial canonical bundle) and h1 closes
the Euler characteristic.  These facts are encoded as computation rules; they
are not re-derived here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cone import candidate_classes, irreducible_roots_up_to, is_effective, isotropic_primitives
from .lattice import CohomologySignature, DivisorClass, PolarizedK3Lattice


@dataclass(frozen=True)
class ZariskiDecomposition:
    """Splitting D = M + F into a nef (movable) part and fixed (-2)-curves."""

    nef_part: DivisorClass
    fixed_part: tuple[tuple[DivisorClass, int], ...]  # (irreducible root, multiplicity)

    def fixed_sum(self) -> DivisorClass:
        total = DivisorClass((0,) * len(self.nef_part))
        for root, mult in self.fixed_part:
            total = total + mult * root
        return total

    @property
    def has_fixed_part(self) -> bool:
        return bool(self.fixed_part)


def zariski_reduce(
    lattice: PolarizedK3Lattice, d: DivisorClass, *, reverse_search: bool = False
) -> ZariskiDecomposition:
    """Peel off irreducible roots pairing negatively until the rest is nef.

    Each subtracted root lies in every member of the linear system, so the
    remainder stays effective and carries all sections; the degree drops at
    every step, so the loop terminates.  The result does not depend on the
    subtraction order (``reverse_search`` picks candidates from the other end
    and exists to let tests check exactly that).
    """
    if not is_effective(lattice, d):
        raise ValueError("zariski_reduce needs an effective class")
    current = d
    fixed: dict[DivisorClass, int] = {}
    while True:
        e = lattice.degree(current)
        if e <= 0:
            break
        roots = irreducible_roots_up_to(lattice, e)
        if reverse_search:
            roots = tuple(reversed(roots))
        step = next((r for r in roots if lattice.intersect(current, r) < 0), None)
        if step is None:
            break
        current = current - step
        if not is_effective(lattice, current):
            raise RuntimeError(
                "internal invariant violated: fixed-component subtraction left "
                f"a non-effective class {current.coords} (from {d.coords})"
            )
        fixed[step] = fixed.get(step, 0) + 1
    ordered = tuple(
        sorted(fixed.items(), key=lambda item: (lattice.degree(item[0]), item[0].coords))
    )
    return ZariskiDecomposition(nef_part=current, fixed_part=ordered)


def is_nef(lattice: PolarizedK3Lattice, d: DivisorClass) -> bool:
    """Nefness certificate for effective (or zero) classes.

    An effective class is nef iff its square is >= 0 and it pairs >= 0 with
    every irreducible root of degree up to its own (roots of larger degree
    cannot be components and automatically pair >= 0).  Non-effective
    non-zero classes are not certified.
    """
    if d.is_zero():
        return True
    if not is_effective(lattice, d):
        return False
    if lattice.square(d) < 0:
        return False
    e = lattice.degree(d)
    return all(lattice.intersect(d, r) >= 0 for r in irreducible_roots_up_to(lattice, e))


def cohomology(lattice: PolarizedK3Lattice, d: DivisorClass) -> CohomologySignature:
    """Full (h0, h1, h2) of O(D) from lattice data alone."""
    h0 = _sections(lattice, d)
    h2 = _sections(lattice, -d)
    h1 = h0 + h2 - lattice.euler_char(d)
    if h1 < 0:
        raise RuntimeError(
            f"internal invariant violated: negative h1 for class {d.coords}"
        )
    return CohomologySignature(h0=h0, h1=h1, h2=h2)


def _sections(lattice: PolarizedK3Lattice, d: DivisorClass) -> int:
    if not is_effective(lattice, d):
        return 0
    m = zariski_reduce(lattice, d).nef_part
    if m.is_zero():
        return 1
    sq = lattice.square(m)
    if sq > 0:
        return 2 + sq // 2
    k = math.gcd(*m.coords)
    return k + 1


def is_base_point_free(lattice: PolarizedK3Lattice, d: DivisorClass) -> bool:
    """Whether the linear system of an effective class is base point free.

    Fixed components are base points.  A nef class with square zero is a
    multiple of an elliptic pencil, hence free; a nef-and-big class is free
    unless an elliptic pencil E meets it in exactly one point (Saint-Donat's
    hyperelliptic-type obstruction), and any such E has degree below D.H.
    """
    if d.is_zero() or not is_effective(lattice, d):
        raise ValueError("base point freeness is defined for non-zero effective classes")
    reduction = zariski_reduce(lattice, d)
    if reduction.has_fixed_part:
        return False
    if lattice.square(d) == 0:
        return True
    return all(
        lattice.intersect(e, d) != 1
        for e in isotropic_primitives(lattice, lattice.degree(d))
    )


def is_k_connected(lattice: PolarizedK3Lattice, d: DivisorClass, k: int) -> bool:
    """Whether every effective splitting D = A + B has A.B >= k.

    Vacuously true when no splitting exists.  Splittings are scanned over
    the certified candidate boxes of degrees 1 .. D.H - 1; it suffices to
    let A carry at most half the degree since A.B is symmetric.
    """
    if d.is_zero() or not is_effective(lattice, d):
        raise ValueError("connectedness is defined for non-zero effective classes")
    if k < 0:
        raise ValueError("k must be non-negative")
    e = lattice.degree(d)
    for a in range(1, e // 2 + 1):
        for part in candidate_classes(lattice, a):
            if not is_effective(lattice, part):
                continue
            rest = d - part
            if rest.is_zero() or not is_effective(lattice, rest):
                continue
            if lattice.intersect(part, rest) < k:
                return False
    return True
