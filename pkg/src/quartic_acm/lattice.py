"""Divisor classes and polarized quartic-type K3 lattices.

A lattice here is a symmetric even integer Gram matrix of signature
(1, rank-1) together with a polarization class H of square 4 (the hyperplane
class of a quartic surface).  All arithmetic uses Python's arbitrary-precision
integers, so it is exact at any magnitude and cannot overflow.

Lattices are immutable after construction and every operation is a pure
function of its inputs; concurrent use needs no synchronization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import quadform


@dataclass(frozen=True)
class DivisorClass:
    """Integer coordinate vector in the fixed basis of the ambient lattice."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        if not coords:
            raise ValueError("divisor class needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def sort_key(self) -> tuple[int, ...]:
        return self.coords

    def __repr__(self) -> str:
        return f"DivisorClass({self.coords!r})"


@dataclass(frozen=True)
class CohomologySignature:
    """The triple (h0, h1, h2) of a line bundle on a K3 surface."""

    h0: int
    h1: int
    h2: int

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)


@dataclass(frozen=True)
class PolarizedK3Lattice:
    """Even hyperbolic lattice with a distinguished polarization of square 4."""

    gram: tuple[tuple[int, ...], ...]
    polarization: DivisorClass
    search_bound_degree: int = 32
    name: str = ""

    def __post_init__(self) -> None:
        gram = tuple(tuple(int(v) for v in row) for row in self.gram)
        n = len(gram)
        if n == 0 or any(len(row) != n for row in gram):
            raise ValueError("gram matrix must be square and non-empty")
        object.__setattr__(self, "gram", gram)
        pol = self.polarization
        if not isinstance(pol, DivisorClass):
            pol = DivisorClass(tuple(pol))
            object.__setattr__(self, "polarization", pol)
        if len(pol) != n:
            raise ValueError("polarization length does not match lattice rank")
        if self.search_bound_degree < 1:
            raise ValueError("search_bound_degree must be positive")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def basis(self, i: int) -> DivisorClass:
        return DivisorClass(tuple(int(j == i) for j in range(self.rank)))

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * self.rank)

    def divisor(self, *coords: int) -> DivisorClass:
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        return DivisorClass(coords)

    def intersect(self, x: DivisorClass, y: DivisorClass) -> int:
        """The intersection pairing x.y."""
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError("coordinate length does not match lattice rank")
        return quadform.gram_product(self.gram, x.coords, y.coords)

    def square(self, d: DivisorClass) -> int:
        return self.intersect(d, d)

    def degree(self, d: DivisorClass) -> int:
        """Degree against the polarization, d.H."""
        return self.intersect(d, self.polarization)

    def euler_char(self, d: DivisorClass) -> int:
        """Riemann-Roch on a K3: chi(O(D)) = 2 + D^2/2."""
        sq = self.square(d)
        if sq % 2 != 0:
            raise ArithmeticError("odd self-intersection on a lattice claimed even")
        return 2 + sq // 2


@dataclass(frozen=True)
class AdmissibilityReport:
    """Outcome of the admissibility validation of a polarized lattice.

    All checks are exact: the two enumerative conditions (no (-2)-class
    orthogonal to H, no isotropic class of degree <= 2) live on finitely
    many negative-definite slices regardless of rank.
    """

    ok: bool
    violations: tuple[str, ...]
    signature: tuple[int, int, int] | None = None
    search_bound_degree: int = 32


@lru_cache(maxsize=None)
def slice_enumerator(lattice: PolarizedK3Lattice) -> quadform.SliceEnumerator:
    h = tuple(
        quadform.gram_product(lattice.gram, lattice.basis(i).coords, lattice.polarization.coords)
        for i in range(lattice.rank)
    )
    return quadform.SliceEnumerator(lattice.gram, h)


def classes_of_degree(
    lattice: PolarizedK3Lattice, degree: int, min_square: int
) -> list[DivisorClass]:
    """All classes x with x.H = degree and x^2 >= min_square, sorted by coords."""
    enum = slice_enumerator(lattice)
    return [DivisorClass(c) for c in enum.classes(degree, min_square)]


def validate_admissible(lattice: PolarizedK3Lattice) -> AdmissibilityReport:
    """Check the standing hypotheses of the quartic setting.

    In order: symmetry, even diagonal, signature (1, rank-1), H^2 = 4,
    H not orthogonal to any (-2)-class (ampleness), and no isotropic class
    of degree <= 2 (the quartic's hyperplane sections are trigonal, so
    degree-<=2 pencils cannot exist).  The report lists every violation.
    """
    g = lattice.gram
    n = lattice.rank
    violations: list[str] = []
    if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
        return AdmissibilityReport(
            ok=False,
            violations=("gram matrix is not symmetric",),
            signature=None,
            search_bound_degree=lattice.search_bound_degree,
        )
    if any(g[i][i] % 2 != 0 for i in range(n)):
        violations.append("gram diagonal has odd entries (lattice not even)")
    sig = quadform.signature(g)
    if sig != (1, n - 1, 0):
        violations.append(f"signature is {sig}, expected (1, {n - 1}, 0)")
    h_sq = lattice.square(lattice.polarization)
    if h_sq != 4:
        violations.append(f"polarization square is {h_sq}, expected 4")
    if sig == (1, n - 1, 0) and h_sq == 4:
        for x in classes_of_degree(lattice, 0, -2):
            if lattice.square(x) == -2:
                violations.append(
                    f"(-2)-class {x.coords} is orthogonal to the polarization "
                    "(polarization is not ample)"
                )
        for e in (1, 2):
            for x in classes_of_degree(lattice, e, 0):
                if lattice.square(x) == 0:
                    violations.append(
                        f"isotropic class {x.coords} has degree {e} <= 2 "
                        "(forbidden low-degree pencil)"
                    )
    return AdmissibilityReport(
        ok=not violations,
        violations=tuple(violations),
        signature=sig,
        search_bound_degree=lattice.search_bound_degree,
    )
