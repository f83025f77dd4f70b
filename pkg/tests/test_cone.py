import pytest

from quartic_acm import (
    is_effective,
    is_irreducible_class,
    isotropic_primitives,
    roots_up_to_degree,
)
from quartic_acm.cone import candidate_classes
from quartic_acm.verify import enumerate_effective

from helpers import is_sum_of_roots, monoid_effective


def test_roots_on_line(line):
    roots = roots_up_to_degree(line, 4)
    assert [(r.divisor.coords, r.degree, r.irreducible) for r in roots] == [((0, 1), 1, True)]


def test_roots_on_gen6_empty(gen6):
    # 2a^2 + 6ab + 2b^2 = -1 has no integer solutions (parity).
    assert roots_up_to_degree(gen6, 16) == []


def test_roots_on_conic_degree_two(conic):
    # Both (0,1) and (1,-1) are degree-2 roots; neither splits since every
    # degree on this lattice is even, so no degree-1 parts exist.
    roots = roots_up_to_degree(conic, 2)
    assert [(r.divisor.coords, r.irreducible) for r in roots] == [
        ((0, 1), True),
        ((1, -1), True),
    ]


def test_reducible_roots_on_conic_degree_ten(conic):
    roots = roots_up_to_degree(conic, 12)
    by_degree = {}
    for r in roots:
        by_degree.setdefault(r.degree, []).append(r)
    assert sorted(by_degree) == [2, 10]
    assert [(r.divisor.coords, r.irreducible) for r in by_degree[10]] == [
        ((1, 3), False),
        ((4, -3), False),
    ]


def test_every_root_is_a_sum_of_irreducible_roots(rank2_catalog):
    for lat in rank2_catalog:
        roots = roots_up_to_degree(lat, 12)
        irreducible = [r.divisor for r in roots if r.irreducible]
        for r in roots:
            assert is_sum_of_roots(lat, r.divisor, irreducible), (lat.name, r)


def test_effectivity_examples(line, conic, cubic):
    assert is_effective(line, line.divisor(0, 1))
    assert not is_effective(line, -line.polarization)
    assert is_effective(line, line.zero())
    assert not is_effective(line, line.divisor(1, -2))  # H - 2L
    assert is_effective(conic, conic.divisor(0, 2))  # 2Q
    assert not is_effective(cubic, cubic.divisor(1, -1))  # H - T


def test_effectivity_matches_monoid_oracle(rank2_catalog, rank1):
    max_degree = 12
    for lat in rank2_catalog + (rank1,):
        for e in range(1, max_degree + 1):
            for d in candidate_classes(lat, e):
                assert is_effective(lat, d) == monoid_effective(lat, d, max_degree), (
                    lat.name,
                    d,
                )


def test_effectivity_monotone_under_sums(line, conic):
    for lat in (line, conic):
        classes = enumerate_effective(lat, 6)
        for a in classes:
            for b in classes:
                assert is_effective(lat, a + b)


def test_isotropic_primitives_on_line(line):
    found = [(e.coords, line.degree(e)) for e in isotropic_primitives(line, 6)]
    assert found == [((1, -1), 3), ((1, 2), 6)]


def test_isotropic_primitives_on_cubic_empty(cubic):
    # Discriminant 17 is not a square, so no rational isotropic ray exists.
    assert isotropic_primitives(cubic, 16) == []


def test_isotropic_primitives_on_quartel(quartel):
    found = [(e.coords, quartel.degree(e)) for e in isotropic_primitives(quartel, 4)]
    assert found == [((0, 1), 4), ((2, -1), 4)]


def test_irreducibility_examples(line, conic, rank1):
    assert is_irreducible_class(line, line.divisor(0, 1))
    assert not is_irreducible_class(conic, conic.divisor(0, 2))  # 2Q = Q + Q
    assert is_irreducible_class(rank1, rank1.polarization)
    assert not is_irreducible_class(conic, conic.polarization)  # H = Q + (H - Q)


def test_irreducibility_preconditions(line):
    with pytest.raises(ValueError):
        is_irreducible_class(line, line.zero())
    with pytest.raises(ValueError):
        is_irreducible_class(line, -line.polarization)


def test_no_low_degree_moving_classes(catalog):
    # The lattice shadow of the trigonality argument: an effective non-zero
    # class with non-negative square has degree at least 3.
    for lat in catalog:
        for e in (1, 2):
            for d in candidate_classes(lat, e):
                if lat.square(d) >= 0:
                    assert not is_effective(lat, d), (lat.name, d)


def test_roots_have_square_minus_two_and_positive_degree(rank2_catalog):
    for lat in rank2_catalog:
        for r in roots_up_to_degree(lat, 12):
            assert lat.square(r.divisor) == -2
            assert 1 <= r.degree <= 12
            assert r.degree == lat.degree(r.divisor)


def test_rank3_roots(rank3):
    roots = roots_up_to_degree(rank3, 4)
    assert ((0, 1, 0), 3, True) in [(r.divisor.coords, r.degree, r.irreducible) for r in roots]
