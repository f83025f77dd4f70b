import math

from hypothesis import given
from hypothesis import strategies as st

from quartic_acm import quadform

ints = st.integers(min_value=-40, max_value=40)


@given(ints, ints)
def test_xgcd_bezout(a, b):
    g, s, t = quadform.xgcd(a, b)
    assert g == math.gcd(a, b)
    assert s * a + t * b == g


def test_signature_known_matrices():
    assert quadform.signature(((1, 0), (0, 1))) == (2, 0, 0)
    assert quadform.signature(((0, 1), (1, 0))) == (1, 1, 0)  # zero-pivot repair
    assert quadform.signature(((1, 0), (0, 0))) == (1, 0, 1)
    assert quadform.signature(((2, 0, 0), (0, -2, 0), (0, 0, -6))) == (1, 2, 0)
    assert quadform.signature(((4, 1), (1, -2))) == (1, 1, 0)
    assert quadform.signature(((4, 4), (4, 0))) == (1, 1, 0)
    assert quadform.signature(((0,),)) == (0, 0, 1)


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_signature_rank2_matches_determinant_sign(a, b, c):
    gram = ((2 * a, b), (b, 2 * c))
    det = 4 * a * c - b * b
    sig = quadform.signature(gram)
    assert (sig == (1, 1, 0)) == (det < 0)


def _brute_slice(gram, h, degree, min_square, radius):
    n = len(h)
    out = set()

    def rec(prefix):
        if len(prefix) == n:
            x = tuple(prefix)
            if sum(xi * hi for xi, hi in zip(x, h)) != degree:
                return
            if quadform.gram_product(gram, x, x) >= min_square:
                out.add(x)
            return
        for v in range(-radius, radius + 1):
            rec(prefix + [v])

    rec([])
    return out


def test_slice_enumeration_matches_brute_force_rank2():
    gram = ((4, 1), (1, -2))
    h = (4, 1)  # gram * (1, 0)
    enum = quadform.SliceEnumerator(gram, h)
    for degree in range(0, 7):
        for min_square in (-2, 0, -2 * degree * degree):
            found = set(enum.classes(degree, min_square))
            brute = _brute_slice(gram, h, degree, min_square, radius=30)
            assert brute <= found
            for x in found:
                assert sum(a * b for a, b in zip(x, h)) == degree
                assert quadform.gram_product(gram, x, x) >= min_square
            # everything the enumerator finds within the brute radius is brute-found
            inside = {x for x in found if all(abs(c) <= 30 for c in x)}
            assert inside == brute


def test_slice_enumeration_matches_brute_force_rank3():
    gram = ((4, 3, 0), (3, -2, 0), (0, 0, -6))
    h = (4, 3, 0)
    enum = quadform.SliceEnumerator(gram, h)
    for degree in (0, 1, 3, 4):
        found = set(enum.classes(degree, -2 * max(degree, 1) ** 2))
        brute = _brute_slice(gram, h, degree, -2 * max(degree, 1) ** 2, radius=12)
        assert brute <= found
        inside = {x for x in found if all(abs(c) <= 12 for c in x)}
        assert inside == brute


def test_slice_enumerator_rejects_non_hyperbolic():
    gram = ((4, 0), (0, 2))  # positive definite
    try:
        quadform.SliceEnumerator(gram, (4, 0))
    except ValueError:
        pass
    else:
        raise AssertionError("expected rejection of a definite form")


def test_empty_slice_on_divisibility():
    gram = ((4,),)
    enum = quadform.SliceEnumerator(gram, (4,))
    assert enum.classes(2, -100) == []
    assert enum.classes(4, -100) == [(1,)]
