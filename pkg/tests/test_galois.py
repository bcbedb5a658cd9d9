import itertools

import pytest

from infoqm.galois import GaloisField, is_prime, prime_power

FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2)]


@pytest.fixture(params=FIELDS, ids=lambda f: f"GF{f[0]}^{f[1]}")
def gf(request):
    return GaloisField(*request.param)


def test_element_count_and_indices(gf):
    elems = gf.elements
    assert len(elems) == gf.order
    assert sorted(int(e) for e in elems) == list(range(gf.order))
    assert all(gf.element(int(e)) == e for e in elems)


def test_additive_and_multiplicative_axioms(gf):
    e = gf.elements
    for a, b in itertools.product(e, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        assert a - b + b == a
    for a, b, c in itertools.product(e, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_identities_and_inverses(gf):
    for a in gf.elements:
        assert a + gf.zero == a
        assert a * gf.one == a
        if a:
            assert a * a.inverse() == gf.one
            assert a / a == gf.one
    with pytest.raises(ZeroDivisionError):
        gf.zero.inverse()


def test_no_zero_divisors(gf):
    for a, b in itertools.product(gf.elements, repeat=2):
        if a and b:
            assert a * b


def test_trace_range_and_additivity(gf):
    for a in gf.elements:
        assert 0 <= a.trace() < gf.p
    for a, b in itertools.product(gf.elements, repeat=2):
        assert (a + b).trace() == (a.trace() + b.trace()) % gf.p


def test_trace_is_onto_and_balanced(gf):
    counts = [0] * gf.p
    for a in gf.elements:
        counts[a.trace()] += 1
    assert counts == [gf.order // gf.p] * gf.p


def test_frobenius_is_additive(gf):
    for a, b in itertools.product(gf.elements, repeat=2):
        assert (a + b) ** gf.p == a**gf.p + b**gf.p


def test_gf9_modulus_is_x2_plus_1():
    gf = GaloisField(3, 2)
    x = gf.element((0, 1))
    assert x * x == gf.element((2, 0))  # x^2 = -1


def test_gf4_generator_order():
    gf = GaloisField(2, 2)
    x = gf.element((0, 1))
    assert x**3 == gf.one and x != gf.one and x * x != gf.one


def test_reducible_modulus_detected_by_zero_divisor():
    # x^2 + 2 = (x - 1)(x + 1) over GF(3) is not irreducible
    bad = GaloisField(3, 2, modulus=(2, 0))
    assert any(not (a * b) for a in bad.elements for b in bad.elements if a and b)


def test_prime_helpers():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_power(9) == (3, 2)
    assert prime_power(8) == (2, 3)
    assert prime_power(6) is None
    assert prime_power(7) == (7, 1)
