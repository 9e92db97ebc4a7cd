import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hullforge.gf import GF, FieldError, default_modulus, is_irreducible_mod_p, prime_power

from conftest import field, small_prime_powers

QS = small_prime_powers(81)


def test_default_modulus_matches_common_choices():
    assert default_modulus(2, 3) == (1, 1, 0, 1)   # x^3 + x + 1
    assert default_modulus(2, 4) == (1, 1, 0, 0, 1)
    assert default_modulus(3, 2) == (1, 0, 1)


def test_prime_power():
    assert prime_power(81) == (3, 4)
    assert prime_power(19) == (19, 1)
    for bad in (1, 12, 100):
        with pytest.raises(FieldError):
            prime_power(bad)


def test_rejects_reducible_modulus():
    with pytest.raises(FieldError):
        GF(2, 2, [1, 0, 1])   # x^2 + 1 = (x + 1)^2
    assert not is_irreducible_mod_p((1, 0, 1), 2)
    assert is_irreducible_mod_p((2, 0, 0, 2, 1), 3)


def test_prime_subfield_is_integers_mod_p():
    F = GF(3, 4)
    for a in range(3):
        for b in range(3):
            assert F.add(a, b) == (a + b) % 3
            assert F.mul(a, b) == (a * b) % 3


@pytest.mark.parametrize("q", QS)
def test_generator_has_full_order(q):
    F = field(q)
    assert F.order(F.g) == q - 1
    assert sorted(F.exp(i) for i in range(q - 1)) == list(range(1, q))


@pytest.mark.parametrize("q", [8, 9, 19, 25, 81])
def test_field_axioms_exhaustive(q):
    F = field(q)
    for a in range(q):
        assert F.add(a, F.neg(a)) == 0
        assert F.mul(a, 1) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1
    # distributivity on a slice
    for a in range(0, q, 3):
        for b in range(q):
            for c in (1, 2, q - 1):
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([4, 16, 27, 49, 81, 125, 1024]), st.data())
def test_scalar_and_vector_ops_agree(q, data):
    F = field(q)
    xs = data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=20))
    ys = data.draw(st.lists(st.integers(0, q - 1), min_size=len(xs), max_size=len(xs)))
    a, b = np.array(xs), np.array(ys)
    assert list(F.vadd(a, b)) == [F.add(x, y) for x, y in zip(xs, ys)]
    assert list(F.vmul(a, b)) == [F.mul(x, y) for x, y in zip(xs, ys)]
    assert list(F.vsub(a, b)) == [F.sub(x, y) for x, y in zip(xs, ys)]
    assert F.vsum(a) == F.sum(xs)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([7, 8, 9, 27, 81]), st.data())
def test_pow_matches_repeated_multiplication(q, data):
    F = field(q)
    a = data.draw(st.integers(1, q - 1))
    e = data.draw(st.integers(-5, 40))
    acc = 1
    for _ in range(abs(e)):
        acc = F.mul(acc, a)
    if e < 0:
        acc = F.inv(acc)
    assert F.pow(a, e) == acc


@pytest.mark.parametrize("q", [q for q in QS if q % 2])
def test_euler_matches_exhaustive_squaring(q):
    F = field(q)
    squares = {F.mul(y, y) for y in range(q)}
    for a in range(q):
        assert F.is_square_euler(a) == (a in squares)
        assert F.is_square(a) == (a in squares)


@pytest.mark.parametrize("q", QS)
def test_sqrt_squares_back(q):
    F = field(q)
    for a in range(q):
        if F.is_square(a):
            r = F.sqrt(a)
            assert F.mul(r, r) == a
            assert r <= F.neg(r)
        else:
            with pytest.raises(FieldError):
                F.sqrt(a)


def test_sqrt_small_prime():
    F = GF(19)
    assert F.inv(2) == 10
    assert F.sqrt(4) == 2
    assert not F.is_square(2)
    assert F.smallest_nonsquare() == 2


def test_binary_fields_have_no_nonsquares():
    with pytest.raises(FieldError):
        GF(2, 3).smallest_nonsquare()


def test_subfields_and_roots_of_unity():
    F = GF(3, 4)
    assert F.subfield(1) == [0, 1, 2]
    assert len(F.subfield(2)) == 9
    with pytest.raises(FieldError):
        F.subfield(3)
    U = F.roots_of_unity(8)
    assert len(U) == 8 and all(F.pow(u, 8) == 1 for u in U)
    with pytest.raises(FieldError):
        F.roots_of_unity(7)


def test_descriptor_roundtrip_keeps_modulus():
    F = GF(3, 4, [2, 0, 0, 2, 1])
    G = GF.from_descriptor(F.descriptor())
    assert G == F and G.modulus == (2, 0, 0, 2, 1)
    assert G != GF(3, 4)


def test_field_elem_wrapper():
    F = GF(7)
    a, b = F(3), F(5)
    assert int(a + b) == 1
    assert int(a * b) == 1
    assert int(a / b) == F.div(3, 5)
    assert (a ** 6) == F(1)
    assert F(2).sqrt() * F(2).sqrt() == F(2)
