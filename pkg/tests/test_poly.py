import pytest
from hypothesis import given, settings, strategies as st

from hullforge.poly import Poly, derivative_at_roots

from conftest import field

QS = [7, 8, 9, 19, 27, 81]


def polys(q, max_deg=8):
    return st.lists(st.integers(0, q - 1), max_size=max_deg + 1).map(lambda c: Poly(field(q), c))


@settings(max_examples=500, deadline=None)
@given(st.sampled_from(QS).flatmap(lambda q: st.tuples(polys(q), polys(q))))
def test_derivative_product_rule(pair):
    f, g = pair
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(QS).flatmap(lambda q: st.tuples(polys(q), polys(q, 5))))
def test_division_identity(pair):
    f, d = pair
    if d.is_zero():
        return
    qt, r = divmod(f, d)
    assert qt * d + r == f
    assert r.degree < d.degree


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(QS).flatmap(lambda q: st.tuples(polys(q, 5), polys(q, 5), polys(q, 3))))
def test_gcd_divides_both(triple):
    f, g, c = triple
    if c.is_zero():
        return
    d = (f * c).gcd(g * c)
    if d.is_zero():
        return
    assert ((f * c) % d).is_zero() and ((g * c) % d).is_zero()
    assert d.lead == 1


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(QS).flatmap(lambda q: st.tuples(polys(q, 4), polys(q, 3), st.integers(0, q - 1))))
def test_compose_evaluates_pointwise(triple):
    f, g, x = triple
    assert f.compose(g)(x) == f(g(x))


@pytest.mark.parametrize("q", QS)
def test_from_roots_and_derivative_at_roots(q):
    F = field(q)
    pts = list(range(1, min(q, 10)))
    h = Poly.from_roots(F, pts)
    assert h.lead == 1 and h.degree == len(pts)
    assert set(h.root_set()) == set(pts)
    hp = h.derivative()
    assert [hp(a) for a in pts] == derivative_at_roots(F, pts)


def test_multiplicity_and_roots():
    F = field(19)
    f = Poly.linear(F, 3) ** 4 * Poly.linear(F, 5)
    assert f.multiplicity(3) == 4 and f.multiplicity(5) == 1 and f.multiplicity(6) == 0
    assert f.roots() == [(3, 4), (5, 1)]
    assert not f.is_squarefree_on([3])


def test_xq_minus_x_has_every_element_as_root():
    F = field(9)
    f = Poly.monomial(F, 9) - Poly.x(F)
    assert f == Poly.from_roots(F, range(9))
    assert f.derivative() == Poly.const(F, F.neg(1))


def test_exact_div_raises():
    F = field(7)
    with pytest.raises(ValueError):
        Poly.x(F).exact_div(Poly.linear(F, 1))
    with pytest.raises(ZeroDivisionError):
        divmod(Poly.x(F), Poly(F))
