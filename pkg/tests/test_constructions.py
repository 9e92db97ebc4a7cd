import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hullforge.code import hull, hull_dim, matmul
from hullforge.constructions import (AbSplit, ConstructionError, GenSplit, PreconditionError,
                                     build_ab, build_generalized, check_witness, construct,
                                     dualize, eval_set, find_free_point)
from hullforge.gf import GF
from hullforge.poly import Poly

from conftest import field


def test_find_free_point():
    F = field(7)
    assert find_free_point(F, [0, 1, 3]) == 2
    with pytest.raises(ConstructionError):
        find_free_point(F, range(7))


@st.composite
def ab_inputs(draw):
    """Random points with a, b of the right degrees; the square condition may fail."""
    q = draw(st.sampled_from([8, 16, 9, 13, 25, 27, 49]))
    F = field(q)
    n = draw(st.integers(3, min(q - 2, 10)))
    pts = draw(st.permutations(list(range(q))))
    alpha, rest = pts[:n], pts[n:]
    da = draw(st.integers(0, n - 2))
    ra = draw(st.sampled_from(rest))
    rb = draw(st.sampled_from([r for r in rest if r != ra]))
    return F, alpha, AbSplit(Poly.linear(F, ra) ** da, Poly.linear(F, rb) ** (n - 2 - da))


@settings(max_examples=200, deadline=None)
@given(ab_inputs())
def test_build_ab_has_one_dimensional_hull_whenever_it_succeeds(args):
    F, alpha, split = args
    try:
        spec, w = build_ab(F, alpha, split)
    except ConstructionError:
        # then some (a b h')(alpha_i) must be a non-square
        hp = Poly.from_roots(F, alpha).derivative()
        vals = [F.mul(F.mul(split.a(x), split.b(x)), hp(x)) for x in alpha]
        assert not all(F.is_square(v) for v in vals)
        return
    C = spec.code()
    assert spec.k == len(alpha) - 1 - split.a.degree
    assert hull_dim(C) == 1
    check_witness(C, w)


@st.composite
def gen_inputs(draw):
    """Subfield or full-field point sets, where h' is a constant."""
    q = draw(st.sampled_from([9, 25, 27, 49, 81]))
    F = field(q)
    r = draw(st.sampled_from([d for d in range(1, F.m + 1) if F.m % d == 0]))
    alpha = F.subfield(r)
    n = len(alpha)
    s = draw(st.integers(1, max(1, (n - 1) // 2)))
    return F, alpha, s


@settings(max_examples=40, deadline=None)
@given(gen_inputs())
def test_build_generalized_on_subfields(args):
    F, alpha, s = args
    one = Poly.const(F, 1)
    n = len(alpha)
    if n - 2 * s + 1 <= 1 or n > F.q - 1:
        with pytest.raises(ConstructionError):
            build_generalized(F, alpha, GenSplit(one, one, one, s))
        return
    spec, w, e0 = build_generalized(F, alpha, GenSplit(one, one, one, s))
    assert spec.k == n - 2 * s + 1
    assert (e0 is None) == (s == 1)
    check_witness(spec.code(), w)


def test_build_generalized_rejects_wrong_factorisation():
    F = field(13)
    alpha = F.roots_of_unity(4)
    x, one = Poly.x(F), Poly.const(F, 1)
    with pytest.raises(ConstructionError, match="constant multiple"):
        build_generalized(F, alpha, GenSplit(one, one, one, 1))
    with pytest.raises(ConstructionError, match="share a factor"):
        build_generalized(F, alpha, GenSplit(one, x, x ** 2, 1))


def test_build_ab_checks_degrees_and_coprimality():
    F = field(8)
    a = Poly.linear(F, 6)
    with pytest.raises(ConstructionError, match="deg a"):
        build_ab(F, [0, 1, 2, 3], AbSplit(a, Poly.linear(F, 7) ** 2))
    with pytest.raises(ConstructionError, match="coprime"):
        build_ab(F, [0, 1, 2, 3], AbSplit(a, a.monic()))


REFERENCE_PARAMETERS = [
    (8, "even-q", dict(n=4, s=1), (4, 2, 3)),
    (8, "even-q", dict(n=5, s=1), (5, 3, 3)),
    (8, "even-q", dict(n=6, s=1), (6, 4, 3)),
    (19, "square-3b", dict(N=9, s=1), (9, 5, 5)),
    (81, "square-3a", dict(N=8, s=1), (8, 5, 4)),
    (81, "mult-cosets", dict(n=8, t=1, s=3, variant=7), (16, 10, 7)),
    (81, "mult-cosets", dict(n=8, t=2, s=2, variant=8), (24, 20, 5)),
]


@pytest.mark.parametrize("q,family,params,nkd", REFERENCE_PARAMETERS)
def test_reference_parameters(q, family, params, nkd):
    hc = construct(field(q), family, **params)
    c = hc.cert
    assert (c.n, c.k, c.d, c.hull_dim, c.is_mds) == (*nkd, 1, True)


@pytest.mark.parametrize("q,family,params", [
    (81, "square-1", dict(N=6, s=1)),
    (81, "square-2", dict(N=6, s=1)),
    (25, "square-4", dict(r=1, t=1, s=1)),
    (81, "square-7", dict(t=2, s=2)),
    (81, "square-8", dict(t=1, s=1)),
    (81, "square-9", dict(m0=2, l=1, t=1, s=2)),
    (81, "square-10", dict(l=1, s=1)),
    (81, "square-11", dict(m0=1, l=1, t=1, s=1)),
    (81, "square-12", dict(l=2, s=1)),
    (27, "xn-x", dict(n=3, s=1)),
    (81, "subfield", dict(r=2, s=2)),
    (81, "roots-of-unity", dict(n=10, s=2, variant="even-k")),
    (31, "roots-of-unity", dict(n=15, s=3, variant="odd-k")),
    (81, "additive-cosets", dict(r=2, t=1, s=2)),
    (31, "mult-cosets", dict(n=5, t=1, s=2, variant=5)),
    (25, "mult-cosets", dict(n=6, t=1, s=2, variant=3)),
])
def test_each_family_certifies(q, family, params):
    hc = construct(field(q), family, **params)
    assert hc.cert.hull_dim == 1 and hc.cert.is_mds
    assert hc.k > 1


def test_square_family_points_avoid_zero_for_odd_length():
    F = field(19)
    U = eval_set(F, "3b", N=9)
    assert 0 not in U and len(U) == 9


def test_eval_set_is_deterministic():
    F = field(81)
    assert eval_set(F, "8", t=1) == eval_set(field(81), "8", t=1)


def test_mobius_image_keeps_square_class():
    # lengths |U0| + 1 go through x -> 1/(x - delta); h' must stay in one class
    F = field(81)
    U = eval_set(F, "12", l=2)
    hp = Poly.from_roots(F, U).derivative()
    classes = {F.is_square(hp(u)) for u in U}
    assert len(classes) == 1


def test_preconditions_are_reported():
    F = field(81)
    with pytest.raises(PreconditionError, match="p not"):
        construct(F, "mult-cosets", n=8, t=5, s=1, variant=5, extend=True)
    with pytest.raises(PreconditionError, match="extend"):
        construct(F, "mult-cosets", n=8, t=5, s=1, variant=8)
    with pytest.raises(PreconditionError, match="odd q"):
        construct(field(8), "xn-x", n=4, s=1)
    with pytest.raises(PreconditionError, match="even q"):
        construct(F, "even-q", n=5, s=1)
    with pytest.raises(PreconditionError):
        construct(F, "no-such-family")


def test_dimension_one_is_rejected():
    F = field(8)
    with pytest.raises(PreconditionError):
        construct(F, "even-q", n=4, s=2)
    assert construct(F, "even-q", n=5, s=2).k == 2
    hc = construct(field(27), "xn-x", n=3, s=1)   # [3,2], dual would be [3,1]
    with pytest.raises(PreconditionError, match="dimension"):
        dualize(hc)


def test_dual_keeps_the_hull():
    hc = construct(field(81), "mult-cosets", n=8, t=1, s=3, variant=7)
    d = dualize(hc)
    assert (d.n, d.k) == (16, 6)
    assert d.cert.hull_dim == 1 and d.cert.is_mds
    assert hull(d.code()).same_as(hull(hc.code()))
    assert construct(field(81), "mult-cosets", n=8, t=1, s=3, variant=7, dual=True).spec == d.spec


def test_extend_mode_finds_a_free_point():
    hc = construct(field(81), "mult-cosets", n=8, t=5, s=2, variant=8, extend=True)
    assert (hc.n, hc.k, hc.cert.d) == (48, 44, 5)
    assert hc.info["e_point"] is not None


def test_serialization_roundtrip():
    hc = construct(field(19), "square-3b", N=9, s=1)
    d = hc.to_dict()
    assert set(d) >= {"family", "params", "alpha", "v", "k", "hull_witness"}
    assert d["params"]["q"] == 19
    back = type(hc).from_dict(d)
    assert back.spec == hc.spec and back.hull_witness == hc.hull_witness


def _hprime_classes(F, U):
    squares = {F.mul(y, y) for y in range(1, F.q)}
    return {F.prod(F.sub(a, b) for b in U if b != a) in squares for a in U}


def test_square4_q25_t3_has_no_admissible_evaluation_set():
    """Independent check: no union of four cosets of the 4th roots of unity in
    GF(25) has all prod_{j != i}(a_i - a_j) in one square class, so the
    construction must refuse (r=1, t=3)."""
    F = GF(5, 2)
    U4 = F.roots_of_unity(4)
    cosets, seen = [], set()
    for x in range(1, 25):
        if x not in seen:
            c = [F.mul(x, u) for u in U4]
            cosets.append(c)
            seen.update(c)
    assert len(cosets) == 6
    for sub in itertools.combinations(cosets, 4):
        U = [a for c in sub for a in c]
        assert _hprime_classes(F, U) == {True, False}
    with pytest.raises(ConstructionError, match="square class"):
        construct(F, "square-4", r=1, t=3, s=1)
