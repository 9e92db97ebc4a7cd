import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hullforge.code import LinearCode, dual
from hullforge.grs import GrsError, GrsSpec, grs_dual

from conftest import field


@st.composite
def grs_specs(draw, qs=(7, 8, 9, 13, 16, 25, 27)):
    q = draw(st.sampled_from(qs))
    F = field(q)
    n = draw(st.integers(2, min(q, 12)))
    alpha = draw(st.permutations(list(range(q))))[:n]
    v = draw(st.lists(st.integers(1, q - 1), min_size=n, max_size=n))
    k = draw(st.integers(1, n - 1))
    return GrsSpec(F, alpha, v, k)


@settings(max_examples=150, deadline=None)
@given(grs_specs())
def test_dual_formula_matches_kernel(spec):
    D = grs_dual(spec)
    assert D.k == spec.n - spec.k
    assert D.code().same_as(dual(spec.code()))


@settings(max_examples=50, deadline=None)
@given(grs_specs())
def test_serialization_roundtrip(spec):
    assert GrsSpec.from_dict(spec.to_dict()) == spec


def test_generator_rows_are_power_evaluations():
    F = field(7)
    spec = GrsSpec(F, [1, 2, 3], [1, 1, 2], 2)
    G = spec.generator()
    assert G.tolist() == [[1, 1, 2], [1, 2, 6]]


@pytest.mark.parametrize("bad", [
    dict(alpha=[1, 1, 2], v=[1, 1, 1], k=1),
    dict(alpha=[1, 2, 3], v=[1, 0, 1], k=1),
    dict(alpha=[1, 2, 3], v=[1, 1, 1], k=4),
    dict(alpha=[1, 2], v=[1, 1, 1], k=1),
])
def test_invalid_specs(bad):
    with pytest.raises(GrsError):
        GrsSpec(field(7), **bad)


def test_full_space_has_no_grs_dual():
    with pytest.raises(GrsError):
        grs_dual(GrsSpec(field(7), [1, 2], [1, 1], 2))
