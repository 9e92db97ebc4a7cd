import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hullforge.code import (CertificationError, LinearCode, certify, distance_report, dual, hull,
                            hull_dim, hull_dim_intersection, kernel, matmul, min_distance,
                            min_distance_enum, rank, rref, same_row_space)
from hullforge.grs import GrsSpec

from conftest import field


def random_matrix(F, k, n, rng):
    return rng.integers(0, F.q, size=(k, n))


def test_rref_basics():
    F = field(7)
    M = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    R, r, piv = rref(F, M)
    assert r == 2 and piv == [0, 1]
    assert rank(F, M) == 2
    assert same_row_space(F, M, R[:r])


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([3, 4, 7, 9, 16, 27]), st.integers(1, 6), st.integers(1, 9), st.integers(0, 2**31))
def test_kernel_is_orthogonal_complement(q, k, n, seed):
    F = field(q)
    M = random_matrix(F, k, n, np.random.default_rng(seed))
    K = kernel(F, M)
    assert K.shape[0] == n - rank(F, M)
    if K.size:
        assert not matmul(F, M, K.T).any()


def test_identity_is_lcd():
    F = field(7)
    C = LinearCode(F, np.eye(3, 5, dtype=np.int64))
    assert hull_dim(C) == 0 and hull_dim_intersection(C) == 0


def test_self_dual_hull():
    # (1,0,1,1) and (0,1,1,2) span a self-dual ternary [4,2] code
    F = field(3)
    G = np.array([[1, 0, 1, 1], [0, 1, 1, 2]])
    C = LinearCode(F, G)
    assert hull_dim(C) == 2
    assert hull(C).same_as(C)
    assert dual(C).same_as(C)


def test_rank_deficient_input_kept_on_row_space():
    F = field(5)
    C = LinearCode(F, np.array([[1, 2, 3, 4], [2, 4, 1, 3]]))
    assert C.k == 1 and C.rank_deficient
    cert = certify(C)
    assert "rank 1" in cert.method_notes


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(1, 4), st.integers(0, 2**31))
def test_minors_agree_with_enumeration(q, k, seed):
    F = field(q)
    rng = np.random.default_rng(seed)
    n = int(rng.integers(k, k + 5))
    C = LinearCode(F, random_matrix(F, k, n, rng))
    if C.k == 0:
        return
    d_enum = min_distance_enum(C)
    by_minors = distance_report(C, method="minors")
    assert by_minors.is_mds == (d_enum == C.n - C.k + 1)
    if by_minors.is_mds:
        assert by_minors.d == d_enum
    assert distance_report(C, method="enumerate").d == d_enum


def test_grs_codes_are_mds_by_both_routes():
    F = field(13)
    spec = GrsSpec(F, [1, 2, 3, 4, 5, 6, 7], [1, 3, 5, 7, 9, 11, 2], 3)
    C = spec.code()
    assert min_distance_enum(C) == 5
    assert distance_report(C, method="minors").d == 5


def test_budget_forces_structural_path(monkeypatch):
    F = field(81)
    spec = GrsSpec(F, range(1, 21), [1] * 20, 10)
    C = spec.code()
    monkeypatch.setenv("HULLFORGE_BUDGET", "1000")
    assert min_distance(C) == "exceeds-budget"
    cert = certify(C, witness=spec)
    assert cert.d == "structural" and cert.is_mds
    monkeypatch.delenv("HULLFORGE_BUDGET")
    assert min_distance(C) == 11


def test_certify_reports_claim_mismatch():
    F = field(7)
    C = LinearCode(F, np.eye(2, 4, dtype=np.int64))
    with pytest.raises(CertificationError) as err:
        certify(C, claim=(4, 2, 1, True))
    assert "hull_dim" in err.value.discrepancy


def test_certify_rejects_bad_witness():
    F = field(81)
    spec = GrsSpec(F, range(1, 21), [1] * 20, 10)
    other = GrsSpec(F, range(1, 21), [2] + [1] * 19, 10)
    cert = certify(spec.code(), witness=other, budget=10)
    assert cert.is_mds is None and "rejected" in cert.method_notes
