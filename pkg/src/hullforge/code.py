"""Exact linear algebra for linear codes over GF(q).

Matrices are 2-D numpy int64 arrays of field indices.  Everything here is
deterministic: pivots are taken in the first nonzero column, topmost row.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from .gf import GF

DEFAULT_BUDGET = 10 ** 8
EXCEEDS_BUDGET = "exceeds-budget"
STRUCTURAL = "structural"


class CertificationError(Exception):
    """A code failed to match the properties claimed for it."""

    def __init__(self, message: str, discrepancy: dict | None = None):
        super().__init__(message)
        self.discrepancy = discrepancy or {}


def default_budget() -> int:
    env = os.environ.get("HULLFORGE_BUDGET")
    return int(float(env)) if env else DEFAULT_BUDGET


# -- matrices -----------------------------------------------------------------

def as_matrix(M, ncols: int | None = None) -> np.ndarray:
    A = np.asarray(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else np.zeros((0, ncols or 0), dtype=np.int64)
    return A


def matmul(F: GF, A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = F.vadd(out, F.vmul(A[:, t:t + 1], B[t:t + 1, :]))
    return out


def rref(F: GF, M) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    R = as_matrix(M).copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = F.vmul(R[r], F.inv(int(R[r, c])))
        col = R[:, c].copy()
        col[r] = 0
        if col.any():
            R = F.vsub(R, F.vmul(col[:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(F: GF, M) -> int:
    return rref(F, M)[1]


def row_basis(F: GF, M) -> np.ndarray:
    R, r, _ = rref(F, M)
    return R[:r]


def kernel(F: GF, M, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : M x^T = 0}."""
    M = as_matrix(M, ncols)
    n = M.shape[1] if M.size or ncols is None else ncols
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, r, pivots = rref(F, M)
    free = [c for c in range(n) if c not in pivots]
    K = np.zeros((len(free), n), dtype=np.int64)
    for i, fc in enumerate(free):
        K[i, fc] = 1
        for j, pc in enumerate(pivots):
            K[i, pc] = F.neg(int(R[j, fc]))
    return K


def same_row_space(F: GF, A, B) -> bool:
    A, B = as_matrix(A), as_matrix(B)
    ra, rb = rank(F, A), rank(F, B)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(F, np.vstack([A, B])) == ra


# -- codes --------------------------------------------------------------------

class LinearCode:
    """A linear code given by a generator matrix; the stored basis is its RREF."""

    def __init__(self, field: GF, gen, n: int | None = None):
        G = as_matrix(gen, n)
        if n is None:
            n = G.shape[1]
        if G.shape[1] != n:
            raise ValueError("generator width does not match n")
        R, r, piv = rref(field, G) if G.shape[0] else (G, 0, [])
        self.field = field
        self.n = n
        self.gen = R[:r] if r else np.zeros((0, n), dtype=np.int64)
        self.pivots = piv
        self.input_rows = G.shape[0]

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @property
    def rank_deficient(self) -> bool:
        return self.input_rows != self.k

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over {self.field})"

    def contains(self, word) -> bool:
        w = np.asarray(word, dtype=np.int64).reshape(1, -1)
        return rank(self.field, np.vstack([self.gen, w])) == self.k

    def same_as(self, other: "LinearCode") -> bool:
        return self.n == other.n and same_row_space(self.field, self.gen, other.gen)


def dual(C: LinearCode) -> LinearCode:
    return LinearCode(C.field, kernel(C.field, C.gen, C.n), C.n)


def intersection(C1: LinearCode, C2: LinearCode) -> LinearCode:
    if C1.n != C2.n:
        raise ValueError(f"length mismatch: {C1.n} vs {C2.n}")
    F = C1.field
    if C1.k == 0 or C2.k == 0:
        return LinearCode(F, np.zeros((0, C1.n), dtype=np.int64), C1.n)
    # (x, y) with x G1 + y G2 = 0 gives x G1 in both codes
    S = np.vstack([C1.gen, C2.gen])
    K = kernel(F, S.T)
    if K.shape[0] == 0:
        return LinearCode(F, np.zeros((0, C1.n), dtype=np.int64), C1.n)
    return LinearCode(F, matmul(F, K[:, :C1.k], C1.gen), C1.n)


def hull_dim(C: LinearCode) -> int:
    """k - rank(G G^T)."""
    if C.k == 0:
        return 0
    return C.k - rank(C.field, matmul(C.field, C.gen, C.gen.T))


def hull_dim_intersection(C: LinearCode) -> int:
    return intersection(C, dual(C)).k


def hull(C: LinearCode) -> LinearCode:
    return intersection(C, dual(C))


# -- minimum distance ---------------------------------------------------------

def _colex(i: int, n: int) -> np.ndarray:
    """All i-subsets of range(n) as rows, in colex order."""
    prev = np.zeros((1, 0), dtype=np.int64)
    for size in range(1, i + 1):
        parts = []
        for c in range(size - 1, n):
            head = prev[:comb(c, size - 1)]
            parts.append(np.hstack([head, np.full((head.shape[0], 1), c, dtype=np.int64)]))
        prev = np.vstack(parts) if parts else np.zeros((0, size), dtype=np.int64)
    return prev


def _colex_rank(S: np.ndarray) -> np.ndarray:
    if S.shape[1] == 0:
        return np.zeros(S.shape[0], dtype=np.int64)
    hi = int(S.max()) + 1 if S.size else 1
    binom = np.array([[comb(c, j) for j in range(S.shape[1] + 1)] for c in range(hi)], dtype=np.int64)
    out = np.zeros(S.shape[0], dtype=np.int64)
    for j in range(S.shape[1]):
        out += binom[S[:, j], j + 1]
    return out


def minors_cost(n: int, k: int) -> int:
    """Field operations spent by the all-minors MDS check."""
    r = n - k
    return sum(i * comb(k, i) * comb(r, i) for i in range(1, min(k, r) + 1))


def enumeration_cost(q: int, n: int, k: int) -> int:
    return q ** k * k * n


def all_minors_nonzero(F: GF, A: np.ndarray, chunk: int = 1 << 21) -> bool:
    """True iff every square submatrix of A is nonsingular.

    Minors of size i are obtained from those of size i-1 by Laplace expansion
    along the first row, so each minor costs i multiplications.
    """
    A = as_matrix(A)
    k, r = A.shape
    if k == 0 or r == 0:
        return True
    if np.any(A == 0):
        return False
    prev = A  # minors of size 1, indexed [row-colex, col-colex]
    for i in range(2, min(k, r) + 1):
        rows = _colex(i, k)
        cols = _colex(i, r)
        first = rows[:, 0]
        rest = _colex_rank(rows[:, 1:])
        drops = [_colex_rank(np.delete(cols, j, axis=1)) for j in range(i)]
        cur = np.empty((rows.shape[0], cols.shape[0]), dtype=np.int64)
        step = max(1, chunk // max(cols.shape[0], 1))
        for lo in range(0, rows.shape[0], step):
            sl = slice(lo, lo + step)
            acc = None
            for j in range(i):
                term = F.vmul(A[first[sl]][:, cols[:, j]], prev[rest[sl]][:, drops[j]])
                if j % 2:
                    term = F.vneg(term)
                acc = term if acc is None else F.vadd(acc, term)
            if np.any(acc == 0):
                return False
            cur[sl] = acc
        prev = cur
    return True


def is_mds_by_minors(C: LinearCode) -> bool:
    """Every k columns of the generator independent, via minors of the systematic part."""
    if C.k == 0:
        return True
    nonpiv = [c for c in range(C.n) if c not in C.pivots]
    return all_minors_nonzero(C.field, C.gen[:, nonpiv])


def min_distance_enum(C: LinearCode, chunk: int = 1 << 20) -> int:
    """Minimum weight by enumerating all q^k - 1 nonzero codewords."""
    F, k, n, q = C.field, C.k, C.n, C.field.q
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    total = q ** k
    best = n
    step = max(1, chunk // max(n, 1))
    powers = q ** np.arange(k, dtype=np.int64)
    for lo in range(1, total, step):
        idx = np.arange(lo, min(lo + step, total), dtype=np.int64)
        msgs = (idx[:, None] // powers[None, :]) % q
        cw = np.zeros((idx.size, n), dtype=np.int64)
        for j in range(k):
            cw = F.vadd(cw, F.vmul(msgs[:, j:j + 1], C.gen[j][None, :]))
        w = int(np.count_nonzero(cw, axis=1).min())
        best = min(best, w)
        if best == 1:
            break
    return best


@dataclass
class DistanceResult:
    d: int | str
    is_mds: bool | None
    method: str


def distance_report(C: LinearCode, budget: int | None = None, method: str | None = None) -> DistanceResult:
    """Exact distance when affordable.

    ``method`` forces ``"enumerate"`` or ``"minors"``; by default the cheaper
    path within budget is used.
    """
    budget = default_budget() if budget is None else budget
    n, k, q = C.n, C.k, C.field.q
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    ce = enumeration_cost(q, n, k)
    cm = minors_cost(n, k)
    if method is None:
        options = [(c, m) for c, m in ((ce, "enumerate"), (cm, "minors")) if c <= budget]
        if not options:
            return DistanceResult(EXCEEDS_BUDGET, None, "over budget")
        method = min(options)[1]
    if method == "enumerate":
        d = min_distance_enum(C)
        return DistanceResult(d, d == n - k + 1, f"enumerated {q}^{k} codewords")
    if method == "minors":
        if is_mds_by_minors(C):
            return DistanceResult(n - k + 1, True, "all k-column minors nonzero")
        if ce <= budget:
            d = min_distance_enum(C)
            return DistanceResult(d, False, f"singular k-column minor; enumerated {q}^{k} codewords")
        return DistanceResult(EXCEEDS_BUDGET, False, "singular k-column minor; exact d over budget")
    raise ValueError(f"unknown distance method {method!r}")


def min_distance(C: LinearCode, budget: int | None = None) -> int | str:
    """Exact minimum distance, or ``EXCEEDS_BUDGET``."""
    return distance_report(C, budget).d


# -- certification ------------------------------------------------------------

@dataclass
class Certificate:
    n: int
    k: int
    d: int | str
    hull_dim: int
    is_mds: bool | None
    method_notes: str = ""
    extra: dict = dc_field(default_factory=dict, repr=False)

    @property
    def exact(self) -> bool:
        return isinstance(self.d, int)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "hull_dim": self.hull_dim,
                "is_mds": self.is_mds, "method_notes": self.method_notes}

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(d["n"], d["k"], d["d"], d["hull_dim"], d["is_mds"], d.get("method_notes", ""))


def _witness_ok(C: LinearCode, witness) -> bool:
    alpha = [int(a) for a in witness.alpha]
    v = [int(x) for x in witness.v]
    if len(set(alpha)) != len(alpha) or any(x == 0 for x in v) or len(alpha) != C.n:
        return False
    return witness.k == C.k and same_row_space(C.field, C.gen, witness.generator())


def certify(C: LinearCode, claim=None, witness=None, budget: int | None = None,
            require_exact: bool = False) -> Certificate:
    """Independently establish hull dimension and distance, then check a claim.

    ``claim`` is ``(n, k, hull_dim, mds)``; any entry may be None.
    ``witness`` is an object with ``alpha``, ``v``, ``k`` and ``generator()``
    (a GRS description); it enables the structural MDS verdict when the
    exact check is over budget.
    """
    notes = []
    h1 = hull_dim(C)
    h2 = hull_dim_intersection(C)
    if h1 != h2:
        raise CertificationError(f"hull computations disagree: gram {h1}, intersection {h2}",
                                 {"hull_gram": h1, "hull_intersection": h2})
    notes.append("hull: k-rank(GG^T) and dim(C & C^perp) agree")
    if C.rank_deficient:
        notes.append(f"input had {C.input_rows} rows, rank {C.k}; verified row space")
    if C.k == 0:
        dr = DistanceResult(EXCEEDS_BUDGET, None, "zero code")
    else:
        dr = distance_report(C, budget)
    d, is_mds = dr.d, dr.is_mds
    notes.append(f"distance: {dr.method}")
    if d == EXCEEDS_BUDGET and is_mds is None and witness is not None:
        if _witness_ok(C, witness):
            d, is_mds = STRUCTURAL, True
            notes.append("MDS: GRS witness (distinct points, nonzero multipliers, same row space)")
        else:
            notes.append("GRS witness rejected")
    cert = Certificate(C.n, C.k, d, h1, is_mds, "; ".join(notes))
    if claim is not None:
        n, k, hd, mds = claim
        bad = {}
        if n is not None and n != C.n:
            bad["n"] = (n, C.n)
        if k is not None and k != C.k:
            bad["k"] = (k, C.k)
        if hd is not None and hd != h1:
            bad["hull_dim"] = (hd, h1)
        if mds is not None and is_mds is not None and bool(mds) != is_mds:
            bad["is_mds"] = (mds, is_mds)
        if mds and is_mds is None:
            bad["is_mds"] = (mds, "undetermined")
        if require_exact and not cert.exact:
            bad["d"] = ("exact", d)
        if bad:
            raise CertificationError(f"certification failed: {bad}", bad)
    return cert
