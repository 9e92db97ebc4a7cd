"""MDS GRS codes with one-dimensional Euclidean hull.

Every family is lowered to concrete data: evaluation points ``alpha``,
multipliers ``v`` and dimension ``k``, plus an explicit vector spanning the
hull.  Two engines do the work:

``build_ab``
    points ``alpha`` and coprime polynomials ``a``, ``b`` with
    ``deg a + deg b = n - 2`` such that ``(a*b*h')(alpha_i)`` are nonzero
    squares.  With ``z_i`` a square root of that value, ``v_i = a_i / z_i``
    and ``k = n - 1 - deg a``; the hull is spanned by ``z_i / h'(alpha_i)``.

``build_generalized``
    points ``alpha`` with ``h' = c * f^2 * g1 * g2`` (``gcd(g1, g2) = 1``) and
    an integer ``s``.  With ``e = (x - e0)^(s-1)`` for a free point ``e0``,
    ``v_i = e_i / (f_i * g2_i)`` and ``k = n - 2s + 1 - deg g1``; the hull is
    spanned by ``e_i / f_i``.  No square roots are needed.

Here ``h`` is the monic polynomial vanishing on ``alpha`` and ``h'`` its
derivative.  All hypotheses are re-checked numerically and every returned
code is certified before it is handed out.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .code import Certificate, CertificationError, LinearCode, certify, hull, matmul
from .gf import GF
from .grs import GrsSpec, grs_dual
from .poly import Poly


class ConstructionError(ValueError):
    """A construction's hypotheses do not hold for the given parameters."""

    def __init__(self, message: str, family: str | None = None):
        super().__init__(f"{family}: {message}" if family else message)
        self.family = family


class PreconditionError(ConstructionError):
    """Parameters fall outside a family's stated side conditions."""


# -- data ---------------------------------------------------------------------

@dataclass
class AbSplit:
    a: Poly
    b: Poly
    alpha_aux: int | None = None
    beta_aux: int | None = None


@dataclass
class GenSplit:
    f: Poly
    g1: Poly
    g2: Poly
    s: int
    e_point: int | None = None


@dataclass
class HullCode:
    spec: GrsSpec
    family: str
    params: dict
    claimed: tuple
    hull_witness: tuple | None = None
    cert: Certificate | None = None
    info: dict = dc_field(default_factory=dict)

    @property
    def field(self) -> GF:
        return self.spec.field

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def k(self) -> int:
        return self.spec.k

    def code(self) -> LinearCode:
        return self.spec.code()

    def generator(self) -> np.ndarray:
        return self.spec.generator()

    def to_dict(self) -> dict:
        F = self.field
        return {
            "field": F.descriptor(),
            "family": self.family,
            "params": {"q": F.q, **self.params},
            "alpha": list(self.spec.alpha),
            "v": list(self.spec.v),
            "k": self.spec.k,
            "claimed": list(self.claimed),
            "hull_witness": list(self.hull_witness) if self.hull_witness is not None else None,
            "certificate": self.cert.to_dict() if self.cert else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "HullCode":
        F = GF.from_descriptor(d["field"])
        spec = GrsSpec(F, d["alpha"], d["v"], int(d["k"]))
        params = {k: v for k, v in d.get("params", {}).items() if k != "q"}
        w = d.get("hull_witness")
        cert = Certificate.from_dict(d["certificate"]) if d.get("certificate") else None
        return cls(spec, d.get("family", "unknown"), params, tuple(d.get("claimed", (spec.n, spec.k))),
                   tuple(w) if w is not None else None, cert)


# -- shared helpers -----------------------------------------------------------

def find_free_point(F: GF, forbidden) -> int:
    """Smallest field element not in ``forbidden``."""
    bad = {int(a) for a in forbidden}
    for a in range(F.q):
        if a not in bad:
            return a
    raise ConstructionError("no free point: every field element is forbidden")


def _free_points(F: GF, forbidden, count: int, family: str) -> list[int]:
    bad = {int(a) for a in forbidden}
    out = [a for a in range(F.q) if a not in bad][:count]
    if len(out) < count:
        raise ConstructionError(f"need {count} auxiliary points outside the evaluation set", family)
    return out


def _require(cond: bool, message: str, family: str):
    if not cond:
        raise PreconditionError(message, family)


def _odd_q(F: GF, family: str):
    _require(F.p != 2 and F.q > 5, f"needs odd q > 5, got q = {F.q}", family)


def _x_pow(F: GF, e: int) -> Poly:
    return Poly.monomial(F, e)


def _one(F: GF) -> Poly:
    return Poly.const(F, 1)


def check_witness(C: LinearCode, w) -> None:
    """w lies in C, is self-orthogonal, and spans the hull."""
    F = C.field
    w = np.asarray(w, dtype=np.int64)
    if not w.any():
        raise CertificationError("hull witness is zero")
    if not C.contains(w):
        raise CertificationError("hull witness is not a codeword")
    if int(matmul(F, w[None, :], w[:, None])[0, 0]) != 0:
        raise CertificationError("hull witness is not self-orthogonal")
    H = hull(C)
    if H.k != 1 or not H.contains(w):
        raise CertificationError(f"hull has dimension {H.k} and does not match the witness")


def _certify(hc: HullCode, budget=None) -> HullCode:
    C = hc.code()
    cert = certify(C, claim=(hc.claimed[0], hc.claimed[1], 1, True), witness=hc.spec, budget=budget)
    if hc.hull_witness is not None:
        check_witness(C, hc.hull_witness)
    hc.cert = cert
    return hc


# -- engines ------------------------------------------------------------------

def build_ab(F: GF, alpha, split: AbSplit, flips=()) -> tuple[GrsSpec, tuple]:
    """GRS code with k = n - 1 - deg a; returns (spec, hull witness).

    ``flips`` lists positions where the other square root is used.
    """
    alpha = [int(x) for x in alpha]
    n = len(alpha)
    a, b = split.a, split.b
    if len(set(alpha)) != n:
        raise ConstructionError("evaluation points are not distinct")
    if a.degree + b.degree != n - 2:
        raise ConstructionError(f"deg a + deg b = {a.degree + b.degree}, expected {n - 2}")
    if a.gcd(b).degree != 0:
        raise ConstructionError("a and b are not coprime")
    h = Poly.from_roots(F, alpha)
    hp = h.derivative()
    flips = {int(i) for i in flips}
    v, w = [], []
    for i, x in enumerate(alpha):
        ax, bx, hx = a(x), b(x), hp(x)
        if ax == 0 or bx == 0:
            raise ConstructionError(f"a or b vanishes at evaluation point {x}")
        val = F.mul(F.mul(ax, bx), hx)
        if val == 0 or not F.is_square(val):
            raise ConstructionError(f"(a*b*h')({x}) = {val} is not a nonzero square")
        z = F.sqrt(val)
        if i in flips:
            z = F.neg(z)
        v.append(F.div(ax, z))
        w.append(F.div(z, hx))
    k = n - 1 - a.degree
    if k < 1:
        raise ConstructionError(f"dimension {k} < 1")
    return GrsSpec(F, alpha, v, k), tuple(w)


def build_generalized(F: GF, alpha, split: GenSplit, extend: bool = False) -> tuple[GrsSpec, tuple, int | None]:
    """GRS code with k = n - 2s + 1 - deg g1; returns (spec, hull witness, e-point)."""
    alpha = [int(x) for x in alpha]
    n = len(alpha)
    f, g1, g2, s = split.f, split.g1, split.g2, split.s
    h = Poly.from_roots(F, alpha)
    if len(set(alpha)) != n or not h.is_squarefree_on(alpha):
        raise ConstructionError("h is not squarefree on the evaluation set")
    hp = h.derivative()
    quot, rem = divmod(hp, f * f * g1 * g2)
    if not rem.is_zero() or quot.degree != 0:
        raise ConstructionError("h' is not a constant multiple of f^2 g1 g2")
    if g1.gcd(g2).degree != 0:
        raise ConstructionError("g1 and g2 share a factor")
    if not extend and n + g1.degree + g2.degree > F.q - 1:
        raise ConstructionError(f"n + deg g1 + deg g2 = {n + g1.degree + g2.degree} exceeds q - 1")
    smax = (n - g1.degree - g2.degree) // 2
    if not 1 <= s <= smax:
        raise ConstructionError(f"s = {s} outside 1..{smax}")
    k = n - 2 * s + 1 - g1.degree
    if k <= 1:
        raise ConstructionError(f"dimension {k} <= 1")
    e_point = None
    e = _one(F)
    if s >= 2:
        forbidden = set(alpha) | set(g1.root_set()) | set(g2.root_set())
        e_point = split.e_point if split.e_point is not None else find_free_point(F, forbidden)
        if e_point in forbidden:
            raise ConstructionError(f"e-point {e_point} is not free")
        e = Poly.linear(F, e_point) ** (s - 1)
    v, w = [], []
    for x in alpha:
        ex, fx, gx = e(x), f(x), g2(x)
        v.append(F.div(ex, F.mul(fx, gx)))
        w.append(F.div(ex, fx))
    return GrsSpec(F, alpha, v, k), tuple(w), e_point


# -- q even -------------------------------------------------------------------

def construct_even_q(F: GF, n: int, s: int, certify_now: bool = True, budget=None) -> HullCode:
    fam = "even-q"
    _require(F.p == 2 and F.q > 4, f"needs even q > 4, got q = {F.q}", fam)
    _require(4 <= n <= F.q - 2, f"n = {n} outside 4..q-2", fam)
    _require(1 <= s <= n - 3, f"s = {s} outside 1..n-3", fam)
    alpha = list(range(n))
    al, be = n, n + 1
    split = AbSplit(Poly.linear(F, al) ** s, Poly.linear(F, be) ** (n - 2 - s), al, be)
    spec, w = build_ab(F, alpha, split)
    hc = HullCode(spec, fam, {"n": n, "s": s}, (n, n - s - 1), w,
                  info={"alpha_aux": al, "beta_aux": be, "split": split})
    return _certify(hc, budget) if certify_now else hc


# -- q odd, h' values in one square class -------------------------------------

SQUARE_FAMILIES = ("1", "2", "3a", "3b", "4", "5", "6", "7", "8", "9", "10", "11", "12")


def _span(F: GF, scalars, basis) -> list[int]:
    out = {0}
    for b in basis:
        out = {F.add(x, F.mul(c, b)) for x in out for c in scalars}
    return sorted(out)


def _subspace(F: GF, scalars, dim: int) -> list[int]:
    """The span over the given subfield of 1, g, ..., g^(dim-1)."""
    return _span(F, scalars, [F.exp(i) for i in range(dim)])


def _with_infinity_image(F: GF, U0) -> tuple[list[int], int]:
    """Image of U0 + {infinity} under x -> 1/(x - delta), delta the smallest point outside U0."""
    delta = find_free_point(F, U0)
    return sorted([F.inv(F.sub(u, delta)) for u in U0] + [0]), delta


def _hprime_values(F: GF, U) -> list[int]:
    hp = Poly.from_roots(F, U).derivative()
    return [hp(u) for u in U]


def _one_class(F: GF, vals) -> bool:
    sq = [F.is_square(x) for x in vals]
    return all(x != 0 for x in vals) and (all(sq) or not any(sq))


def _perfect_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _square_family_check(F: GF, family: str, params: dict) -> int:
    """Validate side conditions; return the length N."""
    fam = f"square-{family}"
    if family not in SQUARE_FAMILIES:
        raise PreconditionError(f"unknown square family {family!r}")
    _odd_q(F, fam)
    p, m, q = F.p, F.m, F.q
    if family in ("1", "2", "3a", "3b"):
        N = int(params["N"])
        if family in ("1", "2"):
            _require(N % 2 == 0, "N must be even", fam)
            _require(N >= 2 and (q - 1) % (N - 1) == 0, "(N-1) must divide q-1", fam)
            if family == "1":
                _require(N % p == 0, "p must divide N", fam)
            else:
                _require(m % 2 == 0, "q must be a square", fam)
        else:
            _require(N >= 1 and ((q - 1) // 2) % N == 0, "N must divide (q-1)/2", fam)
            _require((N % 2 == 0) == (family == "3a"), "N parity does not match the sub-case", fam)
    elif family in ("4", "5", "6"):
        r, t = int(params["r"]), int(params["t"])
        _require(1 <= r < m, "r outside 1..m-1", fam)
        if family == "6":
            _require((q - 1) % (p ** r - 1) == 0, "p^r - 1 must divide q - 1", fam)
            n0 = (q - 1) // (p ** r - 1)
            _require(m % 2 == 0 and (m // 2) % r == 0, "r must divide m/2", fam)
            _require(1 <= t <= p ** r - 2, "t outside 1..p^r-2", fam)
        else:
            _require((q - 1) % (p ** r + 1) == 0, "p^r + 1 must divide q - 1", fam)
            n0 = (q - 1) // (p ** r + 1)
            num, den = n0 * (p ** r + 1), 2 * (p ** r - 1)
            _require(num % den == 0, "n(p^r+1)/(2(p^r-1)) is not an integer", fam)
            parity = (num // den) % 2
            _require(parity == (1 if family == "4" else 0),
                     "n(p^r+1)/(2(p^r-1)) has the wrong parity", fam)
            if family == "4":
                _require(t % 2 == 1, "t must be odd", fam)
            _require(1 <= t <= (q - 2) // n0 - 1, "t outside 1..floor((q-2)/n)-1", fam)
        _require(_perfect_square(n0), f"n = {n0} is not a perfect square", fam)
        _require((t + 1) <= (q - 1) // n0, "not enough cosets", fam)
        N = (t + 1) * n0
    elif family in ("7", "8"):
        _require(m % 2 == 0, "q must be a square", fam)
        q0 = p ** (m // 2)
        t = int(params["t"])
        _require(1 <= t < q0, "t outside 1..q0-1", fam)
        _require(t % 2 == (0 if family == "7" else 1), "t has the wrong parity", fam)
        N = q0 * t + (1 if family == "8" else 0)
    elif family in ("9", "11"):
        m0, l, t = int(params["m0"]), int(params["l"]), int(params["t"])
        _require(m % 2 == 0, "m must be even", fam)
        _require(m0 >= 1 and (m // 2) % m0 == 0, "m0 must divide m/2", fam)
        r = p ** m0
        _require(0 <= l < m // m0, "l outside 0..m/m0-1", fam)
        if family == "9":
            _require(1 <= t <= min((r - 1) // 2, (q - 2) // (2 * r ** l)), "t out of range", fam)
            N = 2 * t * r ** l
        else:
            _require(0 <= t <= min((r - 1) // 2, (q - 2 - r ** l) // (2 * r ** l)), "t out of range", fam)
            N = (2 * t + 1) * r ** l + 1
    else:  # 10, 12
        l = int(params["l"])
        _require(q % 4 == 1, "needs q = 1 mod 4", fam)
        _require(0 < l < m, "l outside 1..m-1", fam)
        N = 2 * p ** l if family == "10" else p ** l + 1
    _require(N <= q - 2, f"N = {N} exceeds q - 2", fam)
    return N


def _eval_set_info(F: GF, family: str, params: dict) -> tuple[list[int], dict]:
    N = _square_family_check(F, family, params)
    fam = f"square-{family}"
    p, m, q = F.p, F.m, F.q
    info: dict = {}
    if family in ("1", "2"):
        U = sorted([0] + F.roots_of_unity(N - 1))
    elif family in ("3a", "3b"):
        U = F.roots_of_unity(N)
    elif family in ("4", "5", "6"):
        r, t = int(params["r"]), int(params["t"])
        n0 = (q - 1) // (p ** r - 1 if family == "6" else p ** r + 1)
        Un = F.roots_of_unity(n0)
        leaders, seen = [], set(Un)
        for x in range(1, q):
            if x not in seen:
                leaders.append(x)
                seen.update(F.mul(x, u) for u in Un)
        U = None
        for reps in itertools.islice(itertools.combinations(leaders, t), 20000):
            cand = sorted(set(Un).union(F.mul(b, u) for b in reps for u in Un))
            vals = _hprime_values(F, cand)
            if N % 2:
                vals = [F.mul(a, x) for a, x in zip(cand, vals)]
            if _one_class(F, vals):
                U, info["coset_reps"] = cand, list(reps)
                break
        if U is None:
            raise ConstructionError("no choice of coset representatives gives h' in one square class", fam)
    elif family in ("7", "8"):
        q0_field = F.subfield(m // 2)
        t = int(params["t"])
        beta = find_free_point(F, q0_field)
        U0 = sorted({F.add(F.mul(ak, beta), aj) for ak in q0_field[:t] for aj in q0_field})
        info["beta"] = beta
        if family == "8":
            U, info["delta"] = _with_infinity_image(F, U0)
        else:
            U = U0
    else:
        if family in ("9", "11"):
            m0, l, t = int(params["m0"]), int(params["l"]), int(params["t"])
            Fr = F.subfield(m0)
            ncos = 2 * t if family == "9" else 2 * t + 1
        else:
            l = int(params["l"])
            Fr = F.subfield(1)
            ncos = 2 if family == "10" else 1
        H = _subspace(F, Fr, l)
        beta = find_free_point(F, H)
        U0 = sorted({F.add(h, F.mul(a, beta)) for a in Fr[:ncos] for h in H})
        info["beta"] = beta
        if family in ("11", "12"):
            U, info["delta"] = _with_infinity_image(F, U0)
        else:
            U = U0
    if len(U) != N:  # pragma: no cover - guards the set algebra above
        raise ConstructionError(f"evaluation set has {len(U)} points, expected {N}", fam)
    return U, info


def eval_set(F: GF, family: str, **params) -> list[int]:
    """Evaluation set of a square family, in canonical order."""
    return _eval_set_info(F, family, params)[0]


def square_family_range(N: int) -> range:
    """Admissible s for length N."""
    return range(1, N // 2 - 1) if N % 2 == 0 else range(0, (N + 1) // 2 - 2)


def square_family_dimension(N: int, s: int) -> int:
    return N - 2 * s - 1 if N % 2 == 0 else N - 2 * s - 2


def construct_square_family(F: GF, family: str, s: int, certify_now: bool = True, budget=None,
                            **params) -> HullCode:
    fam = f"square-{family}"
    U, info = _eval_set_info(F, family, params)
    N = len(U)
    _require(s in square_family_range(N), f"s = {s} outside {square_family_range(N)}", fam)
    K = square_family_dimension(N, s)
    if N % 2 == 0:
        al, be = _free_points(F, U, 2, fam)
        a = Poly.linear(F, al) ** (2 * s)
        b = Poly.linear(F, be) ** (N - 2 - 2 * s)
    else:
        _require(0 not in U, "odd N needs 0 outside the evaluation set", fam)
        al, be = _free_points(F, set(U) | {0}, 2, fam)
        a = Poly.x(F) * Poly.linear(F, al) ** (2 * s)
        b = Poly.linear(F, be) ** (N - 3 - 2 * s)
    hp = Poly.from_roots(F, U).derivative()
    vals = [F.mul(F.mul(a(x), b(x)), hp(x)) for x in U]
    if not _one_class(F, vals):
        raise ConstructionError("(a*b*h') takes both square classes on the evaluation set", fam)
    lam = 1 if F.is_square(vals[0]) else F.smallest_nonsquare()
    split = AbSplit(a.scale(lam), b, al, be)
    spec, w = build_ab(F, U, split)
    info.update(alpha_aux=al, beta_aux=be, scale=lam, split=split)
    hc = HullCode(spec, fam, {**params, "s": s}, (N, K), w, info=info)
    return _certify(hc, budget) if certify_now else hc


# -- generalized factorisation families ---------------------------------------

def _generalized(F, fam, alpha, split, claimed, params, info, certify_now, budget, extend=False):
    spec, w, e0 = build_generalized(F, alpha, split, extend=extend)
    if spec.k != claimed[1]:
        raise ConstructionError(f"dimension {spec.k} differs from the stated {claimed[1]}", fam)
    info.update(e_point=e0, split=split)
    hc = HullCode(spec, fam, params, claimed, w, info=info)
    return _certify(hc, budget) if certify_now else hc


def construct_xn_minus_x(F: GF, n: int, s: int, certify_now: bool = True, budget=None) -> HullCode:
    fam = "xn-x"
    _odd_q(F, fam)
    q, p = F.q, F.p
    _require(2 <= n <= q - 1, f"n = {n} outside 2..q-1", fam)
    _require(n % p == 0, "p must divide n", fam)
    _require((q - 1) % (n - 1) == 0, "(n-1) must divide q-1", fam)
    _require(1 <= s <= n // 2, f"s = {s} outside 1..floor(n/2)", fam)
    _require(n - 2 * s + 1 > 1, "dimension would be 1", fam)
    U = sorted([0] + F.roots_of_unity(n - 1))
    h = Poly.from_roots(F, U)
    if h != Poly.monomial(F, n) - Poly.x(F):  # pragma: no cover
        raise ConstructionError("evaluation set is not the root set of x^n - x", fam)
    one = _one(F)
    return _generalized(F, fam, U, GenSplit(one, one, one, s), (n, n - 2 * s + 1),
                        {"n": n, "s": s}, {}, certify_now, budget)


construct_xq_minus_x = construct_xn_minus_x


def construct_subfield(F: GF, r: int, s: int, certify_now: bool = True, budget=None) -> HullCode:
    fam = "subfield"
    _odd_q(F, fam)
    _require(1 <= r < F.m and F.m % r == 0, f"r = {r} must be a proper divisor of m = {F.m}", fam)
    n = F.p ** r
    _require(1 <= s <= (n - 1) // 2, f"s = {s} outside 1..(p^r-1)/2", fam)
    U = F.subfield(r)
    one = _one(F)
    return _generalized(F, fam, U, GenSplit(one, one, one, s), (n, n - 2 * s + 1),
                        {"r": r, "s": s}, {}, certify_now, budget)


def construct_roots_of_unity(F: GF, n: int, s: int, variant: str = "odd-k", certify_now: bool = True,
                             budget=None) -> HullCode:
    fam = "roots-of-unity"
    _odd_q(F, fam)
    q = F.q
    _require(n >= 2 and (q - 1) % n == 0, f"n = {n} must divide q - 1", fam)
    _require(n <= q - 2, f"n = {n} exceeds q - 2", fam)
    x = Poly.x(F)
    one = _one(F)
    if variant == "odd-k":
        _require(1 <= s <= (n - 1) // 2, f"s = {s} outside 1..floor((n-1)/2)", fam)
        if n % 2:
            f, g1, g2 = _x_pow(F, (n - 1) // 2), one, one
        else:
            f, g1, g2 = _x_pow(F, (n - 2) // 2), one, x
        K = n - 2 * s + 1
    elif variant == "even-k":
        _require(n % 2 == 0, "the even-k variant needs n even", fam)
        _require(1 <= s <= n // 2 - 1, f"s = {s} outside 1..n/2-1", fam)
        f, g1, g2 = _x_pow(F, (n - 2) // 2), x, one
        K = n - 2 * s
    else:
        raise PreconditionError(f"unknown variant {variant!r}", fam)
    _require(K > 1, "dimension would be 1", fam)
    U = F.roots_of_unity(n)
    return _generalized(F, fam, U, GenSplit(f, g1, g2, s), (n, K),
                        {"n": n, "s": s, "variant": variant}, {}, certify_now, budget)


def _coset_reps(F: GF, base, t: int, shift) -> list[int]:
    """Smallest elements giving t new cosets, where shift(b) lists the coset of b."""
    reps, seen = [], set(base)
    for x in range(F.q):
        if len(reps) == t:
            break
        if x in seen:
            continue
        coset = shift(x)
        if seen.intersection(coset):
            continue
        reps.append(x)
        seen.update(coset)
    return reps


def construct_additive_cosets(F: GF, r: int, t: int, s: int, certify_now: bool = True,
                              budget=None) -> HullCode:
    fam = "additive-cosets"
    _odd_q(F, fam)
    p, m, q = F.p, F.m, F.q
    _require(m >= 2, "needs m >= 2", fam)
    _require(1 <= r <= m - 1 and m % r == 0, f"r = {r} must be a proper divisor of m", fam)
    pr = p ** r
    _require(math.gcd(p, t + 1) == 1, f"gcd(p, t+1) = gcd({p}, {t + 1}) != 1", fam)
    _require(1 <= t <= (q - 1 - pr) // (2 * pr), "t outside 1..floor((q-1-p^r)/(2p^r))", fam)
    _require(1 <= s <= pr // 2, f"s = {s} outside 1..floor(p^r/2)", fam)
    N = (t + 1) * pr
    U0 = F.subfield(r)
    reps = _coset_reps(F, U0, t, lambda b: [F.add(b, u) for u in U0])
    _require(len(reps) == t, "not enough additive cosets", fam)
    U = sorted(set(U0).union(F.add(b, u) for b in reps for u in U0))
    a = Poly.monomial(F, pr) - Poly.x(F)
    bpoly = Poly.from_roots(F, [a(b) for b in [0] + reps])
    h = bpoly.compose(a)
    if h != Poly.from_roots(F, U):  # pragma: no cover
        raise ConstructionError("b(a(x)) does not vanish exactly on the cosets", fam)
    hp = h.derivative()
    one = _one(F)
    return _generalized(F, fam, U, GenSplit(one, one, hp.monic(), s), (N, N - 2 * s + 1),
                        {"r": r, "t": t, "s": s}, {"coset_reps": reps}, certify_now, budget)


MULT_COSET_VARIANTS = tuple(range(1, 9))


def mult_cosets_s_range(n: int, t: int, p: int) -> range:
    return range(1, (n - 1) // 2 + 1) if (t + 1) % p else range(1, (2 * n - 1) // 2 + 1)


def mult_cosets_dimension(n: int, t: int, s: int, variant: int) -> int:
    N = (t + 1) * n
    return {1: n - 2 * s + 1, 2: 2 * n - 2 * s + 1, 3: n - 2 * s, 4: 2 * n - 2 * s,
            5: N - 2 * s + 1, 6: N - 2 * s + 1, 7: N - 2 * s, 8: N - 2 * s}[variant]


def construct_mult_cosets(F: GF, n: int, t: int, s: int, variant: int, extend: bool = False,
                          certify_now: bool = True, budget=None) -> HullCode:
    fam = "mult-cosets"
    _odd_q(F, fam)
    p, q = F.p, F.q
    _require(n >= 1 and (q - 1) % n == 0, f"n = {n} must divide q - 1", fam)
    _require(variant in MULT_COSET_VARIANTS, f"variant must be 1..8, got {variant}", fam)
    _require(t >= 1 and t + 1 <= (q - 1) // n, "t outside 1..(q-1)/n - 1", fam)
    if not extend:
        _require(t <= (q - n - 2) // (2 * n), "t exceeds floor((q-n-2)/(2n)); use extend", fam)
    divides = (t + 1) % p == 0
    _require(divides == (variant % 2 == 0),
             f"variant {variant} needs p {'|' if variant % 2 == 0 else 'not |'} (t+1)", fam)
    if variant in (3, 4, 7, 8):
        _require(n % 2 == 0, f"variant {variant} needs n even", fam)
    _require(s in mult_cosets_s_range(n, t, p), f"s = {s} outside the variant's range", fam)
    K = mult_cosets_dimension(n, t, s, variant)
    _require(K > 1, "dimension would be <= 1", fam)
    N = (t + 1) * n
    Un = F.roots_of_unity(n)
    leaders = _coset_reps(F, set(Un) | {0}, (q - 1) // n - 1, lambda b: [F.mul(b, u) for u in Un])
    x, one = Poly.x(F), _one(F)
    fx = _x_pow(F, (n - 1) // 2) if n % 2 else _x_pow(F, (n - 2) // 2)
    xe = one if n % 2 else x  # leftover factor of x when n is even
    params = {"n": n, "t": t, "s": s, "variant": variant}
    if extend:
        params["extend"] = True
    # The cosets are a free choice.  Some choices make g vanish at 0 (clashing
    # with the factor x), drop deg g, or leave no free point for e, so take the
    # first choice in lexicographic order for which every hypothesis holds.
    last = None
    for reps in itertools.islice(itertools.combinations(leaders, t), 5000):
        U = sorted(set(Un).union(F.mul(b, u) for b in reps for u in Un))
        hp = Poly.from_roots(F, U).derivative()
        g, rem = divmod(hp, _x_pow(F, n - 1))
        if not rem.is_zero():  # pragma: no cover
            raise ConstructionError("x^(n-1) does not divide h'", fam)
        g = g.monic()
        g1, g2 = {1: (g, xe), 2: (g, xe), 3: (x * g, one), 4: (x * g, one),
                  5: (one, xe * g), 6: (one, xe * g), 7: (x, g), 8: (x, g)}[variant]
        split = GenSplit(fx, g1, g2, s)
        try:
            spec, w, e0 = build_generalized(F, U, split, extend=extend)
        except ConstructionError as e:
            last = e
            continue
        if spec.k != K:
            last = ConstructionError(f"deg g = {g.degree} gives dimension {spec.k}, not {K}", fam)
            continue
        info = {"coset_reps": list(reps), "deg_g": g.degree, "e_point": e0, "split": split}
        hc = HullCode(spec, fam, params, (N, K), w, info=info)
        return _certify(hc, budget) if certify_now else hc
    raise ConstructionError(f"no choice of cosets satisfies the hypotheses (last: {last})", fam)


# -- duals and dispatch -------------------------------------------------------

def dualize(hc: HullCode, certify_now: bool = True, budget=None) -> HullCode:
    """The dual code; it shares the hull, so the witness carries over."""
    n, k = hc.n, hc.k
    if n - k <= 1:
        raise PreconditionError(f"dual of an [{n},{k}] code has dimension {n - k} <= 1", hc.family)
    spec = grs_dual(hc.spec)
    params = {**hc.params, "dual": not hc.params.get("dual", False)}
    if not params["dual"]:
        del params["dual"]
    out = HullCode(spec, hc.family, params, (n, n - hc.claimed[1]), hc.hull_witness,
                   info={"primal": hc})
    return _certify(out, budget) if certify_now else out


FAMILIES = ("even-q",) + tuple(f"square-{f}" for f in SQUARE_FAMILIES) + (
    "xn-x", "subfield", "roots-of-unity", "additive-cosets", "mult-cosets")


def construct(F: GF, family: str, certify_now: bool = True, budget=None, **params) -> HullCode:
    """Build a code by family name; ``dual=True`` returns its dual."""
    params = dict(params)
    dual = bool(params.pop("dual", False))
    kw = {"certify_now": certify_now and not dual, "budget": budget}
    if family == "even-q":
        hc = construct_even_q(F, int(params["n"]), int(params["s"]), **kw)
    elif family.startswith("square-"):
        hc = construct_square_family(F, family[len("square-"):], int(params.pop("s")), **kw, **params)
    elif family == "xn-x":
        hc = construct_xn_minus_x(F, int(params["n"]), int(params["s"]), **kw)
    elif family == "subfield":
        hc = construct_subfield(F, int(params["r"]), int(params["s"]), **kw)
    elif family == "roots-of-unity":
        hc = construct_roots_of_unity(F, int(params["n"]), int(params["s"]),
                                      params.get("variant", "odd-k"), **kw)
    elif family == "additive-cosets":
        hc = construct_additive_cosets(F, int(params["r"]), int(params["t"]), int(params["s"]), **kw)
    elif family == "mult-cosets":
        hc = construct_mult_cosets(F, int(params["n"]), int(params["t"]), int(params["s"]),
                                   int(params["variant"]), bool(params.get("extend", False)), **kw)
    else:
        raise PreconditionError(f"unknown family {family!r}")
    if dual:
        hc = dualize(hc, certify_now=certify_now, budget=budget)
    return hc
