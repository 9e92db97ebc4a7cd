"""Enumerate every admissible parameter tuple for a field and tabulate the codes."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .code import CertificationError
from .constructions import (FAMILIES, MULT_COSET_VARIANTS, SQUARE_FAMILIES, ConstructionError,
                            PreconditionError, _square_family_check, construct,
                            mult_cosets_dimension, mult_cosets_s_range, square_family_dimension,
                            square_family_range)
from .gf import GF, prime_power

HEADER = ("q", "family", "params", "N", "K", "d", "certified", "note")


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _square_grid(F: GF, fam: str, max_N: int):
    p, m, q = F.p, F.m, F.q
    if fam in ("1", "2"):
        grid = [{"N": N} for N in range(2, max_N + 1, 2)]
    elif fam in ("3a", "3b"):
        grid = [{"N": N} for N in _divisors((q - 1) // 2)]
    elif fam in ("4", "5", "6"):
        grid = [{"r": r, "t": t} for r in range(1, m) for t in range(1, max_N + 1)]
    elif fam in ("7", "8"):
        grid = [{"t": t} for t in range(1, p ** (m // 2))] if m % 2 == 0 else []
    elif fam in ("9", "11"):
        grid = [{"m0": m0, "l": l, "t": t} for m0 in (_divisors(m // 2) if m % 2 == 0 else [])
                for l in range(m // m0) for t in range(0, (p ** m0 - 1) // 2 + 1)]
    else:
        grid = [{"l": l} for l in range(1, m)]
    for params in grid:
        try:
            N = _square_family_check(F, fam, params)
        except PreconditionError:
            continue
        if N > max_N:
            continue
        for s in square_family_range(N):
            yield f"square-{fam}", {**params, "s": s}, N, square_family_dimension(N, s)


def admissible_tuples(F: GF, max_N: int, families=None, duals: bool = True):
    """All (family, params, N, K) with N <= max_N whose side conditions hold.

    Dual codes are listed too whenever their dimension exceeds one.
    """
    p, m, q = F.p, F.m, F.q
    out = []
    if p == 2:
        if q > 4:
            for n in range(4, min(q - 2, max_N) + 1):
                for s in range(1, n - 2):
                    out.append(("even-q", {"n": n, "s": s}, n, n - s - 1))
    elif q > 5:
        for fam in SQUARE_FAMILIES:
            out.extend(_square_grid(F, fam, max_N))
        for n in range(2, min(q - 1, max_N) + 1):
            if n % p == 0 and (q - 1) % (n - 1) == 0:
                for s in range(1, n // 2 + 1):
                    if n - 2 * s + 1 > 1:
                        out.append(("xn-x", {"n": n, "s": s}, n, n - 2 * s + 1))
        for r in _divisors(m)[:-1]:
            n = p ** r
            if n <= max_N:
                for s in range(1, (n - 1) // 2 + 1):
                    out.append(("subfield", {"r": r, "s": s}, n, n - 2 * s + 1))
        for n in _divisors(q - 1):
            if n < 2 or n > min(q - 2, max_N):
                continue
            for s in range(1, (n - 1) // 2 + 1):
                if n - 2 * s + 1 > 1:
                    out.append(("roots-of-unity", {"n": n, "s": s, "variant": "odd-k"}, n, n - 2 * s + 1))
            if n % 2 == 0:
                for s in range(1, n // 2):
                    if n - 2 * s > 1:
                        out.append(("roots-of-unity", {"n": n, "s": s, "variant": "even-k"}, n, n - 2 * s))
        if m >= 2:
            for r in _divisors(m)[:-1]:
                pr = p ** r
                for t in range(1, (q - 1 - pr) // (2 * pr) + 1):
                    N = (t + 1) * pr
                    if math.gcd(p, t + 1) != 1 or N > max_N:
                        continue
                    for s in range(1, pr // 2 + 1):
                        out.append(("additive-cosets", {"r": r, "t": t, "s": s}, N, N - 2 * s + 1))
        for n in _divisors(q - 1):
            for t in range(1, (q - n - 2) // (2 * n) + 1):
                N = (t + 1) * n
                if N > max_N:
                    continue
                for variant in MULT_COSET_VARIANTS:
                    if ((t + 1) % p == 0) != (variant % 2 == 0):
                        continue
                    if variant in (3, 4, 7, 8) and n % 2:
                        continue
                    for s in mult_cosets_s_range(n, t, p):
                        K = mult_cosets_dimension(n, t, s, variant)
                        if K > 1:
                            out.append(("mult-cosets", {"n": n, "t": t, "s": s, "variant": variant}, N, K))
    if families is not None:
        keep = set(families)
        out = [row for row in out if row[0] in keep]
    if duals:
        out += [(fam, {**params, "dual": True}, N, N - K) for fam, params, N, K in out if N - K > 1]
    return out


@dataclass(frozen=True)
class AtlasRow:
    q: int
    family: str
    params: str
    N: int
    K: int
    d: object
    certified: bool
    note: str = ""

    def as_tuple(self):
        return (self.q, self.family, self.params, self.N, self.K, self.d,
                "true" if self.certified else "false", self.note)


def format_params(params: dict) -> str:
    return ";".join(f"{k}={int(v) if isinstance(v, bool) else v}" for k, v in params.items())


@lru_cache(maxsize=None)
def _field(p: int, m: int) -> GF:
    return GF(p, m)


def _row(job) -> AtlasRow:
    p, m, fam, params, N, K, budget = job
    F = _field(p, m)
    try:
        hc = construct(F, fam, budget=budget, **params)
        return AtlasRow(F.q, fam, format_params(params), N, K, hc.cert.d, True)
    except (ConstructionError, CertificationError) as e:
        return AtlasRow(F.q, fam, format_params(params), N, K, "", False, f"{type(e).__name__}: {e}")


def _family_rank(fam: str) -> int:
    return FAMILIES.index(fam) if fam in FAMILIES else len(FAMILIES)


def build_atlas(qs, max_N: int, families=None, budget=None, workers: int | None = 1) -> list[AtlasRow]:
    """Construct and certify every admissible tuple; rows come back sorted."""
    jobs = []
    for q in qs:
        p, m = prime_power(int(q))
        for fam, params, N, K in admissible_tuples(_field(p, m), max_N, families):
            jobs.append((p, m, fam, params, N, K, budget))
    if workers == 1 or len(jobs) < 2:
        rows = [_row(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_row, jobs, chunksize=8))
    rows.sort(key=lambda r: (r.q, _family_rank(r.family), r.N, r.K, r.params))
    return rows


def to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in rows:
        w.writerow(r.as_tuple())
    return buf.getvalue()


def to_markdown(rows) -> str:
    lines = ["| " + " | ".join(HEADER) + " |", "|" + "---|" * len(HEADER)]
    for r in rows:
        lines.append("| " + " | ".join(str(x) for x in r.as_tuple()) + " |")
    return "\n".join(lines) + "\n"


__all__ = ["AtlasRow", "HEADER", "admissible_tuples", "build_atlas", "format_params", "to_csv",
           "to_markdown"]
