"""Reading and writing code artifacts.

Two on-disk forms are used:

* JSON.  A constructed code serializes to its field descriptor, family,
  parameters, ``alpha``, ``v``, ``k``, hull witness and certificate.  A bare
  matrix may also be given as ``{"field": ..., "generator": [[...], ...]}``.
* Text.  One matrix row per line, entries separated by whitespace or ``&``.
  An optional header line ``# field p=3 m=4 modulus=2,0,0,2,1`` fixes the
  field (modulus coefficients from the constant term up).  Entries are
  integer indices or powers ``w^k``; for m > 1, ``w`` is the class of x in
  the quotient ring, for prime fields it is the primitive element.
"""

from __future__ import annotations

import json
import re

import numpy as np

from .code import as_matrix
from .gf import GF


class ArtifactError(ValueError):
    """Malformed or unreadable artifact."""


_POW = re.compile(r"^w(?:\^(-?\d+))?$")


def parse_entry(F: GF, tok: str) -> int:
    tok = tok.strip()
    m = _POW.match(tok)
    if m:
        e = int(m.group(1)) if m.group(1) is not None else 1
        base = F.p if F.m > 1 else F.g
        return F.pow(base, e)
    try:
        x = int(tok)
    except ValueError:
        raise ArtifactError(f"cannot parse matrix entry {tok!r}") from None
    if not 0 <= x < F.q:
        raise ArtifactError(f"entry {x} is not an element index of GF({F.q})")
    return x


def field_header(F: GF) -> str:
    return f"# field p={F.p} m={F.m} modulus={','.join(map(str, F.modulus))}"


def parse_field_header(line: str) -> GF | None:
    m = re.match(r"#\s*field\s+p=(\d+)\s+m=(\d+)(?:\s+modulus=([\d,]+))?", line.strip())
    if not m:
        return None
    mod = [int(c) for c in m.group(3).split(",")] if m.group(3) else None
    return GF(int(m.group(1)), int(m.group(2)), mod)


def matrix_to_text(F: GF, M) -> str:
    M = as_matrix(M)
    lines = [field_header(F)]
    lines += [" ".join(str(int(x)) for x in row) for row in M]
    return "\n".join(lines) + "\n"


def text_to_matrix(text: str, field: GF | None = None) -> tuple[GF, np.ndarray]:
    F = field
    rows = []
    for line in text.splitlines():
        s = line.strip()
        if not s:
            continue
        if s.startswith("#"):
            hdr = parse_field_header(s)
            if hdr is not None and F is None:
                F = hdr
            continue
        if F is None:
            raise ArtifactError("no field given: add a '# field' header or pass --q/--p/--m")
        toks = [t for t in re.split(r"[\s&]+", s.rstrip("\\").strip()) if t]
        rows.append([parse_entry(F, t) for t in toks])
    if not rows:
        raise ArtifactError("empty matrix")
    if len({len(r) for r in rows}) != 1:
        raise ArtifactError("rows have different lengths")
    return F, np.array(rows, dtype=np.int64)


def dumps(d: dict) -> str:
    return json.dumps(d, indent=2) + "\n"


def load_matrix(path: str, field: GF | None = None) -> tuple[GF, np.ndarray, dict | None]:
    """Generator matrix from a JSON artifact, JSON matrix or text file.

    Returns (field, matrix, artifact dict or None).
    """
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise ArtifactError(str(e)) from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise ArtifactError(f"bad JSON: {e}") from None
        F = field or (GF.from_descriptor(d["field"]) if "field" in d else None)
        if F is None:
            raise ArtifactError("JSON file carries no field descriptor")
        if "generator" in d:
            M = np.array(d["generator"], dtype=np.int64)
            if M.ndim != 2 or M.size == 0 or M.min() < 0 or M.max() >= F.q:
                raise ArtifactError("generator is not a matrix of element indices")
            return F, M, None
        if "alpha" in d:
            from .grs import GrsSpec
            spec = GrsSpec(F, d["alpha"], d["v"], int(d["k"]))
            return F, spec.generator(), d
        raise ArtifactError("JSON file has neither 'generator' nor 'alpha'")
    F, M = text_to_matrix(text, field)
    return F, M, None
