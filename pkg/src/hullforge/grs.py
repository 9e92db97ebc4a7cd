"""Generalized Reed-Solomon codes described by (alpha, v, k)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import LinearCode
from .gf import GF
from .poly import derivative_at_roots


class GrsError(ValueError):
    pass


@dataclass(frozen=True)
class GrsSpec:
    """Evaluation points ``alpha``, nonzero multipliers ``v`` and dimension ``k``."""

    field: GF
    alpha: tuple
    v: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(int(a) for a in self.alpha))
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        if len(self.alpha) != len(self.v):
            raise GrsError("alpha and v differ in length")
        if len(set(self.alpha)) != len(self.alpha):
            raise GrsError("evaluation points are not distinct")
        if any(x == 0 for x in self.v):
            raise GrsError("zero multiplier")
        if not 1 <= self.k <= len(self.alpha):
            raise GrsError(f"dimension {self.k} outside 1..{len(self.alpha)}")

    @property
    def n(self) -> int:
        return len(self.alpha)

    def generator(self) -> np.ndarray:
        return grs_generator(self)

    def code(self) -> LinearCode:
        return LinearCode(self.field, self.generator())

    def to_dict(self) -> dict:
        return {"field": self.field.descriptor(), "alpha": list(self.alpha),
                "v": list(self.v), "k": self.k}

    @classmethod
    def from_dict(cls, d: dict, field: GF | None = None) -> "GrsSpec":
        F = field or GF.from_descriptor(d["field"])
        return cls(F, d["alpha"], d["v"], int(d["k"]))


def grs_generator(spec: GrsSpec) -> np.ndarray:
    """Row j is (v_i * alpha_i^j)_i for j < k."""
    F = spec.field
    a = np.array(spec.alpha, dtype=np.int64)
    row = np.array(spec.v, dtype=np.int64)
    rows = []
    for _ in range(spec.k):
        rows.append(row)
        row = F.vmul(row, a)
    return np.array(rows, dtype=np.int64).reshape(spec.k, spec.n)


def grs_dual(spec: GrsSpec) -> GrsSpec:
    """The dual code as a GRS code on the same points.

    Multipliers are u_i = 1 / (v_i * prod_{j != i}(alpha_i - alpha_j)).
    """
    if spec.k >= spec.n:
        raise GrsError("the full space has a zero dual")
    F = spec.field
    hp = derivative_at_roots(F, spec.alpha)
    u = [F.inv(F.mul(v, d)) for v, d in zip(spec.v, hp)]
    return GrsSpec(F, spec.alpha, u, spec.n - spec.k)
