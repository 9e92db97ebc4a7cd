"""Univariate polynomials over a GF field.

Coefficients are field indices, constant term first, with no trailing zeros;
the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from .gf import GF, FieldError


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def const(cls, field: GF, c: int) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def x(cls, field: GF) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: GF, deg: int, c: int = 1) -> "Poly":
        return cls(field, (0,) * deg + (c,))

    @classmethod
    def linear(cls, field: GF, root: int) -> "Poly":
        """The monic polynomial x - root."""
        return cls(field, (field.neg(root), 1))

    @classmethod
    def from_roots(cls, field: GF, roots) -> "Poly":
        """Monic polynomial with exactly the given multiset of roots."""
        c = [1]
        F = field
        for r in roots:
            nr = F.neg(int(r))
            nxt = [0] * (len(c) + 1)
            for i, a in enumerate(c):
                nxt[i + 1] = F.add(nxt[i + 1], a)
                nxt[i] = F.add(nxt[i], F.mul(a, nr))
            c = nxt
        return cls(field, c)

    # -- basic properties ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = self.field.inv(self.lead)
        return Poly(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    def _check(self, other: "Poly"):
        if other.field != self.field:
            raise FieldError("polynomials over different fields")

    # -- evaluation ------------------------------------------------------------

    def __call__(self, x: int) -> int:
        F = self.field
        x = int(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def eval_many(self, xs) -> list[int]:
        return [self(x) for x in xs]

    def derivative(self) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    # -- ring arithmetic -------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(F, [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        F = self.field
        if isinstance(other, int):
            return Poly(F, [F.mul(c, other) for c in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def scale(self, c: int) -> "Poly":
        return self * int(c)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        acc = Poly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __divmod__(self, d: "Poly"):
        self._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        r = list(self.coeffs)
        dd = d.degree
        inv = F.inv(d.lead)
        qc = [0] * max(len(r) - dd, 0)
        for shift in range(len(r) - 1 - dd, -1, -1):
            c = r[shift + dd]
            if not c:
                continue
            c = F.mul(c, inv)
            qc[shift] = c
            for i, dc in enumerate(d.coeffs):
                r[shift + i] = F.sub(r[shift + i], F.mul(c, dc))
        return Poly(F, qc), Poly(F, r)

    def __floordiv__(self, d: "Poly") -> "Poly":
        return divmod(self, d)[0]

    def __mod__(self, d: "Poly") -> "Poly":
        return divmod(self, d)[1]

    def exact_div(self, d: "Poly") -> "Poly":
        q, r = divmod(self, d)
        if not r.is_zero():
            raise ValueError("polynomial division is not exact")
        return q

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x))."""
        acc = Poly(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.const(self.field, c)
        return acc

    # -- roots -----------------------------------------------------------------

    def multiplicity(self, a: int) -> int:
        """Order of vanishing at a, by repeated synthetic division."""
        if self.is_zero():
            raise ValueError("the zero polynomial vanishes to infinite order")
        F = self.field
        c = list(self.coeffs)
        k = 0
        while len(c) > 1:
            # synthetic division by (x - a)
            out = [0] * (len(c) - 1)
            acc = 0
            for i in range(len(c) - 1, 0, -1):
                acc = F.add(F.mul(acc, a), c[i])
                out[i - 1] = acc
            rem = F.add(F.mul(acc, a), c[0])
            if rem:
                break
            c = out
            k += 1
        return k

    def roots(self) -> list[tuple[int, int]]:
        """All roots in the field with multiplicities, by exhaustive scan."""
        if self.is_zero():
            raise ValueError("the zero polynomial has every element as a root")
        return [(a, self.multiplicity(a)) for a in range(self.field.q) if self(a) == 0]

    def root_set(self) -> list[int]:
        return [a for a in range(self.field.q) if self(a) == 0]

    def is_squarefree_on(self, points) -> bool:
        """True iff every point is a simple root."""
        d = self.derivative()
        return all(self(a) == 0 and d(a) != 0 for a in points)


def poly_from_roots(field: GF, roots) -> Poly:
    return Poly.from_roots(field, roots)


def derivative_at_roots(field: GF, points) -> list[int]:
    """prod_{j != i} (a_i - a_j) for each point, computed directly."""
    pts = [int(a) for a in points]
    out = []
    for i, a in enumerate(pts):
        out.append(field.prod(field.sub(a, b) for j, b in enumerate(pts) if j != i))
    return out
