"""Finite fields GF(p^m) with integer-indexed elements.

An element is stored as its canonical index: the coefficient vector
``(c_0, ..., c_{m-1})`` in the power basis of the modulus root, read as the
base-p integer ``c_0 + c_1 p + ... + c_{m-1} p^(m-1)``.  Index order is the
total order used for every tie-break in the package; the prime subfield is
``0..p-1``.

Scalar methods take and return Python ints.  The ``v*`` methods are the
numpy-vectorised counterparts used by the linear algebra code.
"""

from __future__ import annotations

import math
from functools import total_ordering

import numpy as np

MAX_ORDER = 1 << 20
_TABLE_LIMIT = 1024


class FieldError(ValueError):
    """Invalid field parameters or an operation outside the field's domain."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**m``; raise FieldError if q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = fs[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return p, m


# -- polynomials over GF(p) as coefficient lists, constant term first ---------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p) if p > 2 else 1
    db = len(b) - 1
    while len(_trim(a)) - 1 >= db:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
    return a


def _pmulmod(a, b, f, p):
    out = [0] * (len(a) + len(b) - 1 if a and b else 0)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, f, p)


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible_mod_p(f, p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p), coefficients low to high."""
    f = _trim(list(f))
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    # x^(p^i) mod f by repeated p-th powering
    cur = x
    for i in range(1, m // 2 + 1):
        acc = [1]
        base, e = cur, p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        cur = acc
        diff = list(cur) + [0] * (2 - len(cur))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, diff, p)
        if len(g) > 1:
            return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m, ordered as the base-p integer of its coefficients."""
    if m == 1:
        return (0, 1)
    for code in range(p ** m):
        coeffs = [(code // p ** i) % p for i in range(m)] + [1]
        if coeffs[0] == 0:
            continue
        if is_irreducible_mod_p(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover


class GF:
    """The finite field GF(p^m).

    >>> F = GF(2, 3)
    >>> F.modulus
    (1, 1, 0, 1)
    >>> F.mul(F.g, F.inv(F.g))
    1
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        if p ** m > MAX_ORDER:
            raise FieldError(f"field order {p}^{m} exceeds {MAX_ORDER}")
        if modulus is None:
            modulus = default_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {m}")
            if not is_irreducible_mod_p(modulus, p):
                raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        self._build_tables()

    # -- construction ----------------------------------------------------------

    def _digits(self, idx):
        idx = np.asarray(idx, dtype=np.int64)
        return np.stack([(idx // self.p ** i) % self.p for i in range(self.m)], axis=-1)

    def _undigits(self, d):
        w = self.p ** np.arange(self.m, dtype=np.int64)
        return (d * w).sum(axis=-1)

    def _vmul_const(self, digits, c):
        """Multiply rows of a digit array by the element with digit vector c."""
        p, m, f = self.p, self.m, self.modulus
        prod = np.zeros((digits.shape[0], 2 * m - 1), dtype=np.int64)
        for j, cj in enumerate(c):
            if cj:
                prod[:, j:j + m] += digits * int(cj)
        prod %= p
        for d in range(2 * m - 2, m - 1, -1):
            top = prod[:, d].copy()
            for k in range(m):
                if f[k]:
                    prod[:, d - m + k] -= top * f[k]
            prod[:, d] = 0
            prod %= p
        return prod[:, :m]

    def _slow_mul(self, a: int, b: int) -> int:
        da = self._digits(np.array([a]))
        return int(self._undigits(self._vmul_const(da, self._digits(b)))[0])

    def _slow_pow(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self._slow_mul(acc, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return acc

    def _build_tables(self):
        q, p = self.q, self.p
        order = q - 1
        if self.m == 1:
            g = next(c for c in range(1, q) if all(
                pow(c, order // r, q) != 1 for r in prime_factors(order))) if q > 2 else 1
        else:
            facs = prime_factors(order)
            g = next(c for c in range(2, q)
                     if all(self._slow_pow(c, order // r) != 1 for r in facs))
        self.g = g
        # powers of g by block doubling
        block = self._digits(np.array([1]))
        while block.shape[0] < order:
            factor = self._slow_mul(int(self._undigits(block[-1:])[0]), g)
            block = np.concatenate([block, self._vmul_const(block, self._digits(factor))])
        exp = self._undigits(block[:order]).astype(np.int64)
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(order)
        if len(set(exp.tolist())) != order:  # pragma: no cover
            raise FieldError("primitive element search failed")
        self._exp = np.concatenate([exp, exp])
        self._log = log
        neg_digits = (-self._digits(np.arange(q))) % p
        self._neg = self._undigits(neg_digits).astype(np.int64)
        one_plus = self._undigits((self._digits(exp) + self._digits(np.array([1]))) % p)
        # zech[d] = log(1 + g^d), -1 when 1 + g^d = 0
        self._zech = log[one_plus]
        self._exp_l = self._exp.tolist()
        self._log_l = log.tolist()
        self._neg_l = self._neg.tolist()
        self._zech_l = self._zech.tolist()
        self._add_t = self._mul_t = None
        if q <= _TABLE_LIMIT:
            a = np.arange(q)
            self._add_t = self._undigits((self._digits(a)[:, None, :] + self._digits(a)[None, :, :]) % p)
            la = log[a]
            mt = self._exp[(la[:, None] + la[None, :]) % max(order, 1)]
            mt[0, :] = 0
            mt[:, 0] = 0
            self._mul_t = mt

    # -- identity --------------------------------------------------------------

    def descriptor(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_descriptor(cls, d: dict) -> "GF":
        return cls(int(d["p"]), int(d["m"]), d.get("modulus"))

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __call__(self, x) -> "FieldElem":
        return FieldElem(self, self.coerce(x))

    def coerce(self, x) -> int:
        if isinstance(x, FieldElem):
            if x.field != self:
                raise FieldError("element belongs to a different field")
            return x.value
        x = int(x)
        if not 0 <= x < self.q:
            raise FieldError(f"index {x} out of range for {self}")
        return x

    @property
    def odd(self) -> bool:
        return self.p != 2

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p ** i) % self.p for i in range(self.m))

    def from_coeffs(self, c) -> int:
        return sum((int(x) % self.p) * self.p ** i for i, x in enumerate(c))

    # -- scalar arithmetic -----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if not a:
            return b
        if not b:
            return a
        la = self._log_l[a]
        z = self._zech_l[(self._log_l[b] - la) % (self.q - 1)]
        return 0 if z < 0 else self._exp_l[la + z]

    def neg(self, a: int) -> int:
        return self._neg_l[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg_l[b])

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        return self._exp_l[self._log_l[a] + self._log_l[b]]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self._exp_l[(-self._log_l[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if not b:
            raise ZeroDivisionError("division by zero")
        if not a:
            return 0
        return self._exp_l[(self._log_l[a] - self._log_l[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if not a:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp_l[(self._log_l[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete log to base ``g``."""
        if not a:
            raise FieldError("log of zero")
        return self._log_l[a]

    def exp(self, e: int) -> int:
        return self._exp_l[e % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def sum(self, xs) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def prod(self, xs) -> int:
        acc = 1
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    # -- vectorised arithmetic on index arrays ---------------------------------

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add_t is not None:
            return self._add_t[a, b]
        a, b = np.broadcast_arrays(a, b)
        la, lb = self._log[a], self._log[b]
        z = self._zech[(lb - la) % (self.q - 1)]
        out = np.where(z < 0, 0, self._exp[(la + np.maximum(z, 0)) % (self.q - 1)])
        out = np.where(a == 0, b, np.where(b == 0, a, out))
        return out

    def vneg(self, a):
        return self._neg[np.asarray(a, dtype=np.int64)]

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        if self._mul_t is not None:
            return self._mul_t[a, b]
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def vsum(self, a, axis=-1):
        """Field sum along an axis."""
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        a = np.moveaxis(a, axis, 0)
        acc = np.zeros(a.shape[1:], dtype=np.int64)
        for row in a:
            acc = self.vadd(acc, row)
        return acc

    def vpow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        out = self._exp[(self._log[a] * e) % (self.q - 1)]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    # -- squares ---------------------------------------------------------------

    def is_square(self, a: int) -> bool:
        if self.p == 2 or a == 0:
            return True
        return self._log_l[a] % 2 == 0

    def is_square_euler(self, a: int) -> bool:
        """Euler's criterion, kept separate from the log-parity shortcut."""
        if self.p == 2 or a == 0:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def smallest_nonsquare(self) -> int:
        if self.p == 2:
            raise FieldError("every element of a binary field is a square")
        return next(a for a in range(1, self.q) if not self.is_square_euler(a))

    def sqrt(self, a: int) -> int:
        """Canonical square root: the smaller index of the pair {r, -r}."""
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, self.q // 2)
        if not self.is_square_euler(a):
            raise FieldError(f"{a} is not a square in {self}")
        r = self._tonelli_shanks(a)
        return min(r, self.neg(r))

    def _tonelli_shanks(self, a: int) -> int:
        q = self.q
        s, t = 0, q - 1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = self.pow(self.smallest_nonsquare(), t)
        x = self.pow(a, (t + 1) // 2)
        b = self.pow(a, t)
        while b != 1:
            i, b2 = 0, b
            while b2 != 1:
                b2 = self.mul(b2, b2)
                i += 1
            c = z
            for _ in range(s - i - 1):
                c = self.mul(c, c)
            x = self.mul(x, c)
            z = self.mul(c, c)
            b = self.mul(b, z)
            s = i
        return x

    # -- structure -------------------------------------------------------------

    def elements(self) -> list[int]:
        return list(range(self.q))

    def subfield(self, r: int) -> list[int]:
        """Elements of the subfield GF(p^r), i.e. the fixed points of x -> x^(p^r)."""
        if r < 1 or self.m % r:
            raise FieldError(f"{r} does not divide the extension degree {self.m}")
        e = self.p ** r
        return [a for a in range(self.q) if self.pow(a, e) == a]

    def roots_of_unity(self, n: int) -> list[int]:
        if n < 1 or (self.q - 1) % n:
            raise FieldError(f"{n} does not divide {self.q - 1}")
        step = (self.q - 1) // n
        return sorted(self.exp(step * i) for i in range(n))

    def order(self, a: int) -> int:
        if not a:
            raise FieldError("zero has no multiplicative order")
        n = self.q - 1
        return n // math.gcd(self._log_l[a], n)


@total_ordering
class FieldElem:
    """A field element bound to its field; ordered by canonical index."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        self.value = int(value)

    def _other(self, o):
        if isinstance(o, FieldElem):
            if o.field != self.field:
                raise FieldError("mixed fields")
            return o.value
        return self.field.from_int(o)

    def __add__(self, o):
        return FieldElem(self.field, self.field.add(self.value, self._other(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return FieldElem(self.field, self.field.sub(self.value, self._other(o)))

    def __rsub__(self, o):
        return FieldElem(self.field, self.field.sub(self._other(o), self.value))

    def __mul__(self, o):
        return FieldElem(self.field, self.field.mul(self.value, self._other(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return FieldElem(self.field, self.field.div(self.value, self._other(o)))

    def __rtruediv__(self, o):
        return FieldElem(self.field, self.field.div(self._other(o), self.value))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inv(self):
        return FieldElem(self.field, self.field.inv(self.value))

    def is_square(self) -> bool:
        return self.field.is_square(self.value)

    def sqrt(self):
        return FieldElem(self.field, self.field.sqrt(self.value))

    def __eq__(self, o):
        if isinstance(o, FieldElem):
            return self.field == o.field and self.value == o.value
        if isinstance(o, int):
            return self.value == o
        return NotImplemented

    def __lt__(self, o):
        return self.value < self._other(o) if isinstance(o, FieldElem) else self.value < o

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"{self.field}({self.value})"
