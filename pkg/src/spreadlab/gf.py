"""Finite field arithmetic GF(p^k) for p^k <= 2^20.

Field elements are encoded as integers 0 .. p^k-1: the integer with base-p
digits (c0, c1, ...) stands for c0 + c1*t + ... modulo a fixed monic modulus
polynomial.  The canonical element ordering is this integer ordering.

The modulus for each (p, k) is pinned: it is the lexicographically least
monic polynomial x^k + c_{k-1} x^{k-1} + ... + c_0 (compared by the integer
encoding of (c_0, ..., c_{k-1})) whose root t is a generator of the
multiplicative group.  A table of precomputed moduli covers the common small
fields; anything else is derived at runtime by the same deterministic rule
and every modulus is re-verified at Field construction.
"""

from __future__ import annotations

from functools import lru_cache

MAX_Q = 1 << 20

# (p, k) -> integer-encoded modulus tail (c_0 + c_1 p + ... + c_{k-1} p^{k-1});
# the polynomial is x^k + tail.  Every entry is the lex-least primitive choice
# for its field (regenerable via _least_primitive_modulus) and is re-verified
# at Field construction.  Fields beyond the table use the same rule on demand.
_MODULUS_TABLE = {
    (2, 1): 1, (2, 2): 3, (2, 3): 3, (2, 4): 3, (2, 5): 5, (2, 6): 3,
    (2, 7): 3, (2, 8): 29, (2, 9): 17, (2, 10): 9, (3, 1): 1, (3, 2): 5,
    (3, 3): 7, (3, 4): 5, (3, 5): 7, (3, 6): 5, (5, 1): 2, (5, 2): 7,
    (5, 3): 17, (5, 4): 37, (7, 1): 2, (7, 2): 10, (7, 3): 23, (11, 1): 3,
    (11, 2): 18, (13, 1): 2, (13, 2): 15, (17, 1): 3, (17, 2): 20,
    (19, 1): 4, (19, 2): 21, (23, 1): 2, (23, 2): 30, (29, 1): 2,
    (29, 2): 32, (31, 1): 7, (31, 2): 43, (37, 1): 2, (41, 1): 6,
    (43, 1): 9, (47, 1): 2, (53, 1): 2, (59, 1): 3, (61, 1): 2, (67, 1): 4,
    (71, 1): 2, (73, 1): 5, (79, 1): 2, (83, 1): 3, (89, 1): 3, (97, 1): 5,
    (101, 1): 2, (103, 1): 2, (107, 1): 3, (109, 1): 6, (113, 1): 3,
    (127, 1): 9,
}


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (intended for n < 2^21)."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n > 1 and factorize(n) == {n: 1}


def _poly_mulmod(a, b, mod_tail, p, k):
    """Multiply coefficient lists mod (x^k + tail) over GF(p)."""
    res = [0] * (2 * k)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(2 * k - 1, k - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            # x^k = -tail
            for j, tj in enumerate(mod_tail):
                res[i - k + j] = (res[i - k + j] - c * tj) % p
    return res[:k]


def _enc(coeffs, p):
    v = 0
    for c in reversed(coeffs):
        v = v * p + c
    return v


def _dec(v, p, k):
    out = []
    for _ in range(k):
        out.append(v % p)
        v //= p
    return out


def _x_order_is_full(tail_val, p, k):
    """True iff x generates the units of GF(p)[x]/(x^k + tail)."""
    q = p ** k
    tail = _dec(tail_val, p, k)

    def powx(e):
        base = [0, 1][:k] + [0] * max(0, k - 2)
        if k == 1:
            base = [(-tail[0]) % p]
        acc = [1] + [0] * (k - 1)
        while e:
            if e & 1:
                acc = _poly_mulmod(acc, base, tail, p, k)
            base = _poly_mulmod(base, base, tail, p, k)
            e >>= 1
        return acc

    one = [1] + [0] * (k - 1)
    if powx(q - 1) != one:
        return False
    return all(powx((q - 1) // r) != one for r in factorize(q - 1))


def _least_primitive_modulus(p, k):
    for tail in range(p ** k):
        if _x_order_is_full(tail, p, k):
            return tail
    raise AssertionError(f"no primitive polynomial found for GF({p}^{k})")


class FieldElem:
    """An element of a specific Field; arithmetic is closed within it."""

    __slots__ = ("field", "val")

    def __init__(self, field, val):
        self.field = field
        self.val = val

    def _check(self, other):
        if not isinstance(other, FieldElem) or other.field is not self.field:
            raise ValueError("cross-field arithmetic")

    def __add__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field._add(self.val, other.val))

    def __sub__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field._sub(self.val, other.val))

    def __neg__(self):
        return FieldElem(self.field, self.field._sub(0, self.val))

    def __mul__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field._mul(self.val, other.val))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def inverse(self):
        if self.val == 0:
            raise ZeroDivisionError("inverse of zero")
        return FieldElem(self.field, self.field._inv(self.val))

    def __pow__(self, e):
        f = self.field
        if self.val == 0:
            if e < 0:
                raise ZeroDivisionError
            return FieldElem(f, 0 if e else 1)
        return FieldElem(f, f._pow(self.val, e))

    def multiplicative_order(self):
        if self.val == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.field.q - 1
        o = n
        for r in factorize(n):
            while o % r == 0 and self.field._pow(self.val, o // r) == 1:
                o //= r
        return o

    def __eq__(self, other):
        return (isinstance(other, FieldElem)
                and other.field is self.field and other.val == self.val)

    def __hash__(self):
        return hash((id(self.field), self.val))

    def __repr__(self):
        return f"FieldElem({self.field}, {self.as_text()!r})"

    def as_text(self):
        f = self.field
        if f.k == 1:
            return str(self.val)
        coeffs = _dec(self.val, f.p, f.k)
        terms = []
        for i, c in enumerate(coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t" if c > 1 else "t")
            else:
                terms.append(f"{c}*t^{i}" if c > 1 else f"t^{i}")
        return "+".join(terms) if terms else "0"


class Field:
    """GF(p^k) with a pinned modulus; elements are integers wrapped in FieldElem."""

    def __init__(self, p, k):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1 or p ** k > MAX_Q:
            raise ValueError(f"p^k must be between p and 2^20, got {p}^{k}")
        self.p = p
        self.k = k
        self.q = p ** k
        tail = _MODULUS_TABLE.get((p, k))
        if tail is None:
            tail = _least_primitive_modulus(p, k)
        if not _x_order_is_full(tail, p, k):
            raise AssertionError(f"modulus table entry for GF({p}^{k}) is not primitive")
        self.modulus_tail = tail
        self._tail_coeffs = _dec(tail, p, k)
        # exp/log tables w.r.t. the root t of the modulus (a generator)
        self._exp = [1] * (self.q - 1)
        self._log = [0] * self.q
        if k == 1:
            g = (-tail) % p
        else:
            g = p  # the element t
        acc = 1
        for i in range(self.q - 1):
            self._exp[i] = acc
            self._log[acc] = i
            acc = self._raw_mul(acc, g)
        if acc != 1:
            raise AssertionError("generator order check failed")

    def _raw_mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        ca = _dec(a, self.p, self.k)
        cb = _dec(b, self.p, self.k)
        return _enc(_poly_mulmod(ca, cb, self._tail_coeffs, self.p, self.k), self.p)

    def _add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a % p - b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        n = self.q - 1
        return self._exp[(self._log[a] + self._log[b]) % n]

    def _inv(self, a):
        n = self.q - 1
        return self._exp[(n - self._log[a]) % n]

    def _pow(self, a, e):
        if a == 0:
            return 0 if e else 1
        n = self.q - 1
        return self._exp[(self._log[a] * e) % n]

    def elem(self, val) -> FieldElem:
        return FieldElem(self, val % self.q if self.k == 1 else val)

    def zero(self):
        return FieldElem(self, 0)

    def one(self):
        return FieldElem(self, 1)

    def elements(self):
        return (FieldElem(self, v) for v in range(self.q))

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> Field:
    return Field(p, k)


def primitive_element(F: Field) -> FieldElem:
    """Least generator of the multiplicative group in the canonical ordering."""
    n = F.q - 1
    fs = factorize(n)
    for v in range(1, F.q):
        if all(F._pow(v, n // r) != 1 for r in fs):
            return FieldElem(F, v)
    raise AssertionError("no primitive element found")


def is_square(a: FieldElem) -> bool:
    if a.val == 0:
        raise ValueError("is_square is defined for nonzero elements")
    F = a.field
    if F.p == 2:
        return True
    return F._pow(a.val, (F.q - 1) // 2) == 1


def frobenius_twist(a: FieldElem, e: int) -> FieldElem:
    """a^(p^e)."""
    if a.val == 0:
        return a
    F = a.field
    return FieldElem(F, F._pow(a.val, pow(F.p, e, F.q - 1)))
