"""Permutations on {0..n-1} stored as image tuples.

Points are 0-based in memory and 1-based in all text I/O, so the cycle
"(1,2,3)" maps point 0 to point 1.  Composition is left-to-right:
(x)(p*q) = ((x)p)q.
"""

from __future__ import annotations

import re
from math import gcd


class Perm(tuple):
    """An immutable permutation; element i is the image of point i."""

    __slots__ = ()

    def __new__(cls, images):
        p = super().__new__(cls, images)
        if sorted(p) != list(range(len(p))):
            raise ValueError("images are not a bijection of 0..n-1")
        return p

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return tuple.__new__(cls, range(n))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Perm":
        """Build from 0-based cycles, e.g. [(0,1,2),(3,4)]."""
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if a in seen:
                    raise ValueError(f"repeated point {a + 1} in cycles")
                if not 0 <= a < n:
                    raise ValueError(f"point {a + 1} out of range 1..{n}")
                seen.add(a)
            for a, b in zip(cyc, cyc[1:]):
                images[a] = b
            if cyc:
                images[cyc[-1]] = cyc[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other) -> "Perm":
        """Left-to-right composition: apply self first, then other."""
        if len(self) != len(other):
            raise ValueError("degree mismatch in composition")
        return tuple.__new__(Perm, (other[i] for i in self))

    def __pow__(self, k: int) -> "Perm":
        n = len(self)
        if k < 0:
            return self.inverse() ** (-k)
        r = Perm.identity(n)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return tuple.__new__(Perm, inv)

    def conjugate(self, g: "Perm") -> "Perm":
        """self^g = g^-1 * self * g."""
        ginv = g.inverse()
        return ginv * self * g

    def cycles(self, include_fixed: bool = False):
        """Disjoint cycles as tuples of 0-based points, longest first."""
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        out.sort(key=lambda c: (-len(c), c))
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def __repr__(self):
        return f"Perm({format_cycles(self)!r}, n={len(self)})"


class CycleType(tuple):
    """Multiset of cycle lengths as ((length, multiplicity), ...), decreasing."""

    __slots__ = ()

    def __new__(cls, pairs):
        pairs = tuple(sorted(((int(l), int(m)) for l, m in pairs), reverse=True))
        if any(l < 1 or m < 1 for l, m in pairs):
            raise ValueError("cycle lengths and multiplicities must be >= 1")
        return super().__new__(cls, pairs)

    @property
    def degree(self) -> int:
        return sum(l * m for l, m in self)

    def label(self) -> str:
        """Canonical text form, e.g. "[2^2,1^3]"."""
        parts = [f"{l}^{m}" if m > 1 else f"{l}" for l, m in self]
        return "[" + ",".join(parts) + "]"

    @classmethod
    def from_label(cls, text: str) -> "CycleType":
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        pairs = []
        for item in body.split(","):
            item = item.strip()
            if not item:
                continue
            if "^" in item:
                l, m = item.split("^")
                pairs.append((int(l), int(m)))
            else:
                pairs.append((int(item), 1))
        return cls(pairs)

    def __repr__(self):
        return f"CycleType({self.label()!r})"


def compose(p: Perm, q: Perm) -> Perm:
    return p * q


def cycle_type(p: Perm) -> CycleType:
    counts = {}
    for c in p.cycles(include_fixed=True):
        counts[len(c)] = counts.get(len(c), 0) + 1
    return CycleType(counts.items())


def element_order(p: Perm) -> int:
    o = 1
    for l, _ in cycle_type(p):
        o = o * l // gcd(o, l)
    return o


def prime_order_power(p: Perm, r: int) -> Perm:
    """p^(order/r), an element of prime order r; r must divide the order."""
    o = element_order(p)
    if o % r != 0:
        raise ValueError(f"{r} does not divide element order {o}")
    return p ** (o // r)


def is_even(p: Perm) -> bool:
    transpositions = sum(len(c) - 1 for c in p.cycles())
    return transpositions % 2 == 0


_CYCLE_RE = re.compile(r"\(\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\)")


def parse_cycles(text: str, n: int | None = None) -> Perm:
    """Parse 1-based cycle notation, e.g. "(1,2,3)(4,5)"; "()" is the identity."""
    stripped = text.replace(" ", "")
    pos = 0
    cycles = []
    maxpt = 0
    while pos < len(stripped):
        m = _CYCLE_RE.match(stripped, pos)
        if m is None:
            raise ValueError(f"cannot parse permutation {text!r} at position {pos}")
        body = m.group(1)
        if body:
            cyc = tuple(int(t) - 1 for t in body.split(","))
            if any(a < 0 for a in cyc):
                raise ValueError("points are 1-based; 0 is not a point")
            cycles.append(cyc)
            maxpt = max(maxpt, max(cyc) + 1)
        pos = m.end()
    if n is None:
        n = maxpt
    if n < maxpt:
        raise ValueError(f"degree {n} too small for a point {maxpt}")
    return Perm.from_cycles(cycles, n)


def format_cycles(p: Perm) -> str:
    """1-based cycle notation; identity renders as "()"."""
    cycs = [c for c in p.cycles()]
    cycs.sort(key=lambda c: min(c))
    if not cycs:
        return "()"
    out = []
    for c in cycs:
        i = c.index(min(c))
        c = c[i:] + c[:i]
        out.append("(" + ",".join(str(a + 1) for a in c) + ")")
    return "".join(out)
