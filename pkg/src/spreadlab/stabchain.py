"""Stabilizer chains and the group operations built on them.

Everything here works on raw image tuples internally; `Perm` is a tuple
subclass, so public API values pass straight through.  Chains are built with
a deterministic incremental Schreier-Sims; the two-element generation test
(`generates`) is the hot path of the whole library and stays lean.
"""

from __future__ import annotations

import hashlib
import os
import struct
from dataclasses import dataclass
from math import factorial

from .perm import Perm, CycleType, cycle_type, element_order, is_even

CACHE_HEADER = b"SPREADLAB-CHAIN v1\n"
DEFAULT_ELEMENT_CAP = 2_000_000


def _inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


class StabilizerChain:
    """Base points, transversals and strong generators for a permutation group."""

    __slots__ = ("degree", "base", "lgens", "trans", "itrans", "order", "truncated")

    def __init__(self, gens, degree, base_hint=(), stop_above=None):
        self.degree = degree
        self.base = []
        self.lgens = []   # lgens[i]: strong generators fixing base[:i]
        self.trans = []   # trans[i]: point -> u with u[base[i]] = point
        self.itrans = []  # inverses of trans entries
        self.truncated = False
        idn = tuple(range(degree))
        hint = list(base_hint) + [p for p in range(degree) if p not in base_hint]
        self._build(gens, idn, hint, stop_above)

    def _build(self, gens, idn, hint, stop_above):
        # Bottom-up deterministic Schreier-Sims: verify each level against its
        # Schreier generators, siftig residues deeper, jumping back on failure.
        base, lgens, trans, itrans = self.base, self.lgens, self.trans, self.itrans
        # lgens[i] holds the strong generators whose deepest fixed prefix is
        # base[:i]; the level-i group is generated by lgens[i] + all deeper.

        def extend_base(g):
            for p in hint:
                if g[p] != p:
                    base.append(p)
                    lgens.append([])
                    trans.append(None)
                    itrans.append(None)
                    return
            raise AssertionError("non-identity perm moves no point")

        def place(g):
            """Insert strong generator g at the level of its fixed prefix."""
            j = 0
            while j < len(base) and g[base[j]] == base[j]:
                j += 1
            if j == len(base):
                extend_base(g)
            lgens[j].append(g)
            return j

        def strip(g, frm):
            for i in range(frm, len(base)):
                b = g[base[i]]
                ui = itrans[i].get(b)
                if ui is None:
                    return g, i
                g = tuple(ui[x] for x in g)
            return g, len(base)

        def gens_at(i):
            return [g for lg in lgens[i:] for g in lg]

        def orbit(i, gs):
            b = base[i]
            t = {b: idn}
            it = {b: idn}
            queue = [b]
            for d in queue:
                td = t[d]
                for s in gs:
                    c = s[d]
                    if c not in t:
                        u = tuple(s[x] for x in td)
                        t[c] = u
                        it[c] = _inv(u)
                        queue.append(c)
            trans[i] = t
            itrans[i] = it
            return queue

        initial = [tuple(g) for g in gens if tuple(g) != idn]
        for g in initial:
            place(g)

        def over_budget():
            # transversal products inject into the group, so once the partial
            # product exceeds stop_above the group order does too
            if stop_above is None:
                return False
            prod = 1
            for t in trans:
                if t is not None:
                    prod *= len(t)
            return prod > stop_above

        done = [set() for _ in base]  # (orbit point, gen) pairs already verified
        while len(done) < len(base):
            done.append(set())
        i = len(base) - 1
        while i >= 0:
            if over_budget():
                self.truncated = True
                break
            gs = gens_at(i)
            if trans[i] is None:
                pts = orbit(i, gs)
            else:
                # extend the existing orbit in place under the current gens
                t, it = trans[i], itrans[i]
                pts = list(t)
                for d in pts:
                    td = t[d]
                    for s in gs:
                        c = s[d]
                        if c not in t:
                            u = tuple(s[x] for x in td)
                            t[c] = u
                            it[c] = _inv(u)
                            pts.append(c)
            bi = base[i]
            t = trans[i]
            it = itrans[i]
            seen = done[i]
            clean = True
            for d in pts:
                td = t[d]
                for s in gs:
                    if (d, s) in seen:
                        continue
                    seen.add((d, s))
                    u = tuple(s[x] for x in td)          # td * s
                    w = it[u[bi]]
                    sch = tuple(w[x] for x in u)         # Schreier generator
                    if sch == idn:
                        continue
                    res, j = strip(sch, i + 1)
                    if res != idn:
                        if j == len(base):
                            extend_base(res)
                            done.append(set())
                        lgens[j].append(res)
                        i = j
                        clean = False
                        break
                if not clean:
                    break
            if clean:
                i -= 1
        o = 1
        for t in trans:
            if t is not None:
                o *= len(t)
        self.order = o

    def sift(self, g):
        """Strip g through the chain; returns the residue (identity iff member)."""
        for i in range(len(self.base)):
            b = g[self.base[i]]
            ui = self.itrans[i].get(b)
            if ui is None:
                return g
            g = tuple(ui[x] for x in g)
        return g

    def contains(self, g) -> bool:
        idn = tuple(range(self.degree))
        return self.sift(tuple(g)) == idn

    def elements(self):
        """Yield every element exactly once, chain-coset lexicographic order."""
        levels = [sorted(t.items()) for t in self.trans]
        m = len(levels)
        idn = tuple(range(self.degree))

        # element = u_{m-1} * ... * u_0 (right cosets Stab*u at each level)
        def rec2(i, suffix):
            if i == m:
                yield suffix
                return
            for _, u in levels[i]:
                yield from rec2(i + 1, tuple(suffix[x] for x in u))

        yield from rec2(0, idn)

    def random_element(self, rng):
        """Uniformly random element via independent transversal choices."""
        g = tuple(range(self.degree))
        for t in self.trans:
            pts = sorted(t)
            u = t[pts[rng.randrange(len(pts))]]
            g = tuple(u[x] for x in g)
        return Perm(g)


def two_generated_order(x, y, degree, base_hint=()):
    """Order of <x, y>; the generation-test primitive."""
    return StabilizerChain((tuple(x), tuple(y)), degree, base_hint).order


def two_generated_exceeds(x, y, degree, base_hint, bound):
    """True iff |<x, y>| > bound; aborts chain construction early on success."""
    ch = StabilizerChain((tuple(x), tuple(y)), degree, base_hint, stop_above=bound)
    return ch.truncated or ch.order > bound


def generates_pair(x, y, degree, base_hint, group_order):
    """True iff <x, y> has the given order, assuming x, y lie in that group.

    Uses the index-2 bound: a proper subgroup has order at most half the
    group order, so exceeding group_order // 2 already proves generation.
    """
    return two_generated_exceeds(x, y, degree, base_hint, group_order // 2)


@dataclass(frozen=True)
class ConjClassInfo:
    representative: Perm
    element_order: int
    class_size: int
    label: str

    def is_prime_order(self) -> bool:
        o = self.element_order
        if o < 2:
            return False
        return all(o % d for d in range(2, int(o ** 0.5) + 1))


class PermGroup:
    """A permutation group with a stabilizer chain.

    Immutable after construction.  `natural` tags the natural symmetric or
    alternating groups ("S", n) / ("A", n) so that class machinery can use
    cycle types instead of enumeration.
    """

    def __init__(self, generators, degree=None, natural=None, base_hint=(), chain=None):
        gens = [g if isinstance(g, Perm) else Perm(g) for g in generators]
        if not gens:
            raise ValueError("need at least one generator")
        if degree is None:
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("generator degree mismatch")
        self.degree = degree
        self.generators = tuple(gens)
        self.natural = natural
        self.chain = chain if chain is not None else StabilizerChain(
            [tuple(g) for g in gens], degree, base_hint)
        self.order = self.chain.order
        self._class_map = None
        self._classes = None

    # -- basic structure ----------------------------------------------------

    def membership(self, p) -> bool:
        if len(p) != self.degree:
            raise ValueError("degree mismatch")
        return self.chain.contains(tuple(p))

    def generates(self, x, y) -> bool:
        """True iff <x, y> is the whole group; x and y must be members."""
        if not (self.membership(x) and self.membership(y)):
            raise ValueError("element not in group")
        return generates_pair(x, y, self.degree, self.chain.base, self.order)

    def enumerate_elements(self, cap=DEFAULT_ELEMENT_CAP):
        if self.order > cap:
            raise ValueError(f"group order {self.order} exceeds cap {cap}")
        return (Perm(t) for t in self.chain.elements())

    def random_element(self, rng):
        return self.chain.random_element(rng)

    # -- conjugacy classes ---------------------------------------------------

    def conjugacy_classes(self, mode="enumerate", cap=DEFAULT_ELEMENT_CAP):
        if mode == "cycle-type":
            if self.natural is None:
                raise ValueError("cycle-type mode needs a natural S_n or A_n group")
            return self._classes_by_cycle_type()
        if mode != "enumerate":
            raise ValueError(f"unknown mode {mode!r}")
        return self._classes_by_enumeration(cap)

    def _classes_by_enumeration(self, cap):
        if self._classes is not None:
            return self._classes
        if self.order > cap:
            raise ValueError(f"group order {self.order} exceeds cap {cap}")
        gens = [tuple(g) for g in self.generators]
        igens = [_inv(g) for g in gens]
        seen = {}
        classes = []
        order_index = {}
        for t in self.chain.elements():
            if t in seen:
                continue
            # conjugation orbit of t
            orbit = [t]
            seen[t] = len(classes)
            for x in orbit:
                for g, gi in zip(gens, igens):
                    y = tuple(g[x[gi[i]]] for i in range(self.degree))
                    if y not in seen:
                        seen[y] = len(classes)
                        orbit.append(y)
            rep = Perm(t)
            o = element_order(rep)
            if self.natural is not None:
                label = cycle_type(rep).label()
            else:
                k = order_index.get(o, 0)
                order_index[o] = k + 1
                label = f"o{o}-{k}"
            classes.append(ConjClassInfo(rep, o, len(orbit), label))
        classes.sort(key=lambda c: (c.element_order, c.class_size, c.label))
        self._classes = classes
        self._class_map = seen
        self._classes_sorted_ids = None
        return classes

    def class_of(self, p, cap=DEFAULT_ELEMENT_CAP):
        """ConjClassInfo of the class containing p (enumerate mode)."""
        classes = self._classes_by_enumeration(cap)
        idx = self._class_map.get(tuple(p))
        if idx is None:
            raise ValueError("element not in group")
        # _class_map indices refer to discovery order; rebuild lookup by rep
        if not hasattr(self, "_discovery"):
            # map discovery index -> sorted ConjClassInfo
            by_rep = {}
            seen_idx = {}
            for t, i in self._class_map.items():
                if i not in seen_idx:
                    seen_idx[i] = t
            discovery = {}
            for c in classes:
                discovery[self._class_map[tuple(c.representative)]] = c
            self._discovery = discovery
        return self._discovery[idx]

    def _classes_by_cycle_type(self):
        kind, n = self.natural
        out = []
        for part in _partitions(n):
            ct = CycleType((l, part.count(l)) for l in set(part))
            size = _sn_class_size(n, ct)
            parity_even = sum((l - 1) * m for l, m in ct) % 2 == 0
            rep = _rep_of_cycle_type(ct, n)
            o = 1
            for l, _ in ct:
                o = _lcm(o, l)
            if kind == "S":
                out.append(ConjClassInfo(rep, o, size, ct.label()))
            else:
                if not parity_even:
                    continue
                if _an_class_splits(ct):
                    swap = Perm.from_cycles([_first_swap(ct)], n)
                    rep_b = rep.conjugate(swap)
                    out.append(ConjClassInfo(rep, o, size // 2, ct.label() + "a"))
                    out.append(ConjClassInfo(rep_b, o, size // 2, ct.label() + "b"))
                else:
                    out.append(ConjClassInfo(rep, o, size, ct.label()))
        out.sort(key=lambda c: (c.element_order, c.class_size, c.label))
        return out

    def prime_order_class_reps(self, mode=None, cap=DEFAULT_ELEMENT_CAP):
        if mode is None:
            mode = "cycle-type" if self.natural else "enumerate"
        return [c for c in self.conjugacy_classes(mode, cap=cap) if c.is_prime_order()]

    def centralizer_order(self, x, cap=DEFAULT_ELEMENT_CAP):
        x = tuple(x)
        if not self.chain.contains(x):
            raise ValueError("element not in group")
        if self.natural is not None:
            ct = cycle_type(Perm(x))
            kind, n = self.natural
            c = _sn_centralizer_order(ct)
            if kind == "S":
                return c
            return c if _an_class_splits(ct) else c // 2
        # conjugation orbit
        gens = [tuple(g) for g in self.generators]
        igens = [_inv(g) for g in gens]
        orbit = {x}
        queue = [x]
        for t in queue:
            for g, gi in zip(gens, igens):
                y = tuple(g[t[gi[i]]] for i in range(self.degree))
                if y not in orbit:
                    if len(orbit) >= cap:
                        raise ValueError("class orbit exceeds cap")
                    orbit.add(y)
                    queue.append(y)
        return self.order // len(orbit)

    # -- cache ----------------------------------------------------------------

    def cache_key(self) -> str:
        h = hashlib.sha256()
        h.update(struct.pack(">I", self.degree))
        for g in self.generators:
            h.update(struct.pack(f">{self.degree}I", *g))
        return h.hexdigest()

    def save_chain(self, cache_dir):
        os.makedirs(cache_dir, exist_ok=True)
        path = os.path.join(cache_dir, self.cache_key() + ".chain")
        ch = self.chain
        n = self.degree
        parts = [CACHE_HEADER, struct.pack(">II", n, len(ch.base))]
        parts.append(struct.pack(f">{len(ch.base)}I", *ch.base))
        order_bytes = str(ch.order).encode()
        parts.append(struct.pack(">I", len(order_bytes)))
        parts.append(order_bytes)
        for i in range(len(ch.base)):
            gs = ch.lgens[i]
            t = sorted(ch.trans[i].items())
            parts.append(struct.pack(">II", len(gs), len(t)))
            for g in gs:
                parts.append(struct.pack(f">{n}I", *g))
            for pt, u in t:
                parts.append(struct.pack(">I", pt))
                parts.append(struct.pack(f">{n}I", *u))
        with open(path, "wb") as f:
            f.write(b"".join(parts))
        return path

    @staticmethod
    def load_chain(generators, cache_dir, natural=None):
        """Rebuild a PermGroup from a cached chain; returns None on miss."""
        gens = [g if isinstance(g, Perm) else Perm(g) for g in generators]
        probe = PermGroup.__new__(PermGroup)
        probe.degree = gens[0].degree
        probe.generators = tuple(gens)
        path = os.path.join(cache_dir, PermGroup.cache_key(probe) + ".chain")
        if not os.path.exists(path):
            return None
        with open(path, "rb") as f:
            blob = f.read()
        if not blob.startswith(CACHE_HEADER):
            raise ValueError("bad cache header")
        off = len(CACHE_HEADER)
        n, nbase = struct.unpack_from(">II", blob, off)
        off += 8
        base = list(struct.unpack_from(f">{nbase}I", blob, off))
        off += 4 * nbase
        (olen,) = struct.unpack_from(">I", blob, off)
        off += 4
        order = int(blob[off:off + olen].decode())
        off += olen
        ch = StabilizerChain.__new__(StabilizerChain)
        ch.degree = n
        ch.base = base
        ch.lgens, ch.trans, ch.itrans = [], [], []
        for _ in range(nbase):
            ngs, nt = struct.unpack_from(">II", blob, off)
            off += 8
            gs = []
            for _ in range(ngs):
                gs.append(struct.unpack_from(f">{n}I", blob, off))
                off += 4 * n
            t, it = {}, {}
            for _ in range(nt):
                (pt,) = struct.unpack_from(">I", blob, off)
                off += 4
                u = struct.unpack_from(f">{n}I", blob, off)
                off += 4 * n
                t[pt] = u
                it[pt] = _inv(u)
            ch.lgens.append(gs)
            ch.trans.append(t)
            ch.itrans.append(it)
        ch.order = order
        o = 1
        for t in ch.trans:
            o *= len(t)
        if o != order:
            raise ValueError("cache order mismatch")
        idn = tuple(range(n))
        for g in gens:
            if ch.sift(tuple(g)) != idn:
                raise ValueError("cached chain rejects a generator")
        return PermGroup(gens, degree=n, natural=natural, chain=ch)


def build_group(generators, natural=None, base_hint=(), cache_dir=None) -> PermGroup:
    """Construct a PermGroup, optionally via the chain cache."""
    if cache_dir is not None:
        cached = PermGroup.load_chain(list(generators), cache_dir, natural=natural)
        if cached is not None:
            return cached
    g = PermGroup(generators, natural=natural, base_hint=base_hint)
    if cache_dir is not None:
        g.save_chain(cache_dir)
    return g


def group_order(group: PermGroup) -> int:
    return group.order


# -- symmetric/alternating class-size arithmetic --------------------------------


def _lcm(a, b):
    from math import gcd
    return a * b // gcd(a, b)


def _partitions(n):
    """Partitions of n as weakly decreasing tuples."""
    if n == 0:
        yield ()
        return
    def rec(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail
    yield from rec(n, n)


def _sn_centralizer_order(ct: CycleType) -> int:
    c = 1
    for l, m in ct:
        c *= (l ** m) * factorial(m)
    return c


def _sn_class_size(n, ct: CycleType) -> int:
    return factorial(n) // _sn_centralizer_order(ct)


def _an_class_splits(ct: CycleType) -> bool:
    """Even class of A_n splits iff all cycle lengths are odd and distinct."""
    return all(l % 2 == 1 and m == 1 for l, m in ct)


def _rep_of_cycle_type(ct: CycleType, n):
    cycles = []
    start = 0
    for l, m in ct:
        for _ in range(m):
            if l > 1:
                cycles.append(tuple(range(start, start + l)))
            start += l
    return Perm.from_cycles(cycles, n)


def _first_swap(ct: CycleType):
    # a transposition inside the longest cycle; conjugating by it lands in
    # the other A_n class when the class splits
    return (0, 1)
