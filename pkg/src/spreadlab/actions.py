"""Permutation actions beyond the natural one.

Coset actions, equal-part partition actions, suborbit structure, Saxl graphs
and small clique search.  Points of a coset action are canonical coset
representatives; partitions are tuples of parts sorted by least element.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import factorial

from .perm import Perm
from .stabchain import PermGroup

COSET_INDEX_CAP = 5_000_000
PARTITION_CAP = 10_000_000
SAXL_CAP = 100_000


@dataclass
class Action:
    parent: PermGroup
    points: list                 # labels (coset reps or other tokens)
    gen_images: list             # one Perm of the point set per parent generator
    stabilizer_images: list      # action images of point-0 stabilizer gens (may be empty)
    transitive: bool = True

    @property
    def size(self):
        return len(self.points)


def coset_action(G: PermGroup, H) -> Action:
    """Right-multiplication action of G on the cosets of H.

    H may be a PermGroup or a DistinguishedSubgroup; its order must be small
    enough to enumerate (canonical coset representative = min over H of h*g).
    """
    Hgrp = getattr(H, "group", H)
    index = G.order // Hgrp.order
    if index > COSET_INDEX_CAP:
        raise ValueError(f"coset index {index} exceeds cap {COSET_INDEX_CAP}")
    h_elems = [tuple(t) for t in Hgrp.chain.elements()]
    n = G.degree

    def canon(g):
        return min(tuple(g[x] for x in h) for h in h_elems)

    start = canon(tuple(range(n)))
    pts = [start]
    where = {start: 0}
    gens = [tuple(g) for g in G.generators]
    for rep in pts:
        for g in gens:
            im = canon(tuple(g[x] for x in rep))
            if im not in where:
                where[im] = len(pts)
                pts.append(im)
    if len(pts) != index:
        raise AssertionError("coset orbit does not match the index")
    gen_images = []
    for g in gens:
        gen_images.append(Perm([where[canon(tuple(g[x] for x in rep))] for rep in pts]))
    stab_images = []
    for h in Hgrp.generators:
        ht = tuple(h)
        stab_images.append(Perm([where[canon(tuple(ht[x] for x in rep))] for rep in pts]))
    return Action(G, pts, gen_images, stab_images)


def _point_stabilizer_images(act: Action):
    """Generators of the stabilizer of point 0, as point permutations."""
    if act.stabilizer_images:
        return act.stabilizer_images
    # Schreier generators at the base point
    n = act.size
    idn = tuple(range(n))
    tr = {0: idn}
    queue = [0]
    gens = [tuple(g) for g in act.gen_images]
    for d in queue:
        td = tr[d]
        for g in gens:
            c = g[d]
            if c not in tr:
                tr[c] = tuple(g[x] for x in td)
                queue.append(c)
    if len(tr) != n:
        raise ValueError("action is not transitive")
    out = []
    seen = set()
    for d in tr:
        td = tr[d]
        for g in gens:
            u = tuple(g[x] for x in td)
            w = tr[u[0]]
            winv = [0] * n
            for i, j in enumerate(w):
                winv[j] = i
            sch = tuple(winv[x] for x in u)
            if sch != idn and sch not in seen:
                seen.add(sch)
                out.append(Perm(sch))
    return out


def _orbits(gens, n):
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        for d in orb:
            for g in gens:
                c = g[d]
                if not seen[c]:
                    seen[c] = True
                    orb.append(c)
        orbits.append(orb)
    return orbits


def subdegrees(act: Action):
    """Orbit lengths of a point stabilizer on the remaining points.

    Returns a sorted list of (length, multiplicity) over nontrivial orbits;
    the fixed point 0 contributes the trivial (1, 1) entry, included.
    """
    stab = _point_stabilizer_images(act)
    orbits = _orbits(stab, act.size)
    counts = {}
    for orb in orbits:
        counts[len(orb)] = counts.get(len(orb), 0) + 1
    return sorted(counts.items())


def regular_orbit_count(act: Action) -> int:
    h_order = act.parent.order // act.size
    stab = _point_stabilizer_images(act)
    orbits = _orbits(stab, act.size)
    return sum(1 for orb in orbits if len(orb) == h_order)


def base_two_probability(act: Action) -> Fraction:
    h_order = act.parent.order // act.size
    return Fraction(regular_orbit_count(act) * h_order, act.size)


def action_group(act: Action) -> PermGroup:
    g = PermGroup(act.gen_images)
    if g.order != act.parent.order:
        raise ValueError("action is not faithful")
    return g


def saxl_graph(act: Action):
    """Adjacency bitsets: i ~ j iff the pointwise stabilizer of {i, j} is trivial."""
    n = act.size
    if n > SAXL_CAP:
        raise ValueError("point count exceeds the Saxl graph cap")
    ag = action_group(act)
    nonbase = [0] * n  # bitsets of points sharing a nontrivial stabilizer
    idn = tuple(range(n))
    for t in ag.chain.elements():
        if t == idn:
            continue
        fixed = [i for i in range(n) if t[i] == i]
        if len(fixed) < 2:
            continue
        mask = 0
        for i in fixed:
            mask |= 1 << i
        for i in fixed:
            nonbase[i] |= mask
    full = (1 << n) - 1
    return [(full & ~nonbase[i]) & ~(1 << i) for i in range(n)]


def saxl_degrees(graph):
    return [adj.bit_count() for adj in graph]


def has_clique(graph, k: int):
    """Exact k-clique search on adjacency bitsets; returns (found, witness)."""
    if k > 6:
        raise ValueError("clique search capped at k = 6")
    n = len(graph)
    if k <= 0:
        return True, []
    full = (1 << n) - 1

    def rec(cand, chosen, need):
        if need == 0:
            return chosen
        if cand.bit_count() < need:
            return None
        c = cand
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            # only extend with vertices above v to avoid permuted repeats
            res = rec(cand & graph[v] & ~((1 << (v + 1)) - 1), chosen + [v], need - 1)
            if res is not None:
                return res
            cand &= ~(1 << v)
            if cand.bit_count() < need:
                return None
        return None

    res = rec(full, [], k)
    return (res is not None), (res or [])


# -- equal-part partitions -------------------------------------------------------


def partition_count(n: int, l: int) -> int:
    if n % l:
        raise ValueError("l must divide n")
    s = n // l
    return factorial(n) // (factorial(s) ** l * factorial(l))


def enumerate_uniform_partitions(n: int, l: int):
    """All partitions of {0..n-1} into l parts of size n/l, canonical order.

    Canonical form: parts sorted by least element; the stream is
    lexicographic on that form.
    """
    if n % l:
        raise ValueError("l must divide n")
    if partition_count(n, l) > PARTITION_CAP:
        raise ValueError("partition count exceeds cap")
    s = n // l

    def rec(remaining, acc):
        if not remaining:
            yield tuple(acc)
            return
        anchor = remaining[0]
        rest = remaining[1:]
        from itertools import combinations
        for companions in combinations(rest, s - 1):
            part = (anchor,) + companions
            cset = set(companions)
            nxt = [x for x in rest if x not in cset]
            acc.append(part)
            yield from rec(nxt, acc)
            acc.pop()

    yield from rec(list(range(n)), [])


def partition_part_ids(n: int, l: int):
    """Stream of point -> part-index arrays, one per canonical partition."""
    for part in enumerate_uniform_partitions(n, l):
        pid = [0] * n
        for i, p in enumerate(part):
            for a in p:
                pid[a] = i
        yield pid


def stabilizes_partition(x, pid, l) -> bool:
    """True iff the permutation maps every part of the partition to a part."""
    mapped = [-1] * l
    for a, p in enumerate(pid):
        q = pid[x[a]]
        m = mapped[p]
        if m == -1:
            mapped[p] = q
        elif m != q:
            return False
    return True


def partition_fix_count(x: Perm, n: int, l: int) -> int:
    cnt = 0
    for pid in partition_part_ids(n, l):
        if stabilizes_partition(x, pid, l):
            cnt += 1
    return cnt


def partition_fix_counts_multi(xs, n: int, l: int):
    """Fix counts for many permutations in one pass over the partitions."""
    import numpy as np
    if n % l:
        raise ValueError("l must divide n")
    counts = [0] * len(xs)
    xa = [np.array(x, dtype=np.int16) for x in xs]
    block = []
    BLOCK = 65536

    def flush():
        if not block:
            return
        P = np.array(block, dtype=np.int16)
        for t, x in enumerate(xa):
            Q = P[:, x]
            keys = np.sort(P * np.int16(l) + Q, axis=1)
            distinct = 1 + np.count_nonzero(np.diff(keys, axis=1), axis=1)
            counts[t] += int(np.count_nonzero(distinct == l))
        block.clear()

    for pid in partition_part_ids(n, l):
        block.append(pid)
        if len(block) >= BLOCK:
            flush()
    flush()
    return counts
