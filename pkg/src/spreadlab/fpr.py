"""Fixed point ratios and the probabilistic certificates built from them.

All values are exact `Fraction`s.  A table row records, for one subgroup H
of a parent G and one prime-order class x^G, the count |x^G n H|, the class
size |x^G| and the ratio fpr(x, G/H) = |x^G n H| / |x^G|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .perm import Perm, CycleType, cycle_type, element_order, is_even
from .stabchain import PermGroup, _an_class_splits, _rep_of_cycle_type, _sn_class_size

H_ENUM_CAP = 2_000_000


@dataclass(frozen=True)
class FprRow:
    label: str
    count: int          # |x^G n H|
    class_size: int     # |x^G|
    fpr: Fraction


@dataclass(frozen=True)
class FprTable:
    subgroup_label: str
    subgroup_order: int
    rows: tuple

    def fpr_by_label(self):
        return {r.label: r.fpr for r in self.rows}

    def prime_order_elements_in_subgroup(self):
        return sum(r.count for r in self.rows)


@dataclass(frozen=True)
class Certificate:
    kind: str            # qhat | uniform-spread-lower | lemma-bd
    group: str
    class_label: str
    overgroups: tuple    # (label, order) pairs
    c: int
    value: Fraction
    conclusion: str


def _an_split_suffix(x, n) -> str:
    """'a' or 'b' for an element whose A_n class splits: 'a' iff conjugate to
    the normal-form representative by an even permutation."""
    ct = cycle_type(x)
    rep = _rep_of_cycle_type(ct, n)
    # build one conjugator g with rep^g = x from matching cycle words
    img = [0] * n
    rep_cycles = sorted(rep.cycles(include_fixed=True), key=lambda c: (-len(c), c))
    x_cycles = sorted(x.cycles(include_fixed=True), key=lambda c: (-len(c), c))
    for rc, xc in zip(rep_cycles, x_cycles):
        for a, b in zip(rc, xc):
            img[a] = b
    g = Perm(img)
    assert rep.conjugate(g) == x
    return "a" if is_even(g) else "b"


def classify_in_sn_an(x: Perm, kind: str, n: int) -> str:
    """G-class label of x in the natural S_n or A_n."""
    ct = cycle_type(x)
    if kind == "S":
        return ct.label()
    if not _an_class_splits(ct):
        return ct.label()
    return ct.label() + _an_split_suffix(x, n)


def prime_order_class_list(G: PermGroup, cap=H_ENUM_CAP):
    mode = "cycle-type" if G.natural else "enumerate"
    return G.prime_order_class_reps(mode=mode, cap=cap)


def fpr_table(G: PermGroup, H, cap=H_ENUM_CAP, subgroup_label=None) -> FprTable:
    """Exact fpr table of H inside G over all prime-order G-classes.

    H's elements are enumerated (streamed) and each prime-order element is
    classified into its G-class.
    """
    Hgrp = getattr(H, "group", H)
    label = subgroup_label or getattr(H, "label", "subgroup")
    if Hgrp.order > cap:
        raise ValueError(f"subgroup order {Hgrp.order} exceeds cap {cap}")
    classes = prime_order_class_list(G, cap=cap)
    counts = {c.label: 0 for c in classes}
    if G.natural is not None:
        kind, n = G.natural
        tallies = {}
        split_tallies = {}
        for t in Hgrp.chain.elements():
            ct = _cycle_type_of_tuple(t)
            o = _order_of_ct(ct)
            if o < 2 or not _is_prime(o):
                continue
            if kind == "A" and _an_class_splits_ct(ct):
                suf = _an_split_suffix(Perm(t), n)
                key = _ct_label(ct) + suf
                split_tallies[key] = split_tallies.get(key, 0) + 1
            else:
                key = _ct_label(ct)
                tallies[key] = tallies.get(key, 0) + 1
        tallies.update(split_tallies)
        for k, v in tallies.items():
            if k not in counts:
                raise ValueError(f"unclassifiable subgroup element of type {k}")
            counts[k] = v
    else:
        G._classes_by_enumeration(cap)
        for t in Hgrp.chain.elements():
            p = Perm(t)
            o = element_order(p)
            if o < 2 or not _is_prime(o):
                continue
            info = G.class_of(p)
            counts[info.label] += 1
    rows = []
    for c in classes:
        cnt = counts[c.label]
        rows.append(FprRow(c.label, cnt, c.class_size, Fraction(cnt, c.class_size)))
    return FprTable(label, Hgrp.order, tuple(rows))


def _cycle_type_of_tuple(t):
    n = len(t)
    seen = [False] * n
    counts = {}
    for i in range(n):
        if seen[i]:
            continue
        ln = 1
        seen[i] = True
        j = t[i]
        while j != i:
            seen[j] = True
            ln += 1
            j = t[j]
        counts[ln] = counts.get(ln, 0) + 1
    return tuple(sorted(counts.items(), reverse=True))


def _order_of_ct(ct):
    from math import gcd
    o = 1
    for l, _ in ct:
        o = o * l // gcd(o, l)
    return o


def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _an_class_splits_ct(ct):
    return all(l % 2 == 1 and m == 1 for l, m in ct)


def _ct_label(ct):
    return "[" + ",".join(f"{l}^{m}" if m > 1 else f"{l}" for l, m in ct) + "]"


def qhat(G: PermGroup, class_label: str, tables, c: int, group_name="G") -> Certificate:
    """The upper bound sum |x^G| (sum_H fpr(x, G/H))^c over prime-order classes.

    `tables` are FprTables, one per overgroup, conjugate copies listed
    individually.
    """
    per_class = {}
    sizes = {}
    for tab in tables:
        for row in tab.rows:
            per_class[row.label] = per_class.get(row.label, Fraction(0)) + row.fpr
            sizes[row.label] = row.class_size
    total = Fraction(0)
    for label, fsum in per_class.items():
        total += sizes[label] * fsum ** c
    if total < 1:
        conclusion = (f"gamma_u <= {c} witnessed by class {class_label}"
                      f" (bound {total} < 1)")
    else:
        conclusion = f"inconclusive (bound {total} >= 1)"
    return Certificate("qhat", group_name, class_label,
                       tuple((t.subgroup_label, t.subgroup_order) for t in tables),
                       c, total, conclusion)


def uniform_spread_lower(G: PermGroup, class_label: str, tables,
                         group_name="G") -> Certificate:
    """Largest k with max_x sum_H fpr(x, G/H) < 1/k over prime-order x."""
    per_class = {}
    for tab in tables:
        for row in tab.rows:
            per_class[row.label] = per_class.get(row.label, Fraction(0)) + row.fpr
    maxfpr = max(per_class.values())
    if maxfpr == 0:
        raise ValueError("all fixed point ratios vanish")
    k_max = (maxfpr.denominator - 1) // maxfpr.numerator
    return Certificate(
        "uniform-spread-lower", group_name, class_label,
        tuple((t.subgroup_label, t.subgroup_order) for t in tables),
        k_max, maxfpr,
        f"u(G) >= {k_max} (max fpr sum {maxfpr} < 1/{k_max})")


def lemma_bd_bound(A, B, c: int) -> Fraction:
    """B^(1-c) * (sum A_j)^c, the aggregated fixed-point-ratio bound."""
    if B <= 0:
        raise ValueError("B must be positive")
    if c < 1:
        raise ValueError("c must be a positive integer")
    s = sum(Fraction(a) for a in A)
    return Fraction(B) ** (1 - c) * s ** c


# -- closed partition-action formulas ------------------------------------------


def closed_fpr_3cycle(n: int, l: int) -> Fraction:
    """fpr of a 3-cycle on the l-part equal partitions; 0 when parts are small."""
    if n % l or not 1 < l < n:
        raise ValueError("need l | n with 1 < l < n")
    s = n // l
    if s < 3:
        return Fraction(0)
    return Fraction(s * (s - 1) * (s - 2) * l, n * (n - 1) * (n - 2))


def closed_fpr_half_odd(n: int, p: int, k: int) -> Fraction:
    """fpr of shape [p^k, 1^(n-pk)] (p an odd prime) on the n/2-part partitions."""
    if n % 2:
        raise ValueError("n must be even")
    if p < 3 or not _is_prime(p):
        raise ValueError("p must be an odd prime")
    if k < 1 or p * k > n:
        raise ValueError("shape does not fit")
    if k % 2 == 1:
        return Fraction(0)
    l = n // 2
    t = p * k // 2
    pairings = p ** (k // 2) * factorial(k) // (factorial(k // 2) * 2 ** (k // 2))
    fixed_pairs = factorial(2 * l - 2 * t) // (factorial(l - t) * 2 ** (l - t))
    total = factorial(2 * l) // (factorial(l) * 2 ** l)
    return Fraction(pairings * fixed_pairs, total)


def closed_fpr_half_even(n: int, k: int) -> Fraction:
    """fpr of shape [2^k, 1^(n-2k)] on the n/2-part partitions."""
    if n % 2:
        raise ValueError("n must be even")
    l = n // 2
    if not 1 <= k <= l:
        raise ValueError("need 1 <= k <= n/2")
    choices = 0
    for i in range(k // 2 + 1):
        # i pairs of parts swapped (2 ways to align each pair of 2-cycles),
        # k-2i parts equal to 2-cycles, the rest fixed pointwise
        choices += factorial(k) // (factorial(k - 2 * i) * factorial(i))
    fixed_pairs = factorial(2 * l - 2 * k) // (factorial(l - k) * 2 ** (l - k))
    total = factorial(2 * l) // (factorial(l) * 2 ** l)
    return Fraction(choices * fixed_pairs, total)


# -- bound verification ----------------------------------------------------------


@dataclass(frozen=True)
class FprBoundCase:
    n: int
    l: int
    shape: str
    fpr: Fraction
    bound: Fraction
    holds: bool

    @property
    def margin(self):
        return self.bound - self.fpr


def piecewise_fpr_bound(n: int, l: int, p: int, k: int) -> Fraction:
    """The piecewise partition-action bound for shape [p^k, 1^(n-pk)]."""
    if p == 2:
        if k == 1:
            return Fraction(1, l)
        if k == 2:
            if 2 * l == n:
                return Fraction(6, n * n)
            if l == 2:
                return Fraction(33, 128)
            return Fraction(1, l * l)
        if 6 * l > n:
            return Fraction(1, l * l)
        return Fraction(1, l ** 3)
    if (p, k) == (3, 1) or 6 * l > n:
        return Fraction(1, l * l)
    return Fraction(1, l ** 3)


def verify_fpr_lemma_bounds(n_lo=8, n_hi=14):
    """Exact enumeration check of the partition fpr bounds for small n."""
    from .actions import partition_count, partition_fix_counts_multi
    out = []
    for n in range(n_lo, n_hi + 1):
        divisors = [l for l in range(2, n) if n % l == 0]
        if not divisors:
            continue
        shapes = []
        for p in [q for q in range(2, n + 1) if _is_prime(q)]:
            for k in range(1, n // p + 1):
                shapes.append((p, k))
        xs = []
        for p, k in shapes:
            cycles = [tuple(range(i * p, (i + 1) * p)) for i in range(k)]
            xs.append(Perm.from_cycles(cycles, n))
        for l in divisors:
            total = partition_count(n, l)
            counts = partition_fix_counts_multi(xs, n, l)
            for (p, k), cnt in zip(shapes, counts):
                f = Fraction(cnt, total)
                b = piecewise_fpr_bound(n, l, p, k)
                shape = f"[{p}^{k},1^{n - p * k}]" if p * k < n else f"[{p}^{k}]"
                out.append(FprBoundCase(n, l, shape, f, b, f < b))
    return out
