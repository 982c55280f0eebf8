"""Constructors for the concrete group families and their closed-form data.

Every constructor builds a permutation group on a canonical point set, then
asserts the documented order, so a wrong generator or table entry fails fast
instead of silently producing a different group.

Spec grammar for group specs: "S:7", "A:13", "PSL2:11", "PGL2:9",
"PGammaL:3:3", "Sz:8", "Frob:7:1:3", "M23".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from . import m23_data
from .gf import field, factorize, is_prime, primitive_element
from .perm import Perm, cycle_type, element_order, is_even, parse_cycles, CycleType
from .stabchain import ConjClassInfo, PermGroup, _an_class_splits, _rep_of_cycle_type


@dataclass(frozen=True)
class GroupSpec:
    family: str
    params: tuple

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        parts = text.strip().split(":")
        family = parts[0]
        params = tuple(int(p) for p in parts[1:])
        spec = cls(family, params)
        spec.validate()
        return spec

    def validate(self):
        fam, ps = self.family, self.params
        if fam in ("S", "A"):
            if len(ps) != 1 or ps[0] < 3:
                raise ValueError(f"{fam} needs a degree >= 3")
        elif fam in ("PSL2", "PGL2"):
            if len(ps) != 1:
                raise ValueError(f"{fam} needs one parameter q")
            q = ps[0]
            _prime_power(q)
            if fam == "PSL2" and q < 4:
                raise ValueError("PSL2 requires q >= 4")
            if fam == "PGL2" and (q < 5 or q % 2 == 0):
                raise ValueError("PGL2 constructor covers odd q >= 5")
        elif fam == "PGammaL":
            if len(ps) != 2 or ps[0] < 2:
                raise ValueError("PGammaL needs dimension d >= 2 and q")
            _prime_power(ps[1])
        elif fam == "Sz":
            q = ps[0] if len(ps) == 1 else 0
            m = _suzuki_m(q)
            if m is None:
                raise ValueError("Sz requires q = 2^(2m+1) with m >= 1")
        elif fam == "Frob":
            if len(ps) != 3:
                raise ValueError("Frob needs p:f:k")
            p, f, k = ps
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if f < 1 or k < 2:
                raise ValueError("Frob needs f >= 1 and k >= 2")
            n = p ** f - 1
            if n % k != 0:
                raise ValueError(f"k={k} does not divide p^f-1={n}")
            for e in _proper_divisors(f):
                if (p ** e - 1) % k == 0:
                    raise ValueError(
                        f"Frob action reducible: k={k} divides p^{e}-1")
        elif fam == "M23":
            if ps:
                raise ValueError("M23 takes no parameters")
        else:
            raise ValueError(f"unknown family {fam!r}")

    def text(self) -> str:
        return ":".join([self.family] + [str(p) for p in self.params])

    def __str__(self):
        return self.text()


@dataclass(frozen=True)
class DistinguishedSubgroup:
    label: str
    role: str
    group: PermGroup

    @property
    def generators(self):
        return self.group.generators

    @property
    def order(self):
        return self.group.order


def _prime_power(q):
    fs = factorize(q)
    if len(fs) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, k),) = fs.items()
    return p, k


def _proper_divisors(f):
    return [e for e in range(1, f) if f % e == 0]


def _suzuki_m(q):
    if q < 8:
        return None
    p, k = factorize(q).popitem() if len(factorize(q)) == 1 else (0, 0)
    if p != 2 or k % 2 == 0 or k < 3:
        return None
    return (k - 1) // 2


# -- constructors -----------------------------------------------------------


def construct(spec: GroupSpec, cache_dir=None) -> PermGroup:
    spec.validate()
    fam, ps = spec.family, spec.params
    if fam == "S":
        return symmetric_group(ps[0])
    if fam == "A":
        return alternating_group(ps[0])
    if fam == "PSL2":
        return psl2(ps[0])
    if fam == "PGL2":
        return pgl2(ps[0])
    if fam == "PGammaL":
        return pgammal(ps[0], ps[1])
    if fam == "Sz":
        return suzuki_group(ps[0])
    if fam == "Frob":
        return frobenius_group(*ps)
    if fam == "M23":
        return m23_group()
    raise AssertionError


def symmetric_group(n: int) -> PermGroup:
    gens = [Perm.from_cycles([(0, 1)], n)]
    if n > 2:
        gens.append(Perm.from_cycles([tuple(range(n))], n))
    g = PermGroup(gens, natural=("S", n))
    assert g.order == _factorial(n)
    return g


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        raise ValueError("A_n needs n >= 3")
    gens = [Perm.from_cycles([(0, 1, 2)], n)]
    if n > 3:
        if n % 2 == 1:
            gens.append(Perm.from_cycles([tuple(range(n))], n))
        else:
            gens.append(Perm.from_cycles([tuple(range(1, n))], n))
    g = PermGroup(gens, natural=("A", n))
    assert g.order == _factorial(n) // 2
    return g


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _mobius_perm(F, a, b, c, d):
    """Permutation of P^1(F): field value v at index v, infinity at index q."""
    q = F.q
    det = F._sub(F._mul(a, d), F._mul(b, c))
    if det == 0:
        raise ValueError("singular matrix")
    img = [0] * (q + 1)
    for z in range(q):
        num = F._add(F._mul(a, z), b)
        den = F._add(F._mul(c, z), d)
        img[z] = q if den == 0 else F._mul(num, F._inv(den))
    img[q] = q if c == 0 else F._mul(a, F._inv(c))
    return Perm(img)


def _l2_torus_matrix(F):
    """A 2x2 companion matrix whose image in PGL2(q) has order q + 1."""
    q = F.q
    for a in range(q):
        for b in range(q):
            # C = [[0, 1], [b, a]]: char poly x^2 - a x - b
            m = (0, 1, b, a)
            o = _pgl_matrix_order(F, m)
            if o == q + 1:
                return m
    raise AssertionError("no torus generator found")


def _mat_mul(F, m1, m2):
    a1, b1, c1, d1 = m1
    a2, b2, c2, d2 = m2
    return (
        F._add(F._mul(a1, a2), F._mul(b1, c2)),
        F._add(F._mul(a1, b2), F._mul(b1, d2)),
        F._add(F._mul(c1, a2), F._mul(d1, c2)),
        F._add(F._mul(c1, b2), F._mul(d1, d2)),
    )


def _is_scalar(m):
    a, b, c, d = m
    return b == 0 and c == 0 and a == d


def _pgl_matrix_order(F, m):
    acc = m
    for o in range(1, F.q * F.q):
        if _is_scalar(acc):
            return o
        acc = _mat_mul(F, acc, m)
    raise AssertionError


def psl2(q: int) -> PermGroup:
    p, k = _prime_power(q)
    F = field(p, k)
    w = primitive_element(F).val
    gens = [_mobius_perm(F, 1, 1, 0, 1), _mobius_perm(F, 0, F._sub(0, 1), 1, 0)]
    if q > 3:
        gens.append(_mobius_perm(F, F._mul(w, w), 0, 0, 1))
    g = PermGroup(gens)
    assert g.order == q * (q * q - 1) // gcd(2, q - 1)
    return g


def pgl2(q: int) -> PermGroup:
    p, k = _prime_power(q)
    F = field(p, k)
    w = primitive_element(F).val
    gens = [_mobius_perm(F, 1, 1, 0, 1), _mobius_perm(F, 0, F._sub(0, 1), 1, 0),
            _mobius_perm(F, w, 0, 0, 1)]
    g = PermGroup(gens)
    assert g.order == q * (q * q - 1)
    return g


def _projective_points(F, d):
    """Normalized representatives of 1-spaces of F^d, in lex order."""
    q = F.q
    pts = []
    seen = set()
    for code in range(q ** d):
        v = []
        c = code
        for _ in range(d):
            v.append(c % q)
            c //= q
        v = tuple(v)
        if all(x == 0 for x in v):
            continue
        lead = next(i for i in range(d) if v[i])
        inv = F._inv(v[lead])
        nv = tuple(F._mul(inv, x) for x in v)
        if nv not in seen:
            seen.add(nv)
            pts.append(nv)
    return pts


def _proj_perm_from_matrix(F, d, mat, pts, index):
    img = []
    for v in pts:
        w = [0] * d
        for i in range(d):
            vi = v[i]
            if vi:
                row = mat[i]
                for j in range(d):
                    if row[j]:
                        w[j] = F._add(w[j], F._mul(vi, row[j]))
        lead = next(i for i in range(d) if w[i])
        inv = F._inv(w[lead])
        img.append(index[tuple(F._mul(inv, x) for x in w)])
    return Perm(img)


def pgammal(d: int, q: int) -> PermGroup:
    p, k = _prime_power(q)
    F = field(p, k)
    pts = _projective_points(F, d)
    index = {v: i for i, v in enumerate(pts)}
    w = primitive_element(F).val
    one, zero = 1, 0
    diag = [[w if i == j == 0 else (one if i == j else zero) for j in range(d)]
            for i in range(d)]
    cyc = [[one if j == (i + 1) % d else zero for j in range(d)] for i in range(d)]
    trans = [[one if i == j else zero for j in range(d)] for i in range(d)]
    trans[0][1] = one
    gens = [_proj_perm_from_matrix(F, d, m, pts, index) for m in (diag, cyc, trans)]
    if k > 1:
        img = []
        for v in pts:
            wv = tuple(F._pow(x, p) if x else 0 for x in v)
            lead = next(i for i in range(d) if wv[i])
            inv = F._inv(wv[lead])
            img.append(index[tuple(F._mul(inv, x) for x in wv)])
        gens.append(Perm(img))
    g = PermGroup(gens)
    order_gl = 1
    for i in range(d):
        order_gl *= q ** d - q ** i
    assert g.order == order_gl // (q - 1) * k
    return g


def psl3(q: int) -> PermGroup:
    """PSL(3, q) on the q^2+q+1 projective points (transvection generators)."""
    p, k = _prime_power(q)
    F = field(p, k)
    pts = _projective_points(F, 3)
    index = {v: i for i, v in enumerate(pts)}
    w = primitive_element(F).val
    gens = []
    cyc = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    gens.append(_proj_perm_from_matrix(F, 3, cyc, pts, index))
    for c in ({1, w} if k > 1 else {1}):
        t = [[1, c, 0], [0, 1, 0], [0, 0, 1]]
        gens.append(_proj_perm_from_matrix(F, 3, t, pts, index))
    g = PermGroup(gens)
    order_sl = (q ** 3 - 1) * (q ** 3 - q) * (q ** 3 - q * q) // (q - 1)
    assert g.order == order_sl // gcd(3, q - 1)
    return g


def suzuki_group(q: int) -> PermGroup:
    """Sz(q) acting on the q^2+1 ovoid points {inf} | {(a,b)}.

    Twist: theta(x) = x^(2^(m+1)), so theta(theta(x)) = x^2.  Point (a, b)
    sits at index a*q + b; infinity at index q^2.
    """
    m = _suzuki_m(q)
    F = field(2, 2 * m + 1)
    te = 2 ** (m + 1)

    def th(x):
        return F._pow(x, te) if x else 0

    N = q * q + 1
    INF = q * q

    def translation(al, be):
        img = [0] * N
        img[INF] = INF
        tal = th(al)
        for a in range(q):
            xa = F._add(a, al)
            mix = F._mul(a, tal) if a and tal else 0
            for b in range(q):
                img[a * q + b] = xa * q + F._add(F._add(b, be), mix)
        return Perm(img)

    def torus(kv):
        img = [0] * N
        img[INF] = INF
        kq = F._pow(kv, te + 1)
        for a in range(q):
            ka = F._mul(kv, a) if a else 0
            for b in range(q):
                img[a * q + b] = ka * q + (F._mul(kq, b) if b else 0)
        return Perm(img)

    def inverting():
        img = [0] * N
        img[INF] = 0
        img[0] = INF
        for a in range(q):
            for b in range(q):
                if a == 0 and b == 0:
                    continue
                f = F._add(F._add(F._mul(a, b) if a and b else 0,
                                  F._pow(a, te + 2) if a else 0),
                           th(b))
                fi = F._inv(f)
                img[a * q + b] = (F._mul(b, fi) if b else 0) * q \
                    + (F._mul(a, fi) if a else 0)
        return Perm(img)

    gens = [translation(1, 0), translation(0, 1),
            torus(primitive_element(F).val), inverting()]
    g = PermGroup(gens)
    assert g.order == q * q * (q * q + 1) * (q - 1)
    return g


def frobenius_group(p: int, f: int, k: int) -> PermGroup:
    """N:H with N = (C_p)^f the field F_{p^f} and H = <scalar of order k>."""
    GroupSpec("Frob", (p, f, k)).validate()
    F = field(p, f)
    q = F.q
    w0 = F._pow(primitive_element(F).val, (q - 1) // k)
    timg = [F._add(x, 1) for x in range(q)]
    himg = [F._mul(w0, x) if x else 0 for x in range(q)]
    g = PermGroup([Perm(timg), Perm(himg)])
    assert g.order == q * k
    return g


def m23_group() -> PermGroup:
    gens = [parse_cycles(s, m23_data.M23_DEGREE) for s in m23_data.M23_GENERATORS]
    g = PermGroup(gens)
    assert g.order == m23_data.M23_ORDER
    return g


# -- distinguished classes ---------------------------------------------------


def distinguished_class(spec: GroupSpec, label: str, group: PermGroup | None = None):
    """Representative and exact class size for a documented witness class."""
    spec.validate()
    g = group if group is not None else construct(spec)
    fam, ps = spec.family, spec.params
    if fam in ("S", "A"):
        n = ps[0]
        if label == "n-cycle":
            if fam == "A" and n % 2 == 0:
                raise ValueError("n-cycles are odd for even n")
            ct = CycleType([(n, 1)])
        elif label.startswith("shape:"):
            ct = CycleType.from_label(label[len("shape:"):])
            if ct.degree != n:
                raise ValueError("shape does not fit the degree")
            if fam == "A" and sum((l - 1) * m for l, m in ct) % 2 == 1:
                raise ValueError("odd shape is not in the alternating group")
        else:
            raise ValueError(f"unknown class label {label!r} for {fam}_n")
        rep = _rep_of_cycle_type(ct, n)
        size = _factorial(n) // _sn_centralizer(ct)
        if fam == "A" and _an_class_splits(ct):
            size //= 2
        lab = ct.label() + ("a" if fam == "A" and _an_class_splits(ct) else "")
        return ConjClassInfo(rep, element_order(rep), size, lab)
    if fam in ("PSL2", "PGL2"):
        q = ps[0]
        if label == "torus-minus":
            target = (q + 1) // gcd(2, q - 1) if fam == "PSL2" else q + 1
        elif label == "torus-plus":
            target = (q - 1) // gcd(2, q - 1) if fam == "PSL2" else q - 1
        else:
            raise ValueError(f"unknown class label {label!r} for {fam}")
        rep = _element_of_order(g, target)
        return _class_info_of(g, rep, label)
    if fam == "PGammaL":
        d, q = ps
        if label != "singer":
            raise ValueError(f"unknown class label {label!r} for PGammaL")
        rep = _element_of_order(g, (q ** d - 1) // (q - 1))
        return _class_info_of(g, rep, label)
    if fam == "Sz":
        q = ps[0]
        if label != "ovoid-torus":
            raise ValueError(f"unknown class label {label!r} for Sz")
        rep = _element_of_order(g, q - isqrt(2 * q) + 1)
        return _class_info_of(g, rep, label)
    if fam == "Frob":
        p, f, k = ps
        if label != "complement":
            raise ValueError(f"unknown class label {label!r} for Frob")
        rep = g.generators[1]
        assert element_order(rep) == k
        return _class_info_of(g, rep, label)
    raise ValueError(f"no distinguished classes for family {fam}")


def _sn_centralizer(ct: CycleType):
    c = 1
    for l, mult in ct:
        c *= l ** mult * _factorial(mult)
    return c


def _element_of_order(g: PermGroup, target: int, tries=20000) -> Perm:
    """Deterministic search for an element of the given order."""
    for t in g.chain.elements():
        o = element_order(Perm(t))
        if o == target:
            return Perm(t)
        if o % target == 0:
            return Perm(t) ** (o // target)
    raise ValueError(f"no element of order {target} found")


def _class_info_of(g: PermGroup, rep: Perm, label: str) -> ConjClassInfo:
    cz = g.centralizer_order(rep)
    return ConjClassInfo(rep, element_order(rep), g.order // cz, label)


# -- maximal overgroups -------------------------------------------------------


def maximal_overgroups(spec: GroupSpec, label: str, group=None, cache_dir=None):
    """The full list M(G, s) for the supported (spec, label) pairs.

    Completeness of each list is the cited paper result, not a computation;
    the counts and orders are asserted against the documented values.
    """
    spec.validate()
    fam, ps = spec.family, spec.params
    g = group if group is not None else construct(spec)
    if fam == "PSL2" and label == "torus-minus":
        q = ps[0]
        if q % 2 == 0 or q < 11:
            raise ValueError("torus-minus overgroups supported for odd q >= 11")
        s = distinguished_class(spec, label, group=g).representative
        sub = _dihedral_normalizer(g, s, q + 1)
        return [DistinguishedSubgroup("torus-norm", "torus-normalizer", sub)]
    if fam == "PGL2" and label == "torus-minus":
        q = ps[0]
        s = distinguished_class(spec, label, group=g).representative
        sub = _dihedral_normalizer(g, s, 2 * (q + 1))
        return [DistinguishedSubgroup("torus-norm", "torus-normalizer", sub)]
    if fam == "Sz" and label == "ovoid-torus":
        q = ps[0]
        if q != 8:
            raise ValueError("ovoid-torus overgroups supported for Sz(8) only")
        s = distinguished_class(spec, label, group=g).representative
        sub = _cyclic_normalizer(g, s, 4 * (q - isqrt(2 * q) + 1))
        return [DistinguishedSubgroup("torus-norm", "torus-normalizer", sub)]
    if fam == "Frob" and label == "complement":
        h = g.generators[1]
        sub = PermGroup([h], degree=g.degree)
        assert sub.order == ps[2]
        return [DistinguishedSubgroup("complement", "complement", sub)]
    if fam == "A" and label == "n-cycle":
        n = ps[0]
        if n == 13:
            return _a13_overgroups(g)
        if n == 17:
            return _a17_overgroups(g)
        if n == 23:
            return _a23_overgroups(g)
        raise ValueError("n-cycle overgroups supported for n in {13, 17, 23}")
    raise ValueError(f"unsupported overgroup request ({spec}, {label})")


def _dihedral_normalizer(g: PermGroup, s: Perm, want_order: int) -> PermGroup:
    """<s, v> with v an involution inverting s, found by bounded search."""
    s_inv = s.inverse()
    for t in g.chain.elements():
        v = Perm(t)
        if element_order(v) == 2 and s.conjugate(v) == s_inv:
            sub = PermGroup([s, v], degree=g.degree)
            if sub.order == want_order:
                return sub
    raise ValueError("no inverting involution found")


def _cyclic_normalizer(g: PermGroup, s: Perm, want_order: int) -> PermGroup:
    """N(<s>) = <s, v> where v normalizes <s>; bounded search."""
    powers = {}
    acc = s
    o = element_order(s)
    for j in range(1, o):
        powers[tuple(acc)] = j
        acc = acc * s
    for t in g.chain.elements():
        v = Perm(t)
        j = powers.get(tuple(s.conjugate(v)))
        if j is not None and j != 1:
            sub = PermGroup([s, v], degree=g.degree)
            if sub.order == want_order:
                return sub
    raise ValueError("no normalizing element found")


def _n_cycle_transporter(sigma: Perm, n: int) -> Perm:
    """pi with sigma^pi = the standard n-cycle (0 1 ... n-1)."""
    word = [0]
    x = sigma[0]
    while x != 0:
        word.append(x)
        x = sigma[x]
    if len(word) != n:
        raise ValueError("element is not an n-cycle")
    img = [0] * n
    for i, a in enumerate(word):
        img[a] = i
    return Perm(img)


def _overgroups_by_transport(parent_order_check, prototype: PermGroup, n: int,
                             label: str, role: str, expected_count: int):
    """Conjugates of `prototype` containing the standard n-cycle.

    Finds an n-cycle sigma in the prototype, then transports the prototype by
    every power map sigma^j -> (0 1 ... n-1); distinct images are exactly the
    conjugates of the prototype containing the fixed n-cycle.
    """
    sigma = None
    for t in prototype.chain.elements():
        o = element_order(Perm(t))
        if o % n == 0:
            sigma = Perm(t) ** (o // n)
            break
    if sigma is None:
        raise ValueError("prototype has no n-cycle")
    out = []
    for j in range(1, n):
        if gcd(j, n) != 1:
            continue
        pi = _n_cycle_transporter(sigma ** j, n)
        gens = [h.conjugate(pi) for h in prototype.generators]
        dup = False
        for other in out:
            if all(other.membership(h) for h in gens):
                dup = True
                break
        if dup:
            continue
        sub = PermGroup(gens, degree=n)
        assert sub.order == prototype.order
        out.append(sub)
    if len(out) != expected_count:
        raise AssertionError(
            f"expected {expected_count} transported overgroups, got {len(out)}")
    target = Perm.from_cycles([tuple(range(n))], n)
    subs = []
    for i, sub in enumerate(out):
        assert sub.membership(target)
        subs.append(DistinguishedSubgroup(f"{label}-{i + 1}", role, sub))
    return subs


def _a13_overgroups(g: PermGroup):
    """M(A_13, s) for a 13-cycle s: the 13:6 normalizer plus four copies of
    the projective-plane stabilizer PGL(3,3)."""
    n = 13
    s = Perm.from_cycles([tuple(range(n))], n)
    mult4 = Perm([(4 * i) % 13 for i in range(13)])
    norm = PermGroup([s, mult4], degree=n)
    assert norm.order == 78 and is_even(mult4)
    out = [DistinguishedSubgroup("cycle-norm", "torus-normalizer", norm)]
    proto = pgammal(3, 3)
    out.extend(_overgroups_by_transport(None, proto, n, "plane-stab",
                                        "field-extension", 4))
    return out


def _a17_overgroups(g: PermGroup):
    proto = pgammal(2, 16)
    return _overgroups_by_transport(None, proto, 17, "pgammal2-16",
                                    "field-extension", 2)


def _a23_overgroups(g: PermGroup):
    proto = m23_group()
    return _overgroups_by_transport(None, proto, 23, "m23", "point-stabilizer", 2)


# -- closed-form evaluators ----------------------------------------------------


def f_spread_l2(q: int) -> int:
    """The exact spread value for L2(q), q >= 4 (q = 11 mod-4-3 case is a
    lower bound only; see the spread module)."""
    _prime_power(q)
    if q % 2 == 0:
        return q - 2
    return q - 1 if q % 4 == 1 else q - 4


def g_p2_l2(q: int) -> Fraction:
    """P_2(L2(q)) for odd q >= 11."""
    _prime_power(q)
    if q % 2 == 0 or q < 11:
        raise ValueError("g(q) needs odd q >= 11")
    if q % 4 == 1:
        return Fraction(1, 2) * (1 + Fraction(1, q))
    return Fraction(1, 2) * (1 - Fraction(q + 3, q * (q - 1)))


def p2_suzuki(q: int) -> Fraction:
    m = _suzuki_m(q)
    if m is None:
        raise ValueError("q must be 2^(2m+1), m >= 1")
    r = isqrt(2 * q)
    val = 1 - Fraction((q * q - 4) * (q - r + 1) + 4,
                       q * q * (q - 1) * (q + r + 1))
    assert val > 1 - Fraction(1, q)
    return val


def p2_ree(q: int) -> Fraction:
    fs = factorize(q)
    if list(fs) != [3] or fs[3] % 2 == 0 or fs[3] < 3:
        raise ValueError("q must be 3^(2m+1), m >= 1")
    r = isqrt(3 * q)
    val = 1 - Fraction((q ** 3 + 2 * q * q - 3 * q - 6) * (q - r + 1) + 6,
                       q ** 3 * (q * q - 1) * (q + r + 1))
    assert val > 1 - Fraction(1, q * q)
    return val


_P2_L3_EXCEPTIONS = {(1, 2), (1, 4), (-1, 3), (-1, 5)}


def p2_l3(q: int, eps: int) -> Fraction:
    """P_2 of the 3-dimensional linear (eps=+1) / unitary (eps=-1) group."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    _prime_power(q)
    if (eps, q) in _P2_L3_EXCEPTIONS:
        raise ValueError(f"(eps, q) = ({eps}, {q}) is one of the exceptions")
    if q % 3 == 0:
        return Fraction((q * q + eps * q + 1) * (q * q - eps * q - 3),
                        q * q * (q * q - 1))
    if q % 3 == eps % 3:
        return Fraction(3 * q ** 5 - 5 * q ** 3 + 3 * q + eps * 8,
                        3 * q ** 3 * (q * q - 1))
    return Fraction((q ** 3 - eps * 3 * q * q + q + eps * 2) * (q * q + eps * q + 1),
                    q ** 3 * (q - eps) ** 2)


def subdegrees_l2(q: int):
    """Nontrivial subdegrees of L2(q) on the cosets of D_{q+1}, odd q >= 11."""
    _prime_power(q)
    if q % 2 == 0 or q < 11:
        raise ValueError("subdegrees known for odd q >= 11")
    if q % 4 == 1:
        out = [((q + 1) // 2, (q - 3) // 2), (q + 1, (q - 1) // 4)]
    else:
        out = [((q + 1) // 4, 2), ((q + 1) // 2, (q - 3) // 2),
               (q + 1, (q - 3) // 4)]
    assert 1 + sum(l * m for l, m in out) == q * (q - 1) // 2
    return out


def soluble_predictions(p: int, f: int, k: int):
    """Exact spread data for the Frobenius group (C_p)^f : C_k."""
    GroupSpec("Frob", (p, f, k)).validate()
    n = p ** f
    eps = 0 if is_prime(k) else 1
    return {
        "s": n - eps,
        "u": n - 1,
        "gamma_u": 2,
        "p2": Fraction(n - 1, n),
    }


def u_lower_suzuki(q: int) -> int:
    if _suzuki_m(q) is None:
        raise ValueError("q must be 2^(2m+1), m >= 1")
    return (q + isqrt(2 * q) + 1) * (q - 1) - 1
