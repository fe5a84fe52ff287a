"""Twisted stabilizer coalgebras, their comodules, induction, and characters.

For a base point f, the coalgebra is k^(G_f) with

    Delta(p_g) = sum_{x in G_f} tau(g x^-1, x; f) p_(g x^-1) (x) p_x,

whose right comodules are coefficient systems A^g (g in G_f) with

    A^1 = I,    A^g A^h = tau(g, h; f) A^(g h).

Induction along the transversal T_f produces a comodule over the full Hopf
algebra; its character is both computed by the closed one-line formula and,
independently, as the trace of the induced coaction (two code paths that the
tests compare).
"""

from __future__ import annotations

import itertools

from .errors import (NonAbelianStabilizer, NotARootOfUnity, NotInStabilizer,
                     WrongGroup)
from .hopf import HopfElement
from .reports import FAIL, PASS, ConditionReport
from .scalars import Matrix, ONE, Scalar, ZERO, commutant_dimension, root_of_unity


class TwistedCoalgebra:
    "k^(G_f) with the comultiplication twisted by tau(., .; f)."

    def __init__(self, H, f):
        if isinstance(f, str):
            f = H.F.parse(f)
        H.F._member(f)
        self.H = H
        self.f = f
        od = H.mp.orbit_data(f)
        self.stabilizer = od.stabilizer
        self.transversal = od.transversal
        self._od = od
        self._check_coalgebra()

    def tau(self, a, b):
        return self.H.cp.tau(a, b, self.f)

    def contains(self, g):
        return self._od.in_stabilizer(g)

    def delta(self, g):
        "The twisted coproduct of p_g, as {(g1, g2): coeff} over G_f x G_f."
        if not self.contains(g):
            raise NotInStabilizer("%r does not stabilize %r" % (g, self.f))
        G = self.H.G
        out = {}
        for x in self.stabilizer:
            out[(G.mul(g, G.inv(x)), x)] = self.tau(G.mul(g, G.inv(x)), x)
        return out

    def counit(self, g):
        if not self.contains(g):
            raise NotInStabilizer("%r does not stabilize %r" % (g, self.f))
        return ONE if g.is_identity() else ZERO

    def _check_coalgebra(self):
        "Coassociativity and counit of the twisted coproduct, exhaustively over G_f."
        G = self.H.G
        for a in self.stabilizer:
            for b in self.stabilizer:
                for c in self.stabilizer:
                    # coefficient of p_a (x) p_b (x) p_c in both triple coproducts of p_(abc)
                    abc = G.mul(G.mul(a, b), c)
                    lhs = self.tau(G.mul(a, b), c) * self.tau(a, b)
                    rhs = self.tau(a, G.mul(b, c)) * self.tau(b, c)
                    if lhs != rhs:
                        raise ValueError("twisted coproduct not coassociative at "
                                         "(%r, %r, %r) over %r" % (a, b, c, abc))
        for g in self.stabilizer:
            d = self.delta(g)
            for (x, y), c in d.items():
                if x.is_identity() and (y != g or not c.is_one()):
                    raise ValueError("counit law fails at %r" % g)
                if y.is_identity() and (x != g or not c.is_one()):
                    raise ValueError("counit law fails at %r" % g)

    def __repr__(self):
        return "TwistedCoalgebra(f=%r, |G_f|=%d)" % (self.f, len(self.stabilizer))


class Comodule:
    "Right comodule over a twisted stabilizer coalgebra: matrices A^g, g in G_f."

    def __init__(self, coalgebra, dim, matrices, label=""):
        self.coalgebra = coalgebra
        self.dim = dim
        self.label = label
        self.matrices = {}
        for g, M in matrices.items():
            if isinstance(g, str):
                g = coalgebra.H.G.parse(g)
            if not coalgebra.contains(g):
                raise NotInStabilizer("coefficient at %r outside the stabilizer" % g)
            if M.rows != dim or M.cols != dim:
                raise ValueError("coefficient block at %r is not %dx%d" % (g, dim, dim))
            self.matrices[g.key] = M
        for g in coalgebra.stabilizer:
            self.matrices.setdefault(g.key, Matrix.zeros(dim, dim))

    @classmethod
    def from_coefficients(cls, coalgebra, dim, coeffs, label=""):
        "coeffs maps (l, i, g) with 1-based l, i to scalars: rho(v_i) = sum v_l (x) a_li^g p_g."
        mats = {}
        for (l, i, g), c in coeffs.items():
            if isinstance(g, str):
                g = coalgebra.H.G.parse(g)
            M = mats.setdefault(g.key, [[ZERO] * dim for _ in range(dim)])
            M[l - 1][i - 1] = M[l - 1][i - 1] + Scalar._coerce(c)
        G = coalgebra.H.G
        return cls(coalgebra, dim,
                   {G._element(k): Matrix(rows) for k, rows in mats.items()}, label=label)

    def matrix(self, g):
        if isinstance(g, str):
            g = self.coalgebra.H.G.parse(g)
        if not self.coalgebra.contains(g):
            raise NotInStabilizer("%r outside the stabilizer" % g)
        return self.matrices[g.key]

    def diagonal_sum(self, g):
        "sum_i a_ii^g"
        return self.matrix(g).trace()

    def verify(self):
        "Counit and coaction axioms as identities on the coefficient blocks."
        C = self.coalgebra
        G = C.H.G
        reports = []
        ident_ok = self.matrices[G.one.key] == Matrix.identity(self.dim)
        reports.append(ConditionReport(
            "comodule-counit", PASS if ident_ok else FAIL,
            witness=None if ident_ok else (G.one,), checked=1))
        witness = None
        checked = 0
        for a in C.stabilizer:
            for b in C.stabilizer:
                checked += 1
                lhs = self.matrices[a.key] * self.matrices[b.key]
                rhs = self.matrices[G.mul(a, b).key] * C.tau(a, b)
                if lhs != rhs:
                    witness = (a, b)
                    break
            if witness:
                break
        reports.append(ConditionReport("comodule-coassociativity",
                                       FAIL if witness else PASS,
                                       witness=witness, checked=checked))
        return reports

    def is_valid(self):
        return all(r.passed for r in self.verify())

    def is_simple(self):
        "Simple iff the coefficient blocks have a one-dimensional commutant."
        return commutant_dimension(self.matrices.values(), self.dim) == 1

    def __repr__(self):
        return "Comodule(%sdim %d at f=%r)" % (
            (self.label + ", ") if self.label else "", self.dim, self.coalgebra.f)


# -- one-dimensional enumeration ----------------------------------------------

def _generating_subset(elements, mul_key, one_key):
    "Smallest-by-size generating subset of a small group, in stable order."
    pool = [e for e in elements if e.key != one_key]
    for size in range(len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            seen = {one_key}
            frontier = [one_key]
            while frontier:
                new = []
                for k in frontier:
                    for g in combo:
                        kk = mul_key(k, g.key)
                        if kk not in seen:
                            seen.add(kk)
                            new.append(kk)
                frontier = new
            if len(seen) == len(elements):
                return list(combo)
    raise AssertionError("unreachable")


def enumerate_onedim(coalgebra):
    """All one-dimensional comodules over an abelian twisted stabilizer coalgebra.

    Solutions a: G_f -> k* of a^1 = 1, a^g a^h = tau(g, h; f) a^(g h); the value
    on each generator h is an n-th root of the telescoped tau product, so the
    candidate sets are finite and the search is complete.  Exactly |G_f| many
    when any exist.
    """
    C = coalgebra
    G = C.H.G
    stab = C.stabilizer
    if not all(G.mul(a, b) == G.mul(b, a) for a in stab for b in stab):
        raise NonAbelianStabilizer("stabilizer of %r is non-abelian" % C.f)

    mul_key = lambda k, l: G.mul(G._element(k), G._element(l)).key
    gens = _generating_subset(stab, mul_key, G.one.key)

    # fixed decomposition of every stabilizer element as a generator word
    words = {G.one.key: ()}
    frontier = [G.one.key]
    while frontier:
        new = []
        for k in frontier:
            for gi, g in enumerate(gens):
                kk = mul_key(k, g.key)
                if kk not in words:
                    words[kk] = words[k] + (gi,)
                    new.append(kk)
        frontier = new

    def elem_order(g):
        n, acc = 1, g
        while not acc.is_identity():
            acc = G.mul(acc, g)
            n += 1
        return n

    candidate_sets = []
    for g in gens:
        n = elem_order(g)
        c = ONE
        acc = g
        for _ in range(n - 1):
            c = c * C.tau(g, acc)
            acc = G.mul(acc, g)
        ru = c.as_root_of_unity()
        if ru is None:
            raise NotARootOfUnity(
                "telescoped tau product at %r is not a root of unity: %r" % (g, c))
        m, j = ru
        cands = [root_of_unity(n * m, j + m * i) for i in range(n)]
        assert all(t ** n == c for t in cands)
        candidate_sets.append(cands)

    out = []
    for values in itertools.product(*candidate_sets):
        a = {G.one.key: ONE}
        ok = True
        for k, word in words.items():
            acc_key, acc_val = G.one.key, ONE
            for gi in word:
                g = gens[gi]
                acc_val = acc_val * values[gi] / C.tau(G._element(acc_key), g)
                acc_key = mul_key(acc_key, g.key)
            a[k] = acc_val
        for x in stab:
            for y in stab:
                if a[x.key] * a[y.key] != C.tau(x, y) * a[G.mul(x, y).key]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(Comodule(C, 1, {G._element(k): Matrix([[v]]) for k, v in a.items()}))
    return out


# -- induction and characters ----------------------------------------------------

class InducedComodule:
    """Comodule over the full Hopf algebra induced along the transversal.

    Basis (i, z) for i < dim(V), z in T_f; the coaction of each basis vector is

        sum_{x in G} tau(z_x^-1, g_x^-1; f)^-1 tau(z_x^-1 g_x^-1 z, z^-1; f)
                     A^(g_x^-1)[l, i]  (l, z_x) (x) p_(x^-1 z) # (z^-1 |> f)

    with x = g_x z_x the stabilizer/transversal factorization.
    """

    def __init__(self, source):
        C = source.coalgebra
        H = C.H
        G, F, mp, cp = H.G, H.F, H.mp, H.cp
        f = C.f
        m = source.dim
        trans = C.transversal
        self.source = source
        self.H = H
        self.base_point = f
        self.dim = m * len(trans)
        self.basis_labels = [(i, z) for z in trans for i in range(m)]
        pos = {(i, z.key): zi * m + i for zi, z in enumerate(trans) for i in range(m)}
        blocks = {}
        for zi, z in enumerate(trans):
            zinv = G.inv(z)
            ftarget = mp.act_left(zinv, f)
            for x in G.elements():
                gx, zx = C._od.factorize(x)
                gxi = G.inv(gx)
                coeff = (cp.tau(G.inv(zx), gxi, f).inverse()
                         * cp.tau(G.mul(G.mul(G.inv(zx), gxi), z), zinv, f))
                A = source.matrices[gxi.key]
                hkey = (G.mul(G.inv(x), z), ftarget)
                M = blocks.setdefault(hkey, [[ZERO] * self.dim for _ in range(self.dim)])
                for l in range(m):
                    for i in range(m):
                        if A.entries[l][i]:
                            r, c = pos[(l, zx.key)], pos[(i, z.key)]
                            M[r][c] = M[r][c] + coeff * A.entries[l][i]
        self.blocks = {k: Matrix(rows) for k, rows in blocks.items()
                       if any(any(v for v in row) for row in rows)}

    def verify(self):
        "Comodule axioms over the full Hopf algebra, on the block support."
        H = self.H
        G, mp, cp = H.G, H.mp, H.cp
        reports = []
        total = Matrix.zeros(self.dim, self.dim)
        for (g, u), M in self.blocks.items():
            if g.is_identity():
                total = total + M
        ok = total == Matrix.identity(self.dim)
        reports.append(ConditionReport("induced-counit", PASS if ok else FAIL,
                                       witness=None if ok else ("identity block sum",),
                                       checked=1))
        # quantify over G x U with U the orbit closure of the support's F parts;
        # outside U both sides of the axiom vanish identically
        fparts = {}
        for (_, u) in self.blocks:
            for v in mp.orbit(u):
                fparts.setdefault(v.key, v)
        U = list(fparts.values())
        witness = None
        checked = 0
        zero = Matrix.zeros(self.dim, self.dim)
        for g in G.elements():
            for fk in U:
                B1 = self.blocks.get((g, fk), zero)
                for h in G.elements():
                    for u in U:
                        checked += 1
                        lhs = B1 * self.blocks.get((h, u), zero)
                        if fk == mp.act_left(h, u):
                            rhs = self.blocks.get((G.mul(g, h), u), zero) * cp.tau(g, h, u)
                        else:
                            rhs = zero
                        if lhs != rhs:
                            witness = ((g, fk), (h, u))
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break
        reports.append(ConditionReport("induced-coassociativity",
                                       FAIL if witness else PASS,
                                       witness=witness, checked=checked))
        return reports

    def is_valid(self):
        return all(r.passed for r in self.verify())

    def character_by_trace(self):
        "Trace of the coaction blocks; an independent route to the character."
        acc = {}
        for key, M in self.blocks.items():
            t = M.trace()
            if t:
                acc[key] = acc.get(key, ZERO) + t
        return HopfElement(self.H, acc)

    def __repr__(self):
        return "InducedComodule(dim %d at f=%r)" % (self.dim, self.base_point)


def induce(V):
    return InducedComodule(V)


class Character:
    "The character of an induced comodule, as an element of the Hopf algebra."

    __slots__ = ("element", "base_point", "dim", "label", "source")

    def __init__(self, element, base_point, dim, label="", source=None):
        self.element = element
        self.base_point = base_point
        self.dim = dim
        self.label = label
        self.source = source

    def __repr__(self):
        tag = self.label or ("chi@%r" % self.base_point)
        return "Character(%s, dim %d: %r)" % (tag, self.dim, self.element)

    def __eq__(self, other):
        if isinstance(other, Character):
            return self.element == other.element
        return NotImplemented

    __hash__ = None


def character(V, label=""):
    """Closed character formula for the induced comodule of V:

        sum_{z in T_f} sum_{g in G_f} tau(z^-1, g; f)^-1 tau(z^-1 g z, z^-1; f)
                                       (sum_i a_ii^g)  p_(z^-1 g z) # (z^-1 |> f)
    """
    C = V.coalgebra
    H = C.H
    G, mp, cp = H.G, H.mp, H.cp
    f = C.f
    acc = {}
    for z in C.transversal:
        zinv = G.inv(z)
        fz = mp.act_left(zinv, f)
        for g in C.stabilizer:
            diag = V.diagonal_sum(g)
            if not diag:
                continue
            zgz = G.mul(G.mul(zinv, g), z)
            coeff = cp.tau(zinv, g, f).inverse() * cp.tau(zgz, zinv, f) * diag
            key = (zgz, fz)
            acc[key] = acc.get(key, ZERO) + coeff
    elem = HopfElement(H, acc)
    return Character(elem, f, V.dim * len(C.transversal), label=label, source=V)


def trivial_comodule(coalgebra):
    "The one-dimensional comodule with every coefficient equal to 1 (a^g = 1)."
    G = coalgebra.H.G
    return Comodule(coalgebra, 1,
                    {g: Matrix([[ONE]]) for g in coalgebra.stabilizer},
                    label="trivial")


def group_comodules(H, quotient=None):
    """One-dimensional comodules over k^G at the base point 1_F.

    With abelian G these are its characters (twisted by tau(.,.,1) = 1, so
    untwisted); a quotient hom onto an abelian group lifts that quotient's
    characters to G.  Returns Comodule objects at base point 1_F.
    """
    C = TwistedCoalgebra(H, H.F.one)
    if quotient is None:
        return enumerate_onedim(C)
    pi = quotient
    Cq = pi.codomain
    if not Cq.is_abelian():
        raise WrongGroup("quotient characters need an abelian codomain")
    out = []
    for idx, char in enumerate(_abelian_character_tables(Cq)):
        mats = {g: Matrix([[char[pi(g).key]]]) for g in H.G.elements()}
        out.append(Comodule(C, 1, mats, label="lift#%d via %s" % (idx, _hom_tag(pi))))
    return out


def _hom_tag(pi):
    return "%s->%s" % (getattr(pi.domain, "name", pi.domain.family),
                       getattr(pi.codomain, "name", pi.codomain.family))


def _abelian_character_tables(G):
    "Characters of a finite abelian group as {element key: Scalar} dicts."
    elems = G.elements()
    mul_key = lambda k, l: G.mul(G._element(k), G._element(l)).key
    gens = _generating_subset(elems, mul_key, G.one.key)
    words = {G.one.key: ()}
    frontier = [G.one.key]
    while frontier:
        new = []
        for k in frontier:
            for gi, g in enumerate(gens):
                kk = mul_key(k, g.key)
                if kk not in words:
                    words[kk] = words[k] + (gi,)
                    new.append(kk)
        frontier = new

    def elem_order(g):
        n, acc = 1, g
        while not acc.is_identity():
            acc = G.mul(acc, g)
            n += 1
        return n

    orders = [elem_order(g) for g in gens]
    out = []
    for exps in itertools.product(*[range(n) for n in orders]):
        char = {}
        good = True
        for k, word in words.items():
            v = ONE
            for gi in word:
                v = v * root_of_unity(orders[gi], exps[gi])
            if k in char and char[k] != v:
                good = False
                break
            char[k] = v
        if good and all(char[mul_key(a.key, b.key)] == char[a.key] * char[b.key]
                        for a in elems for b in elems):
            out.append(char)
    return out
