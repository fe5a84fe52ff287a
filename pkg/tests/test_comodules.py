import pytest

from hopfcqt.catalog import get_entry
from hopfcqt.comodules import (Comodule, TwistedCoalgebra, character,
                               enumerate_onedim, group_comodules, induce,
                               trivial_comodule)
from hopfcqt.errors import NonAbelianStabilizer, NotInStabilizer
from hopfcqt.groups import GroupHom, klein_four_group
from hopfcqt.hopf import HopfElement
from hopfcqt.reports import all_passed
from hopfcqt.scalars import (Matrix, MINUS_ONE, ONE, ZERO, rational,
                             root_of_unity)


def test_twisted_delta_trivial_tau():
    H = get_entry("Z2_Z").context()
    C = TwistedCoalgebra(H, "0")
    G = H.G
    g = G.parse("g")
    d = C.delta(g)
    assert d == {(g, G.one): ONE, (G.one, g): ONE}


def test_twisted_delta_sign_twist():
    H = get_entry("Z2_Z2_tau").context()
    C = TwistedCoalgebra(H, "t")
    G = H.G
    g = G.parse("g")
    assert C.delta(G.one) == {(G.one, G.one): ONE, (g, g): MINUS_ONE}
    assert C.delta(g) == {(g, G.one): ONE, (G.one, g): ONE}
    with pytest.raises(NotInStabilizer):
        TwistedCoalgebra(get_entry("Z2_Z").context(), "1").delta(
            get_entry("Z2_Z").context().G.parse("g"))


def test_twisted_coassociativity_all_catalog_points():
    for eid in ("Z2_Z", "S3_Z2", "Z2_Z2_tau", "Z3_Z"):
        H = get_entry(eid).context()
        for f in H.mp.window(2):
            TwistedCoalgebra(H, f)  # construction raises on failure


def test_comodule_validity_and_simplicity():
    H = get_entry("Z2_Z2_tau").context()
    C = TwistedCoalgebra(H, "t")
    g = H.G.parse("g")
    s = root_of_unity(4)  # sqrt(-1)
    U = Comodule(C, 1, {H.G.one: Matrix.identity(1), g: Matrix([[s]])})
    assert U.is_valid() and U.is_simple()
    UV = Comodule(C, 2, {H.G.one: Matrix.identity(2),
                         g: Matrix([[s, ZERO], [ZERO, -s]])})
    assert UV.is_valid() and not UV.is_simple()
    # corrupt one side of the coefficient identity
    bad = Comodule(C, 1, {H.G.one: Matrix.identity(1), g: Matrix([[ONE]])})
    assert not bad.is_valid()


def test_enumerate_onedim_z3():
    H = get_entry("Z3_Z").context()
    C = TwistedCoalgebra(H, "0")
    sols = enumerate_onedim(C)
    assert len(sols) == 3
    w = root_of_unity(3)
    values = sorted(tuple(repr(V.matrix(g)[0, 0]) for g in H.G.elements())
                    for V in sols)
    expect = sorted(tuple(repr(x) for x in (ONE, a, b))
                    for a, b in [(ONE, ONE), (w, w * w), (w * w, w)])
    assert values == expect


def test_enumerate_onedim_twisted_z2():
    H = get_entry("Z2_Z2_tau").context()
    sols = enumerate_onedim(TwistedCoalgebra(H, "t"))
    s = root_of_unity(4)
    got = sorted(repr(V.matrix("g")[0, 0]) for V in sols)
    assert got == sorted([repr(s), repr(-s)])


def test_enumerate_onedim_trivial_stabilizer():
    H = get_entry("Z2_Z").context()
    sols = enumerate_onedim(TwistedCoalgebra(H, "1"))
    assert len(sols) == 1 and sols[0].dim == 1


def test_enumerate_onedim_rejects_nonabelian():
    H = get_entry("Q8_Z").context()
    with pytest.raises(NonAbelianStabilizer):
        enumerate_onedim(TwistedCoalgebra(H, "0"))


def test_onedim_count_is_stabilizer_order():
    for eid, pts in (("Z2_Z", ["0", "1", "2"]), ("S3_Z2", ["()", "(1 2)", "(1 3)"]),
                     ("Z2_Z2_tau", ["1", "t"])):
        H = get_entry(eid).context()
        for p in pts:
            C = TwistedCoalgebra(H, p)
            assert len(enumerate_onedim(C)) == len(C.stabilizer)


def test_induced_dimensions():
    H = get_entry("Z2_Z").context()
    # moved base point: the trivial stabilizer comodule induces to dimension 2
    W = trivial_comodule(TwistedCoalgebra(H, "1"))
    assert induce(W).dim == 2
    # fixed base point: one-dimensional
    U = enumerate_onedim(TwistedCoalgebra(H, "0"))[0]
    assert induce(U).dim == 1


def test_induced_comodules_are_valid():
    for eid, pts in (("Z2_Z", ["0", "1"]), ("Z2_Z2_tau", ["1", "t"]),
                     ("S3_Z2", ["(1 2)", "(1 3)", "(1 2 3)"])):
        H = get_entry(eid).context()
        for p in pts:
            C = TwistedCoalgebra(H, p)
            for V in enumerate_onedim(C):
                assert all_passed(induce(V).verify())


def test_character_formulas():
    H = get_entry("Z2_Z2_tau").context()
    s = root_of_unity(4)
    U = enumerate_onedim(TwistedCoalgebra(H, "t"))
    chis = sorted((repr(character(V).element) for V in U))
    gbasis = H.basis("g", "t")
    expect = sorted((repr(H.basis("1", "t") + gbasis.scaled(c)) for c in (s, -s)))
    assert chis == expect

    Hz = get_entry("Z2_Z").context()
    W = trivial_comodule(TwistedCoalgebra(Hz, "1"))
    assert character(W).element == Hz.basis("1", "1") + Hz.basis("1", "-1")

    triv = trivial_comodule(TwistedCoalgebra(Hz, "0"))
    assert character(triv).element == Hz.unit()


def test_character_identity_coefficient():
    # for a_ii^1 = 1 comodules, the coefficient of p_1 # (z^-1 |> f) is dim(V)
    for eid, pts in (("Z2_Z", ["0", "2"]), ("S3_Z2", ["(1 3)", "(1 2 3)"])):
        H = get_entry(eid).context()
        for p in pts:
            C = TwistedCoalgebra(H, p)
            for V in enumerate_onedim(C):
                chi = character(V).element
                for z in C.transversal:
                    key = (H.G.one, H.mp.act_left(H.G.inv(z), C.f))
                    assert chi.terms[key] == rational(V.dim)


def test_character_cross_check_trace_vs_formula():
    # two independent code paths: the closed formula vs the induced-coaction trace
    cases = [("Z2_Z", ["0", "1", "2", "3"]), ("Z2_Z2_tau", ["1", "t"]),
             ("S3_Z2", ["()", "(1 2)", "(1 3)", "(1 2 3)"]),
             ("Z3_Z", ["0", "1"]), ("Z2_Dinf", ["1", "x", "y"])]
    for eid, pts in cases:
        H = get_entry(eid).context()
        for p in pts:
            C = TwistedCoalgebra(H, p)
            try:
                sols = enumerate_onedim(C)
            except NonAbelianStabilizer:
                continue
            for V in sols:
                assert induce(V).character_by_trace() == character(V).element, (eid, p)


def test_group_comodules_quotient_lift():
    H = get_entry("Q8_Z").context()
    K4 = klein_four_group()
    pi = GroupHom(H.G, K4, {"r": "a", "s": "b"})
    lifts = group_comodules(H, quotient=pi)
    assert len(lifts) == 4
    X = [V for V in lifts
         if V.matrix("r")[0, 0] == MINUS_ONE and V.matrix("s")[0, 0] == ONE]
    assert len(X) == 1
    X = X[0]
    # X has value (-1)^k on r^k s^l
    for k in range(4):
        for l in range(2):
            name = ("1" if k == 0 else "r" if k == 1 else "r^%d" % k)
            if l:
                name = "s" if k == 0 else name + "*s"
            want = MINUS_ONE if k % 2 else ONE
            assert X.matrix(name)[0, 0] == want
    assert X.is_valid() and X.is_simple()
