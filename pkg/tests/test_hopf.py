import random

import pytest

from hopfcqt.catalog import get_entry
from hopfcqt.cocycles import CocyclePair
from hopfcqt.errors import ContextMismatch
from hopfcqt.groups import cyclic_group, symmetric_group_s3
from hopfcqt.hopf import (HopfAlgebra, antipode, comultiply, counit, multiply,
                          verify_hopf_axioms)
from hopfcqt.matched_pair import MatchedPair
from hopfcqt.reports import all_passed
from hopfcqt.scalars import MINUS_ONE, ONE, ZERO, rational, root_of_unity


def test_multiply_examples():
    Hq = get_entry("Q8_Dinf").context()
    assert Hq.basis("r", "x") * Hq.basis("s", "y") == Hq.basis("r", "x*y")
    Hz = get_entry("Z2_Z").context()
    # delta fails since g <| 0 = g != 1
    assert (Hz.basis("1", "0") * Hz.basis("g", "2")).is_zero()
    a = Hz.basis("g", "3")
    assert Hz.unit() * a == a
    assert a * Hz.unit() == a


def test_comultiply_example():
    Hz = get_entry("Z2_Z").context()
    d = comultiply(Hz.basis("g", "2"))
    F, G = Hz.F, Hz.G
    g, one = G.parse("g"), G.one
    expected = {
        ((g, F.parse("2")), (one, F.parse("2"))): ONE,
        ((one, F.parse("-2")), (g, F.parse("2"))): ONE,
    }
    assert d.terms == expected
    # Delta(p_1 # 1_F) = sum_x p_(x^-1) # 1 (x) p_x # 1
    d1 = comultiply(Hz.basis("1", "0"))
    assert d1.terms == {((one, F.one), (one, F.one)): ONE,
                        ((g, F.one), (g, F.one)): ONE}


def test_counit_examples():
    Hz = get_entry("Z2_Z").context()
    assert counit(Hz.basis("1", "5")) == ONE
    assert counit(Hz.basis("g", "5")) == ZERO
    mixed = Hz.basis("1", "2").scaled(2) + Hz.basis("g", "3")
    assert counit(mixed) == rational(2)


def test_counit_comultiply_compatibility():
    Hz = get_entry("Z2_Z").context()
    a = Hz.basis("g", "3")
    d = comultiply(a)
    left = {}
    for (k1, k2), c in d.terms.items():
        if k1[0].is_identity():
            left[k2] = left.get(k2, ZERO) + c
    assert left == dict(a.terms)


def test_antipode_examples():
    Hz = get_entry("Z2_Z").context()
    assert antipode(Hz.basis("g", "3")) == Hz.basis("g", "3")
    assert antipode(Hz.basis("1", "0")) == Hz.basis("1", "0")
    Hq = get_entry("Q8_Dinf").context()
    # trivial cocycles: S(p_g # f) = p_((g <| f)^-1) # (g |> f)^-1
    a = Hq.basis("r", "x")
    expect = Hq.basis(Hq.G.inv(Hq.mp.act_right(Hq.G.parse("r"), Hq.F.parse("x"))),
                      Hq.F.inv(Hq.F.parse("x")))
    assert antipode(a) == expect


def test_antipode_antihomomorphism_randomized():
    Hz = get_entry("Z2_Z").context()
    rng = random.Random(41)
    basis = Hz.basis_window(3)
    for _ in range(80):
        k1, k2 = rng.choice(basis), rng.choice(basis)
        a, b = Hz.basis(*k1), Hz.basis(*k2)
        assert antipode(a * b) == antipode(b) * antipode(a)


def test_counit_is_algebra_map_randomized():
    H = get_entry("S3_Z2").context()
    rng = random.Random(43)
    basis = H.basis_window()
    for _ in range(60):
        a, b = H.basis(*rng.choice(basis)), H.basis(*rng.choice(basis))
        assert counit(a * b) == counit(a) * counit(b)


def test_hopf_axioms_s3_z2_exhaustive():
    H = get_entry("S3_Z2").context()
    reports = verify_hopf_axioms(H)
    assert all_passed(reports)
    by_name = {r.check: r for r in reports}
    assert by_name["associativity"].checked == 12 ** 3
    assert by_name["bialgebra-compatibility"].checked == 12 ** 2


def test_hopf_axioms_bounded_entries():
    for eid in ("Z2_Z", "Z2_Dinf", "Z3_Dinf", "Q8_Z", "Z2_Z2_tau"):
        H = get_entry(eid).context()
        assert all_passed(verify_hopf_axioms(H, 3)), eid


def test_corrupted_sigma_fails_bialgebra():
    # change one sigma entry without re-checking the cocycle identities;
    # sigma(g; (1 3), (1 3)) = -1 breaks the compatibility equation because
    # the conjugated entry sigma(g; (2 3), (2 3)) stays +1
    G = cyclic_group(2)
    F = symmetric_group_s3()
    t = F.parse("(1 2)")
    mp = MatchedPair.from_functions(
        G, F, left=lambda a, nu: nu if a.is_identity() else F.mul(F.mul(t, nu), t),
        right=lambda a, nu: a)
    g = G.parse("g")
    f13 = F.parse("(1 3)")
    cp = CocyclePair.from_tables(mp, {(g.key, f13.key, f13.key): MINUS_ONE}, {})
    H = HopfAlgebra(cp)
    reports = {r.check: r for r in verify_hopf_axioms(H)}
    assert reports["bialgebra-compatibility"].failed
    assert reports["bialgebra-compatibility"].witness is not None


def test_convolution_identity_pointwise():
    H = get_entry("Z2_Z2_tau").context()
    for key in H.basis_window():
        a = H.basis(*key)
        d = comultiply(a)
        left = d.map_left(lambda k: antipode(H.basis(*k))).multiply_legs()
        assert left == H.unit().scaled(counit(a))


def test_context_mismatch():
    H1 = get_entry("Z2_Z").context()
    H2 = get_entry("S3_Z2").context()
    with pytest.raises(ContextMismatch):
        multiply(H1.basis("g", "0"), H2.basis("g", "()"))
