import pytest

from concentra.category import (FinCategory, FunctorData, check_functor, compose,
                                compose_functors, endomorphism_monoid, identity_functor,
                                is_equivalent_to_trivial, is_identity_functor,
                                is_strongly_invertible, one_object_category, validate_category)
from concentra.errors import StructuralError
from concentra.fixtures import e1, fig2
from concentra.groupoids import codiscrete_cover
from concentra.monoid import cyclic_group, symmetric_group


def bz(n):
    return one_object_category(cyclic_group(n))


def test_bz4_and_e1_are_valid():
    assert validate_category(bz(4)).ok
    assert validate_category(e1()).ok


def test_broken_associativity_reports_a_triple():
    B = bz(4)
    triples = [list(t) for t in B.composition]
    # 1 * 1 = 3 instead of 2; identities untouched
    for t in triples:
        if t[:2] == [1, 1]:
            t[2] = 3
    bad = FinCategory(B.objects, B.morphisms, B.identities, triples)
    rep = validate_category(bad)
    assert not rep.ok
    v = rep.first("associativity")
    assert v is not None and len(v.witness) == 3
    f, g, h = v.witness
    lhs = bad.compose(bad.compose(f, g), h)
    rhs = bad.compose(f, bad.compose(g, h))
    assert lhs != rhs


def test_missing_composite_is_a_violation():
    B = bz(2)
    triples = [t for t in B.composition if t[:2] != (1, 1)]
    rep = validate_category(FinCategory(B.objects, B.morphisms, B.identities, triples))
    assert rep.kinds() == ["missing_composite"]
    assert rep.first("missing_composite").witness == (1, 1)


def test_out_of_range_is_structural():
    with pytest.raises(StructuralError):
        FinCategory(["a"], [("f", 0, 1)], [0], [])
    with pytest.raises(StructuralError):
        FinCategory(["a"], [("f", 0, 0)], [0], [(0, 0, 5)])
    with pytest.raises(StructuralError):
        FinCategory(["a"], [("f", 0, 0)], [], [])


def test_compose_in_e1():
    C = e1()
    L = C.morphism_id
    assert compose(C, L("1_D"), L("1_D")) == L("2_D")
    assert C.compose(L("1_C"), L("0_D")) is None
    for f in range(C.n_morphisms):
        assert C.compose(f, C.identities[C.src[f]]) == f
        assert C.compose(C.identities[C.tgt[f]], f) == f


def test_compose_defined_iff_endpoints_match():
    C = e1()
    for f in range(C.n_morphisms):
        for g in range(C.n_morphisms):
            assert (C.compose(f, g) is not None) == (C.src[f] == C.tgt[g])


def test_compose_path_order():
    cat, _ = fig2()
    f, g, h = (cat.morphism_id(x) for x in "fgh")
    assert cat.compose_path(g, f) == h
    assert cat.compose_path(f, g) is None


def test_one_object_category():
    B = bz(2)
    assert B.n_objects == 1 and B.n_morphisms == 2
    assert validate_category(B).ok
    S = one_object_category(symmetric_group(3))
    assert validate_category(S).ok and S.n_morphisms == 6


def test_equivalent_to_trivial():
    cover, _, _ = codiscrete_cover(symmetric_group(3))
    assert cover.n_objects == 6
    assert is_equivalent_to_trivial(cover)
    assert not is_equivalent_to_trivial(bz(2))
    assert not is_equivalent_to_trivial(e1())


def test_endomorphism_monoid_of_e1():
    M, ends = endomorphism_monoid(e1(), 1)
    assert M.size == 4 and M.is_group and len(ends) == 4


def test_identity_functor_is_its_own_inverse():
    I = identity_functor(e1())
    assert check_functor(I).ok
    inv = is_strongly_invertible(I)
    assert inv is not None and is_identity_functor(inv)


def test_fig2_functor_valid_but_not_invertible():
    _, F = fig2()
    assert check_functor(F).ok
    assert is_strongly_invertible(F) is None


def test_identity_preservation_failure_names_object():
    C = e1()
    mm = list(range(C.n_morphisms))
    mm[0] = 1  # id_C -> 1_C
    rep = check_functor(FunctorData(C, C, (0, 1), mm))
    assert not rep.ok
    assert rep.first("identity").witness == (0,)


def test_compose_functors():
    cat, F = fig2()
    I = identity_functor(cat)
    FI = compose_functors(F, I)
    assert FI.mor_map == F.mor_map and check_functor(FI).ok
    with pytest.raises(StructuralError):
        compose_functors(I, F)


def test_strong_inverse_composes_to_identity():
    B = bz(4)
    neg = FunctorData(B, B, (0,), [(-x) % 4 for x in range(4)])
    assert check_functor(neg).ok
    inv = is_strongly_invertible(neg)
    assert is_identity_functor(compose_functors(inv, neg))
    assert is_identity_functor(compose_functors(neg, inv))
