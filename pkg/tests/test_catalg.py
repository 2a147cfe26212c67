import pytest

from concentra.category import FunctorData, identity_functor, one_object_category
from concentra.catalg import (CatAction, SubcategoryData, check_action, check_closed,
                              compatibility_witness, induced_action, is_normal_subconcentration,
                              is_saturated, quotient_concentration, restrict,
                              semidirect_category, semidirect_product_category, subcategory,
                              subcategory_witness)
from concentra.concentration import (check_concentration, discrete_partition,
                                     trivial_concentration)
from concentra.errors import ActionError, NormalityError, SubcategoryError
from concentra.fixtures import e1, e1_partitions
from concentra.monoid import (FinMonoid, concentration_monoid, cyclic_group, direct_product,
                              find_isomorphism,
                              quotient_by_normal_submonoid, semidirect_monoid, symmetric_group)


def bz(n):
    return one_object_category(cyclic_group(n))


def negation_action(n):
    """BG(Z/2) acting on BG(Z/n) by negation."""
    C, D = bz(n), bz(2)
    neg = FunctorData(C, C, (0,), [(-x) % n for x in range(n)])
    return CatAction(D, C, (identity_functor(C), neg))


def e1_negation_on_d():
    """BG(Z/2) acting on E1 by negating the Z/4 component."""
    C = e1()
    L = C.morphism_id
    mm = list(range(6))
    mm[L("1_D")], mm[L("3_D")] = L("3_D"), L("1_D")
    return CatAction(bz(2), C, (identity_functor(C), FunctorData(C, C, (0, 1), mm)))


B_SUB = SubcategoryData([1], [2, 4])


def test_e1_sub_is_closed_and_normal():
    C, a = e1(), e1_partitions()["sim_a"]
    assert check_closed(C, a, B_SUB)
    restricted = restrict(C, a, B_SUB)
    B, _ = subcategory(C, B_SUB)
    assert find_isomorphism(concentration_monoid(B, restricted)[0], cyclic_group(2))
    ok, w = is_normal_subconcentration(C, a, B_SUB)
    assert ok and w is None


def test_not_a_subcategory():
    C, a = e1(), e1_partitions()["sim_a"]
    bad = SubcategoryData([1], [2, 3])
    assert subcategory_witness(C, bad) == ("composition", (3, 3))
    with pytest.raises(SubcategoryError) as exc:
        check_closed(C, a, bad)
    assert exc.value.witness == (3, 3)
    assert subcategory_witness(C, SubcategoryData([1], [3]))[0] == "identity"
    assert subcategory_witness(C, SubcategoryData([1], [0, 2]))[0] == "endpoint"


def test_full_subcategory_trivial():
    C = e1()
    full = SubcategoryData([0, 1], range(6))
    t = trivial_concentration(C)
    assert check_closed(C, t, full)
    assert restrict(C, t, full) == t
    assert is_saturated(C, t, full)


def test_saturation_is_sufficient_not_necessary():
    C, a = e1(), e1_partitions()["sim_a"]
    # B contains 2_D but not 1_C which is related to it
    assert not is_saturated(C, a, B_SUB)
    assert check_closed(C, a, B_SUB)


def test_identity_subcategory_is_normal():
    C = bz(4)
    ident = SubcategoryData([0], [0])
    d = discrete_partition(C)
    assert is_normal_subconcentration(C, d, ident)[0]
    assert quotient_concentration(C, d, ident) == d
    a = e1_partitions()["sim_a"]
    q = quotient_concentration(e1(), a, SubcategoryData([1], [2]))
    assert q == a


def test_non_normal_in_s3():
    S3 = symmetric_group(3)
    C = one_object_category(S3)
    swap = S3.element_labels.index("102")
    sub = SubcategoryData([0], [S3.identity, swap])
    d = discrete_partition(C)
    assert check_closed(C, d, sub)
    ok, w = is_normal_subconcentration(C, d, sub)
    assert not ok
    x, side, s = w
    assert s in (S3.identity, swap)
    with pytest.raises(NormalityError):
        quotient_concentration(C, d, sub)


def test_e1_quotient():
    C, a = e1(), e1_partitions()["sim_a"]
    q = quotient_concentration(C, a, B_SUB)
    labels = [sorted(C.morphism_label(f) for f in c) for c in q.classes]
    assert labels == [["0_C", "0_D", "1_C", "2_D"], ["1_D", "3_D"]]
    Q, _ = concentration_monoid(C, q)
    assert find_isomorphism(Q, cyclic_group(2))
    # coarser than the original relation
    for f in range(6):
        for g in range(6):
            if a.related(f, g):
                assert q.related(f, g)


def test_bz4_quotient_matches_monoid_quotient():
    C = bz(4)
    d = discrete_partition(C)
    q = quotient_concentration(C, d, SubcategoryData([0], [0, 2]))
    Q, _ = concentration_monoid(C, q)
    assert find_isomorphism(Q, quotient_by_normal_submonoid(cyclic_group(4), {0, 2}))
    assert Q.size == 2


def test_semidirect_z3_z2():
    act = negation_action(3)
    C, D = act.fiber, act.base
    cat, part = semidirect_category(C, discrete_partition(C), D, discrete_partition(D), act)
    assert cat.n_objects == 1 and cat.n_morphisms == 6
    M, _ = concentration_monoid(cat, part)
    assert find_isomorphism(M, symmetric_group(3))
    MC, MD, phi = induced_action(act, discrete_partition(C), discrete_partition(D))
    assert find_isomorphism(M, semidirect_monoid(MC, MD, phi))


def test_semidirect_trivial_is_product():
    C, D = bz(3), bz(2)
    act = CatAction(D, C, (identity_functor(C), identity_functor(C)))
    cat, part = semidirect_category(C, discrete_partition(C), D, discrete_partition(D), act)
    M, _ = concentration_monoid(cat, part)
    assert find_isomorphism(M, cyclic_group(6))
    assert find_isomorphism(M, direct_product(cyclic_group(3), cyclic_group(2)))


def test_semidirect_with_two_objects():
    act = e1_negation_on_d()
    C, D = act.fiber, act.base
    a = e1_partitions()["sim_a"]
    cat, part = semidirect_category(C, a, D, discrete_partition(D), act)
    assert cat.n_objects == 2 and cat.n_morphisms == 12
    assert check_concentration(cat, part).ok
    M, _ = concentration_monoid(cat, part)
    MC, MD, phi = induced_action(act, a, discrete_partition(D))
    assert M.size == 8
    assert find_isomorphism(M, semidirect_monoid(MC, MD, phi))
    # dihedral: not commutative
    assert any(M.table[x][y] != M.table[y][x] for x in range(8) for y in range(8))


def test_incompatible_action_is_refused():
    act = e1_negation_on_d()
    C, D = act.fiber, act.base
    a = e1_partitions()["sim_a"]
    t = trivial_concentration(D)
    w = compatibility_witness(act, a, t)
    assert w is not None
    alpha, alpha2, f, f2 = w
    assert a.related(alpha, alpha2)
    assert not a.related(act(f).mor_map[alpha], act(f2).mor_map[alpha2])
    with pytest.raises(ActionError):
        semidirect_category(C, a, D, t, act)


def test_bad_actions():
    C, D = bz(3), bz(2)
    ident = identity_functor(C)
    with pytest.raises(ActionError):
        check_action(CatAction(D, C, (identity_functor(C),)))
    neg = FunctorData(C, C, (0,), (0, 2, 1))
    with pytest.raises(ActionError):
        # negation is not the identity on the identity morphism of BG(Z/2)
        check_action(CatAction(D, C, (neg, neg)))
    E = bz(3)
    with pytest.raises(ActionError):
        # generator acting by negation fails 1+1+1 = 0
        check_action(CatAction(E, C, (ident, neg, neg)))


def test_endofunctor_semidirect_without_partition():
    C, D = bz(2), one_object_category(FinMonoid([[0, 1], [1, 1]], 0))
    collapse = FunctorData(C, C, (0,), (0, 0))
    act = CatAction(D, C, (identity_functor(C), collapse))
    with pytest.raises(ActionError):
        check_action(act)
    check_action(act, require_invertible=False)
    cat, triples = semidirect_product_category(act)
    assert cat.n_morphisms == 4
    M, _ = concentration_monoid(cat, discrete_partition(cat))
    assert not M.is_group
