import pytest

import oracles
from concentra.category import FunctorData, identity_functor, one_object_category
from concentra.concentration import (MorphismPartition, check_concentration, discrete_partition,
                                     enumerate_concentrations, is_concentration,
                                     is_concentration_isomorphism, is_concentration_preserving,
                                     partition_from_labels, set_partitions, trivial_concentration)
from concentra.errors import SizeBoundError, StructuralError
from concentra.fixtures import (color_partition, e1, e1_partitions, e1m, fig2, klein, z3color)
from concentra.monoid import cyclic_group


def bz(n):
    return one_object_category(cyclic_group(n))


def test_partition_canonical_form():
    p = MorphismPartition.from_class_of(["x", "y", "x", "z"])
    assert p.classes == ((0, 2), (1,), (3,))
    assert p.class_of == (0, 1, 0, 2)
    q = MorphismPartition.from_classes([[3], [2, 0]], n=4)
    assert q.classes == ((0, 2), (1,), (3,))
    assert p == q


def test_partition_must_cover():
    with pytest.raises(StructuralError):
        MorphismPartition.from_classes([[0, 1], [1, 2]])
    with pytest.raises(StructuralError):
        MorphismPartition.from_class_of([0, 0]).check_against(e1())


def test_trivial_and_discrete():
    C = e1()
    assert len(trivial_concentration(C).classes) == 1
    assert trivial_concentration(C).classes[0] == tuple(range(6))
    d = discrete_partition(bz(4))
    assert len(d.classes) == 4 and check_concentration(bz(4), d).ok


def test_discrete_on_e1_fails_existence():
    C = e1()
    r = check_concentration(C, discrete_partition(C))
    assert r.existence[2] is False
    assert not r.identity
    assert r.associativity is None
    # the witness is a pair of classes with no composable representatives
    a, b = r.witnesses["existence_2"]
    assert C.src[a] != C.tgt[b]


def test_sim_a_is_a_3_concentration():
    C = e1()
    r = check_concentration(C, e1_partitions()["sim_a"], max_n=3)
    assert r.ok and r.existence == {2: True, 3: True}
    assert r.witnesses == {}


def test_merging_1c_1d_breaks_composition():
    C = e1()
    L = C.morphism_id
    r = check_concentration(C, partition_from_labels(C, [["1_C", "1_D"]]))
    assert not r.composition
    assert r.witnesses["composition"] == ((L("1_C"), L("1_C"), L("0_C")),
                                          (L("1_D"), L("1_D"), L("2_D")))


def test_z3_colored_fails_3_existence_only():
    C = z3color()
    part = color_partition(C)
    r = check_concentration(C, part, max_n=3)
    assert r.ok
    assert r.existence == {2: True, 3: False}
    w = r.witnesses["existence_3"]
    red = part.class_of[C.morphism_id("r_CE")]
    assert w == (red, red, red)
    assert {C.morphism_label(f)[0] for f in part.classes[red]} == {"r"}


def test_klein_colors_is_3_concentration():
    K = klein()
    assert K.n_morphisms == 16
    r = check_concentration(K, color_partition(K), max_n=3)
    assert r.ok and r.existence[3]


def test_every_failure_carries_a_witness():
    for p in set_partitions(6):
        r = check_concentration(e1(), MorphismPartition.from_class_of(p), max_n=3)
        for key in r.failures():
            if "not evaluated" in key:
                continue
            name = key.replace("-existence", "").strip()
            wkey = f"existence_{name}" if name.isdigit() else name
            assert wkey in r.witnesses


def test_exhaustive_mode_is_size_bounded():
    K = klein()
    with pytest.raises(SizeBoundError):
        check_concentration(K, color_partition(K), exhaustive=True)


def test_preserving():
    C = e1()
    parts = e1_partitions()
    I = identity_functor(C)
    assert is_concentration_preserving(I, parts["sim_a"], parts["sim_a"])[0]
    ok, (f, g) = is_concentration_preserving(I, parts["sim_a"], discrete_partition(C))
    assert not ok
    assert parts["sim_a"].related(f, g) and f != g


def test_concentration_isomorphism():
    C = e1()
    a = e1_partitions()["sim_a"]
    assert is_concentration_isomorphism(identity_functor(C), a, a)
    cat, F = fig2()
    assert not is_concentration_isomorphism(F, trivial_concentration(cat),
                                            discrete_partition(F.target))


def test_enumerate_small_cases():
    B = bz(2)
    found = enumerate_concentrations(B)
    assert {p.classes for p in found} == {((0,), (1,)), ((0, 1),)}
    only = enumerate_concentrations(e1m())
    assert len(only) == 1 and len(only[0].classes) == 1


def test_enumerate_e1_matches_oracle():
    found = enumerate_concentrations(e1())
    # frozen from the brute-force oracle over all 203 partitions
    assert len(found) == 6
    expected = oracles.concentrations(e1())
    assert sorted(list(p.class_of) for p in found) == sorted(expected)
    classes = {p.classes for p in found}
    for p in e1_partitions().values():
        assert p.classes in classes
    assert trivial_concentration(e1()).classes in classes


def test_enumeration_bound():
    K = klein()
    with pytest.raises(SizeBoundError) as exc:
        enumerate_concentrations(K)
    assert exc.value.size == 16


def test_set_partitions_counts():
    bell = [1, 1, 2, 5, 15, 52, 203, 877]
    for n, b in enumerate(bell):
        assert sum(1 for _ in set_partitions(n)) == b


def test_library_agrees_with_oracle_on_every_partition():
    cats = [e1(), fig2()[0], bz(4), one_object_category(cyclic_group(2))]
    for C in cats:
        raw = oracles.Raw(C)
        for p in oracles.all_partitions(C.n_morphisms):
            part = MorphismPartition.from_class_of(p)
            r = check_concentration(C, part, max_n=3)
            assert r.identity == oracles.axiom_identity(raw, p)
            assert r.composition == oracles.axiom_composition(raw, p)
            assert r.existence[2] == oracles.axiom_existence(raw, p, 2)
            assert r.existence[3] == oracles.axiom_existence(raw, p, 3)
            assert is_concentration(C, part) == oracles.is_concentration(raw, p)


def test_bad_functor_partition_sizes():
    C = e1()
    F = FunctorData(C, C, (0, 1), range(6))
    with pytest.raises(StructuralError):
        is_concentration_preserving(F, MorphismPartition.from_class_of([0] * 5),
                                    trivial_concentration(C))
