"""Randomized checks of structural invariants."""
import json
import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles
from concentra.category import (FunctorData, check_functor, compose_functors,
                                one_object_category, validate_category)
from concentra.concentration import (MorphismPartition, check_concentration,
                                     is_concentration_preserving, trivial_concentration)
from concentra.dirlim import direct_category
from concentra.fixtures import chain_diagram, e1, fig2, group_by_name, vee_diagram
from concentra.groupoids import (sample_theta, theta_change_functor, theta_concentration,
                                 torsor_groupoid)
from concentra.lifting import check_2_lifting, pullback_concentration
from concentra.monoid import (FinMonoid, MonoidHom, concentration_monoid, cyclic_group,
                              find_isomorphism, monoid_from_permutations)
from concentra.concentration import is_concentration_isomorphism
from concentra.workspace import Workspace, dumps, from_dict

SETTINGS = settings(max_examples=40, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])


@st.composite
def transformation_monoids(draw, max_points=3):
    """Monoid generated by a few self-maps of a small set."""
    n = draw(st.integers(1, max_points))
    maps = st.tuples(*[st.integers(0, n - 1)] * n)
    gens = draw(st.lists(maps, min_size=1, max_size=3))
    return monoid_from_permutations(gens)


@st.composite
def small_groups(draw):
    n = draw(st.integers(1, 4))
    perms = st.permutations(list(range(n))).map(tuple)
    return monoid_from_permutations(draw(st.lists(perms, min_size=1, max_size=2)))


def small_categories():
    cats = [e1(), fig2()[0], direct_category(chain_diagram().poset),
            direct_category(vee_diagram()[0].poset), torsor_groupoid(cyclic_group(2), 2)]
    cats += [one_object_category(cyclic_group(n)) for n in range(1, 5)]
    cats.append(one_object_category(FinMonoid([[0, 1], [1, 1]], 0)))
    cats.append(one_object_category(FinMonoid([[0, 1, 2], [1, 1, 1], [2, 2, 2]], 0)))
    return cats


CATS = small_categories()


@st.composite
def partitioned(draw):
    cat = draw(st.sampled_from(CATS))
    labels = draw(st.lists(st.integers(0, 3), min_size=cat.n_morphisms, max_size=cat.n_morphisms))
    return cat, MorphismPartition.from_class_of(labels)


@SETTINGS
@given(transformation_monoids())
def test_one_object_category_is_valid(M):
    B = one_object_category(M)
    assert validate_category(B).ok
    assert B.n_objects == 1 and B.n_morphisms == M.size


@SETTINGS
@given(small_groups(), st.integers(1, 3))
def test_compose_defined_iff_endpoints_match(G, n):
    T = torsor_groupoid(G, n)
    for f in range(T.n_morphisms):
        for g in range(T.n_morphisms):
            assert (T.compose(f, g) is not None) == (T.src[f] == T.tgt[g])


@SETTINGS
@given(st.data())
def test_composite_of_functors_is_a_functor(data):
    c, d, e = (data.draw(st.sampled_from(CATS[:4] + CATS[5:9])) for _ in range(3))
    fs = oracles.functors(c, d)
    gs = oracles.functors(d, e)
    if not fs or not gs:
        return
    om1, mm1 = data.draw(st.sampled_from(fs))
    om2, mm2 = data.draw(st.sampled_from(gs))
    F, G = FunctorData(c, d, om1, mm1), FunctorData(d, e, om2, mm2)
    H = compose_functors(G, F)
    assert check_functor(H).ok
    assert all(H.mor_map[f] == G.mor_map[F.mor_map[f]] for f in range(c.n_morphisms))


@SETTINGS
@given(partitioned())
def test_existence_is_monotone_in_k(case):
    cat, part = case
    report = check_concentration(cat, part, max_n=4)
    for k in (2, 3):
        if report.existence[k + 1]:
            assert report.existence[k]


@SETTINGS
@given(partitioned())
def test_three_concentrations_are_concentrations(case):
    cat, part = case
    report = check_concentration(cat, part, max_n=3)
    if report.is_n_concentration(3):
        assert report.ok


@SETTINGS
@given(partitioned())
def test_library_matches_oracle(case):
    cat, part = case
    assert check_concentration(cat, part).ok == oracles.is_concentration(oracles.Raw(cat), list(part.class_of))


@SETTINGS
@given(st.sampled_from(CATS))
def test_trivial_concentration_always_holds(cat):
    report = check_concentration(cat, trivial_concentration(cat))
    assert report.identity and report.composition and report.associativity
    assert concentration_monoid(cat, trivial_concentration(cat))[0].size == 1


@SETTINGS
@given(st.data())
def test_pullback_along_2_lifting_functors(data):
    c = data.draw(st.sampled_from(CATS))
    d = data.draw(st.sampled_from(CATS[5:]))
    fs = [f for f in oracles.functors(c, d)]
    om, mm = data.draw(st.sampled_from(fs))
    F = FunctorData(c, d, om, mm)
    labels = data.draw(st.lists(st.integers(0, 2), min_size=d.n_morphisms, max_size=d.n_morphisms))
    part_d = MorphismPartition.from_class_of(labels)
    if not check_2_lifting(F)[0] or not check_concentration(d, part_d).ok:
        return
    pulled = pullback_concentration(F, part_d)
    assert check_concentration(c, pulled).ok
    assert is_concentration_preserving(F, pulled, part_d)[0]
    assert all(pulled.related(f, g) == part_d.related(mm[f], mm[g])
               for f in range(c.n_morphisms) for g in range(c.n_morphisms))


@SETTINGS
@given(transformation_monoids(), st.randoms(use_true_random=False))
def test_isomorphism_preserves_the_table(M, rng):
    perm = list(range(M.size))
    rng.shuffle(perm)
    inv = [0] * M.size
    for a, b in enumerate(perm):
        inv[b] = a
    N = FinMonoid([[perm[M.table[inv[x]][inv[y]]] for y in range(M.size)] for x in range(M.size)],
                  perm[M.identity])
    phi = find_isomorphism(M, N)
    assert phi is not None
    assert all(phi[M.table[a][b]] == N.table[phi[a]][phi[b]] for a in range(M.size) for b in range(M.size))
    assert MonoidHom(M, N, phi).is_bijective()


@SETTINGS
@given(st.sampled_from(["Z2", "Z3", "Z4", "Z2xZ2", "S3"]), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_theta_change_is_concentration_isomorphism(gname, n, seed):
    rng = random.Random(seed)
    T = torsor_groupoid(group_by_name(gname), n)
    f1, f2 = sample_theta(T, rng.randrange(n), rng), sample_theta(T, rng.randrange(n), rng)
    Phi = theta_change_functor(T, f1, f2, rng.choice(T.hom(f1.base, f2.base)))
    assert is_concentration_isomorphism(Phi, theta_concentration(T, f1), theta_concentration(T, f2))


@SETTINGS
@given(partitioned(), transformation_monoids())
def test_workspace_round_trip(case, M):
    cat, part = case
    ws = Workspace()
    ws.categories["C"] = cat
    ws.partitions["p"] = ("C", part)
    ws.monoids["M"] = M
    text = dumps(ws)
    back = from_dict(json.loads(text))
    assert dumps(back) == text
    cat2, part2 = back.partition("p")
    assert cat2 == cat and part2 == part
    assert back.monoids["M"].table == M.table
    r1, r2 = check_concentration(cat, part), check_concentration(cat2, part2)
    assert (r1.ok, r1.witnesses) == (r2.ok, r2.witnesses)
