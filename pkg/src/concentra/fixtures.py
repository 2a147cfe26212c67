"""Named example categories, partitions, functors and diagrams."""
from __future__ import annotations

import re

from .category import FinCategory, FunctorData, one_object_category
from .concentration import (MorphismPartition, discrete_partition, partition_from_labels,
                            trivial_concentration)
from .dirlim import DirectedPoset, GroupDiagram, PosetAction, trivial_action
from .errors import StructuralError
from .groupoids import torsor_groupoid
from .monoid import (FinMonoid, cyclic_group, klein_four_group, symmetric_group,
                     trivial_monoid)

GROUP_NAMES = ("Z1", "Z2", "Z3", "Z4", "Z6", "Z2xZ2", "S3")


def group_by_name(name: str) -> FinMonoid:
    """``Zn``, ``Z2xZ2``, ``S3`` (any ``Sn``) or ``trivial``."""
    if name in ("trivial", "1"):
        return trivial_monoid()
    if name in ("Z2xZ2", "V4", "klein"):
        return klein_four_group()
    m = re.fullmatch(r"Z(\d+)", name)
    if m and int(m.group(1)) >= 1:
        return cyclic_group(int(m.group(1)))
    m = re.fullmatch(r"S(\d)", name)
    if m and int(m.group(1)) >= 1:
        return symmetric_group(int(m.group(1)))
    raise StructuralError(f"unknown group name {name!r}")


def _two_groups(extra_arrow: bool) -> FinCategory:
    mors = [("0_C", 0, 0), ("1_C", 0, 0)] + [(f"{i}_D", 1, 1) for i in range(4)]
    if extra_arrow:
        mors.append(("u", 0, 1))
    u = 6

    def comp(f, g):
        if f == u or g == u:
            return u
        if f < 2:
            return (f + g) % 2
        return 2 + (f + g - 4) % 4

    return FinCategory.build(["C", "D"], mors, [0, 2], comp)


def e1() -> FinCategory:
    """``Z/2`` at ``C`` and ``Z/4`` at ``D``, nothing in between."""
    return _two_groups(False)


def e1_partitions() -> dict:
    cat = e1()
    return {
        "sim_a": partition_from_labels(cat, [["0_C", "0_D"], ["1_C", "2_D"]]),
        "sim_b": partition_from_labels(cat, [["0_C", "0_D", "2_D"], ["1_C", "1_D", "3_D"]]),
        "sim_c": partition_from_labels(cat, [["0_C", "1_C", "0_D"]]),
        "sim_d": partition_from_labels(cat, [["0_C", "0_D", "1_D", "2_D", "3_D"]]),
    }


def e1m() -> FinCategory:
    """``e1`` plus a single arrow ``u: C -> D``."""
    return _two_groups(True)


def _relabel(cat: FinCategory, labels) -> FinCategory:
    mors = [(lab, s, t) for lab, (_, s, t) in zip(labels, cat.morphisms)]
    return FinCategory(cat.objects, mors, cat.identities, cat.composition)


KLEIN_COLORS = ("d", "b", "r", "g")


def klein() -> FinCategory:
    """Two objects; each hom-set is a copy of the Klein group, colored
    d (black, identity), r, b, g with ``r o b = g`` and so on."""
    G = klein_four_group()
    cat = torsor_groupoid(G, 2)
    names = ("C", "D")
    labels = []
    for a in range(2):
        for b in range(2):
            for g in range(G.size):
                labels.append(f"{KLEIN_COLORS[g]}_{names[a]}{names[b]}")
    cat = _relabel(cat, labels)
    return FinCategory(names, cat.morphisms, cat.identities, cat.composition)


def color_partition(cat: FinCategory) -> MorphismPartition:
    """Relate morphisms whose labels start with the same color letter
    (identities labelled ``id_*`` count as black)."""
    def color(label):
        return "d" if label.startswith("id_") else label.split("_")[0]
    return MorphismPartition.from_class_of([color(m[0]) for m in cat.morphisms])


Z3_COLORS = ("d", "r", "b")


def z3color() -> FinCategory:
    """``C -> E -> D`` and ``C -> D``, three colored arrows on each leg,
    composing like ``Z/3`` with d = 0, r = 1, b = 2."""
    objects = ["C", "D", "E"]
    legs = [("CE", 0, 2), ("ED", 2, 1), ("CD", 0, 1)]
    mors = [("id_C", 0, 0), ("id_D", 1, 1), ("id_E", 2, 2)]
    where = {}
    for leg, s, t in legs:
        for v, c in enumerate(Z3_COLORS):
            where[len(mors)] = (leg, v)
            mors.append((f"{c}_{leg}", s, t))
    lookup = {key: i for i, key in where.items()}

    def comp(f, g):
        if f < 3:
            return g
        if g < 3:
            return f
        (_, vf), (_, vg) = where[f], where[g]
        return lookup[("CD", (vf + vg) % 3)]

    return FinCategory.build(objects, mors, [0, 1, 2], comp)


def fig2():
    """``f: C -> D``, ``g: D -> E``, ``h = g o f`` and a functor onto the
    one-object category of ``Z/2`` with ``f -> 0``, ``g, h -> 1``.

    Returns ``(category, functor)``.
    """
    mors = [("id_C", 0, 0), ("id_D", 1, 1), ("id_E", 2, 2),
            ("f", 0, 1), ("g", 1, 2), ("h", 0, 2)]

    def comp(f, g):
        if f < 3:
            return g
        if g < 3:
            return f
        return 5  # only g o f

    cat = FinCategory.build(["C", "D", "E"], mors, [0, 1, 2], comp)
    BZ2 = one_object_category(cyclic_group(2))
    F = FunctorData(cat, BZ2, (0, 0, 0), (0, 0, 0, 0, 1, 1))
    return cat, F


# -- diagrams ---------------------------------------------------------------------

def chain_diagram() -> GroupDiagram:
    """``Z/2 -> Z/4`` by doubling on ``C <= D``."""
    P = DirectedPoset.from_covers(["C", "D"], [("C", "D")])
    homs = {(0, 0): (0, 1), (1, 1): (0, 1, 2, 3), (0, 1): (0, 2)}
    return GroupDiagram(P, (cyclic_group(2), cyclic_group(4)), (0, 1), homs)


def vee_diagram():
    """``A, B <= T`` with ``Z/2`` everywhere and identity maps, plus the
    ``Z/2`` action swapping ``A`` and ``B``.  Returns ``(diagram, action)``."""
    P = DirectedPoset.from_covers(["A", "B", "T"], [("A", "T"), ("B", "T")])
    homs = {(a, b): (0, 1) for a in range(3) for b in range(3) if P.leq[a][b]}
    D = GroupDiagram(P, (cyclic_group(2),), (0, 0, 0), homs)
    return D, PosetAction(cyclic_group(2), ((0, 1, 2), (1, 0, 2)))


def point_diagram(group: FinMonoid = None) -> GroupDiagram:
    G = group if group is not None else cyclic_group(6)
    P = DirectedPoset(["pt"], [[True]])
    return GroupDiagram(P, (G,), (0,), {(0, 0): tuple(range(G.size))})


def trivial_action_fixtures() -> list:
    """``(name, diagram, action)`` with groups acting trivially."""
    vee, _ = vee_diagram()
    out = []
    for dname, D in (("chain", chain_diagram()), ("vee", vee), ("point", point_diagram())):
        for gname in ("Z1", "Z2", "Z3"):
            out.append((f"{dname}/{gname}", D, trivial_action(D.poset, group_by_name(gname))))
    return out


def concentration_fixtures() -> list:
    """``(name, category, partition)`` for every named concentration."""
    out = []
    cat = e1()
    for name, part in e1_partitions().items():
        out.append((f"e1/{name}", cat, part))
    m = e1m()
    out.append(("e1m/trivial", m, MorphismPartition.from_class_of([0] * m.n_morphisms)))
    k = klein()
    out.append(("klein/color", k, color_partition(k)))
    z = z3color()
    out.append(("z3color/color", z, color_partition(z)))
    for gname in ("Z4", "S3"):
        B = one_object_category(group_by_name(gname))
        out.append((f"B{gname}/discrete", B, discrete_partition(B)))
    fcat, _ = fig2()
    out.append(("fig2/trivial", fcat, MorphismPartition.from_class_of([0] * fcat.n_morphisms)))
    return out


# -- workspace corpus -----------------------------------------------------------------

def _bg(name):
    return one_object_category(group_by_name(name))


def fixture_workspaces() -> dict:
    """File name -> :class:`~concentra.workspace.Workspace` for the shipped corpus."""
    from .catalg import CatAction, SubcategoryData
    from .category import identity_functor
    from .workspace import Workspace

    out = {}

    ws = Workspace()
    cat = e1()
    ws.categories["E1"] = cat
    for name, part in e1_partitions().items():
        ws.partitions[name] = ("E1", part)
    ws.partitions["trivial"] = ("E1", MorphismPartition.from_class_of([0] * cat.n_morphisms))
    ws.partitions["discrete"] = ("E1", discrete_partition(cat))
    ws.partitions["merge_1C_1D"] = ("E1", partition_from_labels(cat, [["1_C", "1_D"]]))
    ws.subcategories["B"] = ("E1", SubcategoryData([1], [2, 4]))
    ws.subcategories["B_open"] = ("E1", SubcategoryData([1], [2, 3]))
    ws.functors["id"] = ("E1", "E1", identity_functor(cat))
    for g in ("Z2", "Z4"):
        ws.monoids[g] = group_by_name(g)
    out["e1.json"] = ws

    ws = Workspace()
    m = e1m()
    ws.categories["E1m"] = m
    ws.partitions["trivial"] = ("E1m", trivial_concentration(m))
    ws.partitions["discrete"] = ("E1m", discrete_partition(m))
    out["e1m.json"] = ws

    ws = Workspace()
    k = klein()
    ws.categories["Klein"] = k
    ws.partitions["color"] = ("Klein", color_partition(k))
    ws.monoids["Z2xZ2"] = group_by_name("Z2xZ2")
    ws.monoids["Z4"] = group_by_name("Z4")
    out["klein.json"] = ws

    ws = Workspace()
    z = z3color()
    ws.categories["Z3color"] = z
    ws.partitions["color"] = ("Z3color", color_partition(z))
    ws.monoids["Z3"] = group_by_name("Z3")
    out["z3color.json"] = ws

    ws = Workspace()
    fcat, F = fig2()
    ws.categories["Fig2"] = fcat
    ws.categories["BZ2"] = F.target
    ws.functors["F"] = ("Fig2", "BZ2", F)
    ws.partitions["discrete"] = ("BZ2", discrete_partition(F.target))
    out["fig2.json"] = ws

    ws = Workspace()
    Z3, Z2 = _bg("Z3"), _bg("Z2")
    ws.categories["BZ3"] = Z3
    ws.categories["BZ2"] = Z2
    ws.partitions["Z3_discrete"] = ("BZ3", discrete_partition(Z3))
    ws.partitions["Z2_discrete"] = ("BZ2", discrete_partition(Z2))
    ws.functors["id_Z3"] = ("BZ3", "BZ3", identity_functor(Z3))
    ws.functors["neg_Z3"] = ("BZ3", "BZ3", FunctorData(Z3, Z3, (0,), (0, 2, 1)))
    ws.cat_actions["inversion"] = ("BZ2", "BZ3", ["id_Z3", "neg_Z3"],
                                   CatAction(Z2, Z3, [identity_functor(Z3), ws.functors["neg_Z3"][2]]))
    ws.cat_actions["trivial"] = ("BZ2", "BZ3", ["id_Z3", "id_Z3"],
                                 CatAction(Z2, Z3, [identity_functor(Z3)] * 2))
    ws.monoids["S3"] = group_by_name("S3")
    ws.monoids["Z6"] = group_by_name("Z6")
    out["semidirect.json"] = ws

    ws = Workspace()
    chain = chain_diagram()
    vee, swap = vee_diagram()
    point = point_diagram()
    for name in ("Z1", "Z2", "Z4", "Z6"):
        ws.monoids[name] = group_by_name(name)
    ws.posets["chain"] = chain.poset
    ws.posets["vee"] = vee.poset
    ws.posets["point"] = point.poset
    ws.diagrams["chain"] = ("chain", ["Z2", "Z4"], chain)
    ws.diagrams["vee"] = ("vee", ["Z2"], vee)
    ws.diagrams["point"] = ("point", ["Z6"], point)
    ws.actions["vee_swap"] = ("vee", "Z2", swap)
    ws.actions["vee_fixed"] = ("vee", "Z2", trivial_action(vee.poset, group_by_name("Z2")))
    ws.actions["chain_fixed"] = ("chain", "Z2", trivial_action(chain.poset, group_by_name("Z2")))
    ws.actions["point_fixed"] = ("point", "Z2", trivial_action(point.poset, group_by_name("Z2")))
    out["dirlim.json"] = ws

    ws = Workspace()
    for name in GROUP_NAMES:
        ws.monoids[name] = group_by_name(name)
    out["groups.json"] = ws
    return out
