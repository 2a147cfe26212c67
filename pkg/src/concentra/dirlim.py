"""Group-valued diagrams on finite directed posets and their G-equivariant
direct limits.

A diagram assigns to each poset element a group from a shared registry and
to each relation ``A <= B`` a homomorphism.  A finite group acting on the
poset by order automorphisms can be folded into the limit through the
category ``S_G``: its morphisms ``B -> A`` are triples ``(A, alpha, f)``
with ``alpha`` in the group at ``A`` and ``f(B) = A``, composed by
``(A, alpha, f) o (B, beta, g) = (A, alpha * beta, f g)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Optional

from .catalg import (CatAction, SubcategoryData, check_closed, induced_action,
                     semidirect_category, semidirect_product_category)
from .category import FinCategory, FunctorData, one_object_category
from .concentration import (MorphismPartition, check_concentration, discrete_partition,
                            is_concentration_isomorphism)
from .errors import ActionError, InternalConsistencyError, StructuralError
from .monoid import (FinMonoid, MonoidHom, concentration_monoid, direct_product,
                     find_isomorphism, induced_hom, semidirect_monoid, trivial_monoid)


@dataclass(frozen=True)
class DirectedPoset:
    """``leq[a][b]`` is True when ``a <= b``."""

    elements: tuple
    leq: tuple

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        leq = tuple(tuple(bool(x) for x in row) for row in self.leq)
        n = len(elements)
        if n == 0:
            raise StructuralError("a directed poset needs at least one element")
        if len(leq) != n or any(len(row) != n for row in leq):
            raise StructuralError("order relation must be an n x n matrix")
        for a in range(n):
            if not leq[a][a]:
                raise StructuralError(f"relation is not reflexive at {elements[a]}")
        for a, b in product(range(n), repeat=2):
            if a != b and leq[a][b] and leq[b][a]:
                raise StructuralError(f"relation is not antisymmetric at {(elements[a], elements[b])}")
        for a, b, c in product(range(n), repeat=3):
            if leq[a][b] and leq[b][c] and not leq[a][c]:
                raise StructuralError(
                    f"relation is not transitive at {(elements[a], elements[b], elements[c])}")
        for a, b in product(range(n), repeat=2):
            if not any(leq[a][c] and leq[b][c] for c in range(n)):
                raise StructuralError(f"{elements[a]} and {elements[b]} have no upper bound")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "leq", leq)

    @property
    def size(self) -> int:
        return len(self.elements)

    def upper_bounds(self, a: int, b: int) -> list:
        return [c for c in range(self.size) if self.leq[a][c] and self.leq[b][c]]

    @cached_property
    def top(self) -> int:
        """The maximum; a finite directed poset always has one."""
        for t in range(self.size):
            if all(self.leq[a][t] for a in range(self.size)):
                return t
        raise InternalConsistencyError("finite directed poset without a maximum")

    @classmethod
    def from_covers(cls, elements, pairs) -> "DirectedPoset":
        """Reflexive-transitive closure of the given ``(a, b)`` relations."""
        elements = list(elements)
        n = len(elements)
        pos = {e: i for i, e in enumerate(elements)}
        leq = [[a == b for b in range(n)] for a in range(n)]
        for a, b in pairs:
            leq[pos.get(a, a)][pos.get(b, b)] = True
        for k, a, b in product(range(n), repeat=3):
            if leq[a][k] and leq[k][b]:
                leq[a][b] = True
        return cls(elements, leq)


@dataclass(frozen=True)
class GroupDiagram:
    """``groups`` is the registry; ``group_of[a]`` indexes into it.

    ``homs[(a, b)]`` is the map from the group at ``a`` to the group at
    ``b`` for every ``a <= b``, as a tuple of element indices.
    """

    poset: DirectedPoset
    groups: tuple
    group_of: tuple
    homs: dict

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        object.__setattr__(self, "group_of", tuple(int(g) for g in self.group_of))
        homs = {(int(a), int(b)): tuple(int(x) for x in m) for (a, b), m in dict(self.homs).items()}
        object.__setattr__(self, "homs", homs)
        P = self.poset
        if len(self.group_of) != P.size:
            raise StructuralError("group_of needs one entry per poset element")
        if any(not 0 <= g < len(self.groups) for g in self.group_of):
            raise StructuralError("group_of refers outside the registry")
        for G in self.groups:
            if not G.is_group:
                raise StructuralError("every diagram entry must be a group")
        for a, b in product(range(P.size), repeat=2):
            if P.leq[a][b] and (a, b) not in homs:
                raise StructuralError(f"missing homomorphism for {P.elements[a]} <= {P.elements[b]}")
            if (a, b) in homs and not P.leq[a][b]:
                raise StructuralError(f"homomorphism given for unrelated pair {(a, b)}")
        for (a, b), m in homs.items():
            h = MonoidHom(self.group(a), self.group(b), m)
            if not h.is_homomorphism():
                raise StructuralError(f"map for {P.elements[a]} <= {P.elements[b]} is not a homomorphism")
        for a in range(P.size):
            if homs[(a, a)] != tuple(range(self.group(a).size)):
                raise StructuralError(f"map for {P.elements[a]} <= {P.elements[a]} is not the identity")
        for a, b, c in product(range(P.size), repeat=3):
            if P.leq[a][b] and P.leq[b][c]:
                if tuple(homs[(b, c)][x] for x in homs[(a, b)]) != homs[(a, c)]:
                    raise StructuralError(
                        f"maps do not compose along {P.elements[a]} <= {P.elements[b]} <= {P.elements[c]}")

    def group(self, a: int) -> FinMonoid:
        return self.groups[self.group_of[a]]


@dataclass(frozen=True)
class PosetAction:
    """``perms[g][a]`` is the image of poset element ``a`` under group element ``g``."""

    group: FinMonoid
    perms: tuple

    def __post_init__(self):
        object.__setattr__(self, "perms", tuple(tuple(int(x) for x in p) for p in self.perms))


def trivial_action(poset: DirectedPoset, group: Optional[FinMonoid] = None) -> PosetAction:
    G = group if group is not None else trivial_monoid()
    return PosetAction(G, tuple(tuple(range(poset.size)) for _ in range(G.size)))


def action_problem(diagram: GroupDiagram, action: PosetAction):
    """``None`` if the action is compatible with the diagram, else ``(message, witness)``."""
    P, G = diagram.poset, action.group
    if not G.is_group:
        return "acting monoid is not a group", ()
    if len(action.perms) != G.size:
        return "one permutation per group element is required", ()
    for g, p in enumerate(action.perms):
        if sorted(p) != list(range(P.size)):
            return "not a permutation of the poset", (g,)
        for a, b in product(range(P.size), repeat=2):
            if P.leq[a][b] != P.leq[p[a]][p[b]]:
                return "permutation is not an order automorphism", (g, a, b)
    if action.perms[G.identity] != tuple(range(P.size)):
        return "identity does not act trivially", (G.identity,)
    for f, g in product(range(G.size), repeat=2):
        fg = G.table[f][g]
        if any(action.perms[fg][a] != action.perms[f][action.perms[g][a]] for a in range(P.size)):
            return "action is not a homomorphism", (f, g)
    for g, p in enumerate(action.perms):
        for a in range(P.size):
            if diagram.group_of[a] != diagram.group_of[p[a]]:
                return "group at a point differs from the group at its image", (g, a)
        for (a, b), m in diagram.homs.items():
            if diagram.homs[(p[a], p[b])] != m:
                return "diagram maps are not equivariant", (g, a, b)
    return None


def check_action(diagram: GroupDiagram, action: PosetAction) -> None:
    problem = action_problem(diagram, action)
    if problem is not None:
        raise ActionError(problem[0], witness=problem[1])


def direct_category(poset: DirectedPoset) -> FinCategory:
    """Thin category with one arrow ``A -> B`` per relation ``A <= B``."""
    n = poset.size
    pairs = [(a, b) for a in range(n) for b in range(n) if poset.leq[a][b]]
    index = {p: i for i, p in enumerate(pairs)}
    morphisms = [(f"{poset.elements[a]}<={poset.elements[b]}", a, b) for a, b in pairs]
    identities = [index[(a, a)] for a in range(n)]
    return FinCategory.build(poset.elements, morphisms, identities,
                             lambda f, g: index[(pairs[g][0], pairs[f][1])])


# -- S_G --------------------------------------------------------------------------

def sg_triples(diagram: GroupDiagram, action: PosetAction) -> tuple:
    """Morphisms of ``S_G`` as ``(A, alpha, f)``, ordered by ``A``, then ``f``, then ``alpha``."""
    out = []
    for a in range(diagram.poset.size):
        for f in range(action.group.size):
            for alpha in range(diagram.group(a).size):
                out.append((a, alpha, f))
    return tuple(out)


def _inverse_perm(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return inv


def _agree_at(diagram, a, alpha, b, beta, c) -> bool:
    return diagram.homs[(a, c)][alpha] == diagram.homs[(b, c)][beta]


def sg_related(diagram: GroupDiagram, s, t) -> bool:
    """The relation on ``S_G`` decided at the maximum of the poset."""
    (a, alpha, f), (b, beta, g) = s, t
    top = diagram.poset.top
    return f == g and _agree_at(diagram, a, alpha, b, beta, top)


def sg_related_any_bound(diagram: GroupDiagram, s, t) -> bool:
    """Same relation searched over every common upper bound."""
    (a, alpha, f), (b, beta, g) = s, t
    return f == g and any(_agree_at(diagram, a, alpha, b, beta, c)
                          for c in diagram.poset.upper_bounds(a, b))


def build_SG(diagram: GroupDiagram, action: PosetAction):
    """``(S_G, partition)``; see :func:`sg_triples` for the morphism order."""
    check_action(diagram, action)
    P, G = diagram.poset, action.group
    triples = sg_triples(diagram, action)
    index = {t: i for i, t in enumerate(triples)}
    inv = [_inverse_perm(p) for p in action.perms]
    morphisms = []
    for a, alpha, f in triples:
        label = f"({P.elements[a]},{diagram.group(a).element_labels[alpha]},{G.element_labels[f]})"
        morphisms.append((label, inv[f][a], a))
    identities = [index[(a, diagram.group(a).identity, G.identity)] for a in range(P.size)]

    def comp(i, j):
        a, alpha, f = triples[i]
        _, beta, g = triples[j]
        return index[(a, diagram.group(a).table[alpha][beta], G.table[f][g])]

    cat = FinCategory.build(P.elements, morphisms, identities, comp)
    top = P.top
    part = MorphismPartition.from_class_of(
        [(f, diagram.homs[(a, top)][alpha]) for a, alpha, f in triples])
    if not check_concentration(cat, part).ok:
        raise InternalConsistencyError("relation on S_G is not a concentration")
    return cat, part


def equivariant_direct_limit(diagram: GroupDiagram, action: PosetAction) -> FinMonoid:
    cat, part = build_SG(diagram, action)
    M, _ = concentration_monoid(cat, part)
    if not M.is_group:
        raise InternalConsistencyError("equivariant direct limit is not a group")
    return M


def classical_direct_limit(diagram: GroupDiagram) -> FinMonoid:
    """The colimit, read off at the maximum element."""
    return diagram.group(diagram.poset.top)


# -- decomposition ------------------------------------------------------------------

@dataclass
class DecompositionReport:
    functor_is_isomorphism: bool
    monoid_isomorphism: Optional[tuple]
    limit: FinMonoid
    classical: FinMonoid
    semidirect: FinMonoid
    action_on_limit: tuple

    @property
    def ok(self) -> bool:
        return self.functor_is_isomorphism and self.monoid_isomorphism is not None


def decomposition(diagram: GroupDiagram, action: PosetAction) -> DecompositionReport:
    """Rebuild ``S_G`` as ``S_0`` twisted by the one-object category of ``G``
    and compare, both as categories with concentration and at monoid level."""
    check_action(diagram, action)
    G = action.group
    trivial = trivial_action(diagram.poset)
    S0, part0 = build_SG(diagram, trivial)
    t0 = sg_triples(diagram, trivial)
    idx0 = {(a, alpha): i for i, (a, alpha, _) in enumerate(t0)}
    BG = one_object_category(G)
    functors = []
    for f in range(G.size):
        p = action.perms[f]
        functors.append(FunctorData(S0, S0, p, [idx0[(p[a], alpha)] for a, alpha, _ in t0]))
    Phi = CatAction(BG, S0, functors)
    dis = discrete_partition(BG)
    prod_cat, prod_part = semidirect_category(S0, part0, BG, dis, Phi)
    _, triples = semidirect_product_category(Phi)
    SG, part_g = build_SG(diagram, action)
    idx_g = {t: i for i, t in enumerate(sg_triples(diagram, action))}
    # (c1, (A, alpha), f) -> (A, alpha, f)
    # one base object, so (A, *) has index A
    obj_map = list(range(S0.n_objects))
    mor_map = []
    for _, m0, f in triples:
        a, alpha, _ = t0[m0]
        mor_map.append(idx_g[(a, alpha, f)])
    Psi = FunctorData(prod_cat, SG, obj_map, mor_map)
    functor_ok = is_concentration_isomorphism(Psi, prod_part, part_g)
    limit = equivariant_direct_limit(diagram, action)
    L0, MG, phi = induced_action(Phi, part0, dis)
    semi = semidirect_monoid(L0, MG, phi)
    iso = find_isomorphism(limit, semi)
    return DecompositionReport(functor_ok, iso, limit, classical_direct_limit(diagram), semi, phi)


def check_semidirect_decomposition(diagram: GroupDiagram, action: PosetAction) -> bool:
    return decomposition(diagram, action).ok


def restrict_action(action: PosetAction, subgroup) -> PosetAction:
    H, incl = action.group.submonoid(subgroup)
    if not H.is_group:
        raise StructuralError("subset is not a subgroup")
    return PosetAction(H, tuple(action.perms[g] for g in incl.map))


def subgroup_subconcentration(diagram: GroupDiagram, action: PosetAction, subgroup):
    """``S_H`` inside ``S_G`` for a subgroup ``H``.

    Returns ``(closed, hom)`` where ``closed`` says the relation on ``S_G``
    restricts to a concentration on ``S_H`` and ``hom`` is the induced map of
    limits.
    """
    SG, part_g = build_SG(diagram, action)
    sub_action = restrict_action(action, subgroup)
    SH, part_h = build_SG(diagram, sub_action)
    idx_g = {t: i for i, t in enumerate(sg_triples(diagram, action))}
    incl = action.group.submonoid(subgroup)[1].map
    mor_map = [idx_g[(a, alpha, incl[h])] for a, alpha, h in sg_triples(diagram, sub_action)]
    sub = SubcategoryData(range(SG.n_objects), mor_map)
    closed = check_closed(SG, part_g, sub)
    F = FunctorData(SH, SG, range(SG.n_objects), mor_map)
    return closed, induced_hom(F, part_h, part_g)


def product_with_group(diagram: GroupDiagram, group: FinMonoid) -> FinMonoid:
    """``lim F x G``, the expected limit for a trivial action."""
    return direct_product(classical_direct_limit(diagram), group)
