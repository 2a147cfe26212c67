"""Sub-concentrations, quotients and semidirect products of categories."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .category import (FinCategory, FunctorData, check_functor, compose_functors,
                       is_identity_functor, is_strongly_invertible)
from .concentration import MorphismPartition, check_concentration
from .errors import (ActionError, ConcentrationError, InternalConsistencyError,
                     NormalityError, SubcategoryError)
from .monoid import concentration_monoid, normal_congruence, normality_witness


@dataclass(frozen=True)
class SubcategoryData:
    """Object and morphism ids of a subcategory, in the parent's numbering."""

    objects: tuple
    morphisms: tuple

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(sorted({int(x) for x in self.objects})))
        object.__setattr__(self, "morphisms", tuple(sorted({int(x) for x in self.morphisms})))


def subcategory_witness(cat: FinCategory, sub: SubcategoryData):
    """``None`` for a valid subcategory, else ``(kind, witness)``."""
    objs, mors = set(sub.objects), set(sub.morphisms)
    for a in sub.objects:
        if not 0 <= a < cat.n_objects:
            return "object_range", (a,)
    for f in sub.morphisms:
        if not 0 <= f < cat.n_morphisms:
            return "morphism_range", (f,)
        if cat.src[f] not in objs or cat.tgt[f] not in objs:
            return "endpoint", (f,)
    for a in sub.objects:
        if cat.identities[a] not in mors:
            return "identity", (a,)
    for f, g in product(sub.morphisms, repeat=2):
        h = cat.compose(f, g)
        if h is not None and h not in mors:
            return "composition", (f, g)
    return None


def subcategory(cat: FinCategory, sub: SubcategoryData):
    """The subcategory as a :class:`FinCategory` together with its inclusion functor."""
    problem = subcategory_witness(cat, sub)
    if problem is not None:
        kind, witness = problem
        raise SubcategoryError(f"not a subcategory ({kind} fails)", witness=witness)
    opos = {a: i for i, a in enumerate(sub.objects)}
    mpos = {f: i for i, f in enumerate(sub.morphisms)}
    morphisms = [(cat.morphism_label(f), opos[cat.src[f]], opos[cat.tgt[f]]) for f in sub.morphisms]
    identities = [mpos[cat.identities[a]] for a in sub.objects]
    table = [(mpos[f], mpos[g], mpos[cat.comp[(f, g)]])
             for f, g in product(sub.morphisms, repeat=2) if (f, g) in cat.comp]
    B = FinCategory([cat.objects[a] for a in sub.objects], morphisms, identities, table)
    return B, FunctorData(B, cat, sub.objects, sub.morphisms)


def restrict(cat: FinCategory, part: MorphismPartition, sub: SubcategoryData) -> MorphismPartition:
    subcategory(cat, sub)
    return MorphismPartition.from_class_of([part.class_of[f] for f in sub.morphisms])


def check_closed(cat: FinCategory, part: MorphismPartition, sub: SubcategoryData) -> bool:
    B, _ = subcategory(cat, sub)
    return check_concentration(B, restrict(cat, part, sub)).ok


def is_saturated(cat: FinCategory, part: MorphismPartition, sub: SubcategoryData) -> bool:
    """Every morphism related to one of ``sub`` is in ``sub`` (sufficient for closedness)."""
    mors = set(sub.morphisms)
    return all(g in mors for f in sub.morphisms for g in part.classes[part.class_of[f]])


def _sub_image(cat, part, sub):
    if not check_closed(cat, part, sub):
        raise ConcentrationError("the partition is not closed on the subcategory")
    M, _ = concentration_monoid(cat, part)
    return M, sorted({part.class_of[f] for f in sub.morphisms})


def is_normal_subconcentration(cat: FinCategory, part: MorphismPartition, sub: SubcategoryData):
    """Normality decided in the concentration monoid: ``(ok, witness)``.

    The witness is ``(class of f, side, class of h)`` in the monoid.
    """
    M, S = _sub_image(cat, part, sub)
    w = normality_witness(M, S)
    return w is None, w


def quotient_concentration(cat: FinCategory, part: MorphismPartition,
                           sub: SubcategoryData) -> MorphismPartition:
    """``f ~ g`` iff ``[h1][f] = [g][h2]`` for classes ``h1, h2`` of ``sub``."""
    M, S = _sub_image(cat, part, sub)
    w = normality_witness(M, S)
    if w is not None:
        raise NormalityError("sub-concentration is not normal", witness=w)
    cong = normal_congruence(M, S)
    q = MorphismPartition.from_class_of([cong.class_of[c] for c in part.class_of])
    if not check_concentration(cat, q).ok:
        raise InternalConsistencyError("quotient relation is not a concentration")
    return q


# -- actions and semidirect products ---------------------------------------------

@dataclass(frozen=True)
class CatAction:
    """A functor from ``base`` into endofunctors of ``fiber``:
    ``functors[f]`` is the endofunctor assigned to morphism ``f`` of ``base``."""

    base: FinCategory
    fiber: FinCategory
    functors: tuple

    def __post_init__(self):
        object.__setattr__(self, "functors", tuple(self.functors))

    def __call__(self, f: int) -> FunctorData:
        return self.functors[f]

    @cached_property
    def inverses(self) -> tuple:
        return tuple(is_strongly_invertible(F) for F in self.functors)


def action_problem(action: CatAction, require_invertible: bool = True):
    """``None`` if the action is a functor (into automorphisms when
    ``require_invertible``), else ``(message, witness)``."""
    D, C = action.base, action.fiber
    if len(action.functors) != D.n_morphisms:
        return "one functor per base morphism is required", ()
    for f, F in enumerate(action.functors):
        if F.source != C or F.target != C:
            return "assigned functor is not an endofunctor of the fiber", (f,)
        if not check_functor(F).ok:
            return "assigned map is not a functor", (f,)
        if require_invertible and action.inverses[f] is None:
            return "assigned functor is not strongly invertible", (f,)
    for i in D.identities:
        if not is_identity_functor(action.functors[i]):
            return "identity morphism does not act as the identity functor", (i,)
    for (f2, f1), h in sorted(D.comp.items()):
        composite = compose_functors(action.functors[f2], action.functors[f1])
        if composite != action.functors[h]:
            return "action does not respect composition", (f2, f1)
    return None


def check_action(action: CatAction, require_invertible: bool = True) -> None:
    problem = action_problem(action, require_invertible)
    if problem is not None:
        raise ActionError(problem[0], witness=problem[1])


def compatibility_witness(action: CatAction, part_c: MorphismPartition,
                          part_d: MorphismPartition):
    """First ``(alpha, alpha', f, f')`` with related inputs but unrelated
    ``Phi_f(alpha)``, ``Phi_f'(alpha')``; ``None`` when compatible."""
    seen = {}
    for f in range(action.base.n_morphisms):
        mor = action.functors[f].mor_map
        for a in range(action.fiber.n_morphisms):
            key = (part_c.class_of[a], part_d.class_of[f])
            val = part_c.class_of[mor[a]]
            if key not in seen:
                seen[key] = (val, a, f)
            elif seen[key][0] != val:
                _, a0, f0 = seen[key]
                return a0, a, f0, f
    return None


def semidirect_product_category(action: CatAction):
    """The plain semidirect product (endofunctors allowed).

    Morphisms are ``(c1, alpha, f)`` with ``alpha: Phi_f(c1) -> c2``, running
    from ``(c1, src f)`` to ``(c2, tgt f)``.  Returns ``(category, triples)``.
    """
    check_action(action, require_invertible=False)
    C, D = action.fiber, action.base
    nd = D.n_objects
    objects = [f"({C.objects[c]},{D.objects[d]})" for c in range(C.n_objects) for d in range(nd)]

    def obj(c, d):
        return c * nd + d

    triples = []
    for f in range(D.n_morphisms):
        Phi = action.functors[f]
        for c1 in range(C.n_objects):
            for a in range(C.n_morphisms):
                if C.src[a] == Phi.obj_map[c1]:
                    triples.append((c1, a, f))
    triples.sort(key=lambda t: (t[2], t[0], t[1]))
    index = {t: i for i, t in enumerate(triples)}
    morphisms = []
    for c1, a, f in triples:
        label = f"({C.morphism_label(a)},{D.morphism_label(f)})"
        if action.inverses[f] is None:
            label = f"{C.objects[c1]}:{label}"
        morphisms.append((label, obj(c1, D.src[f]), obj(C.tgt[a], D.tgt[f])))
    identities = [index[(c, C.identities[c], D.identities[d])]
                  for c in range(C.n_objects) for d in range(nd)]

    def comp(i, j):
        c2, a2, f2 = triples[i]
        c1, a1, f1 = triples[j]
        a = C.comp[(a2, action.functors[f2].mor_map[a1])]
        return index[(c1, a, D.comp[(f2, f1)])]

    return FinCategory.build(objects, morphisms, identities, comp), tuple(triples)


def semidirect_category(C: FinCategory, part_c: MorphismPartition, D: FinCategory,
                        part_d: MorphismPartition, action: CatAction):
    """Semidirect product with the product partition.

    Returns ``(category, partition)``; morphisms are numbered as in
    :func:`semidirect_product_category`.
    """
    if action.fiber != C or action.base != D:
        raise ActionError("action does not act on the given categories")
    check_action(action, require_invertible=True)
    for cat, part, name in ((C, part_c, "fiber"), (D, part_d, "base")):
        report = check_concentration(cat, part)
        if not report.ok:
            raise ConcentrationError(f"{name} partition is not a concentration", report)
    w = compatibility_witness(action, part_c, part_d)
    if w is not None:
        raise ActionError("action is not compatible with the concentrations", witness=w)
    cat, triples = semidirect_product_category(action)
    part = MorphismPartition.from_class_of(
        [(part_c.class_of[a], part_d.class_of[f]) for _, a, f in triples])
    if not check_concentration(cat, part).ok:
        raise InternalConsistencyError("product relation on the semidirect product is not a concentration")
    return cat, part


def induced_action(action: CatAction, part_c: MorphismPartition, part_d: MorphismPartition):
    """``phi[[f]][[alpha]] = [Phi_f(alpha)]`` on concentration monoid elements."""
    w = compatibility_witness(action, part_c, part_d)
    if w is not None:
        raise ActionError("action is not compatible with the concentrations", witness=w)
    MC, _ = concentration_monoid(action.fiber, part_c)
    MD, _ = concentration_monoid(action.base, part_d)
    phi = []
    for cls_f in part_d.classes:
        mor = action.functors[cls_f[0]].mor_map
        phi.append(tuple(part_c.class_of[mor[cls_a[0]]] for cls_a in part_c.classes))
    return MC, MD, tuple(phi)
