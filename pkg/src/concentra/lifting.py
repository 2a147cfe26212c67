"""Lifting properties of functors and the passage between concentrations
and functors into one-object categories."""
from __future__ import annotations

from typing import Optional

from .category import (FinCategory, FunctorData, check_functor, compose_functors,
                       is_identity_functor, one_object_category)
from .concentration import (MorphismPartition, check_concentration, discrete_partition,
                            is_concentration_preserving)
from .errors import (ConcentrationError, InternalConsistencyError, NotTwoLiftingError,
                     StructuralError)
from .monoid import FinMonoid, MonoidHom, concentration_monoid, find_isomorphism, induced_hom


def _preimages(F: FunctorData) -> dict:
    pre = {}
    for f, g in enumerate(F.mor_map):
        pre.setdefault(g, []).append(f)
    return pre


def check_2_lifting(F: FunctorData):
    """``(True, None)`` if every composable target pair lifts to a composable
    source pair, else ``(False, (g1, g2))`` for the first pair that does not."""
    src_cat = F.source
    lifted = {(F.mor_map[f1], F.mor_map[f2]) for f1, f2 in src_cat.composable_pairs}
    for pair in F.target.composable_pairs:
        if pair not in lifted:
            return False, pair
    return True, None


def is_2_lifting(F: FunctorData) -> bool:
    return check_2_lifting(F)[0]


def check_surjective_on_morphisms(F: FunctorData) -> bool:
    return set(F.mor_map) == set(range(F.target.n_morphisms))


def multivalued_fibration_witness(F: FunctorData) -> Optional[tuple]:
    """First ``(g, E1)`` where ``g`` has no lift ending at ``E1`` although
    ``F(E1)`` is the target of ``g``."""
    E, B = F.source, F.target
    ends = {(F.mor_map[f], E.tgt[f]) for f in range(E.n_morphisms)}
    for g in range(B.n_morphisms):
        for e1 in range(E.n_objects):
            if F.obj_map[e1] == B.tgt[g] and (g, e1) not in ends:
                return g, e1
    return None


def check_multivalued_fibration(F: FunctorData) -> bool:
    return multivalued_fibration_witness(F) is None


def pullback_concentration(F: FunctorData, part_d: MorphismPartition) -> MorphismPartition:
    """``f ~ g`` iff ``F(f) ~ F(g)``.  The result is re-checked."""
    ok, witness = check_2_lifting(F)
    if not ok:
        raise NotTwoLiftingError("functor is not 2-lifting", witness)
    report = check_concentration(F.target, part_d)
    if not report.ok:
        raise ConcentrationError(
            "target partition is not a concentration: " + ", ".join(report.failures()), report)
    part = MorphismPartition.from_class_of([part_d.class_of[g] for g in F.mor_map])
    if not check_concentration(F.source, part).ok:
        raise InternalConsistencyError("pullback along a 2-lifting functor is not a concentration")
    return part


def concentrating_functor(cat: FinCategory, part: MorphismPartition):
    """The functor ``f -> [f]`` into the one-object category of the
    concentration monoid.  Returns ``(target, functor)``."""
    M, class_map = concentration_monoid(cat, part)
    target = one_object_category(M)
    F = FunctorData(cat, target, (0,) * cat.n_objects, class_map)
    return target, F


def externalize(cat: FinCategory, part: MorphismPartition,
                target_monoid: Optional[FinMonoid] = None) -> FunctorData:
    """A 2-lifting functor from ``cat`` to a one-object category.

    With ``target_monoid`` the concentrating functor is followed by the
    lexicographically least isomorphism onto that monoid.
    """
    _, F = concentrating_functor(cat, part)
    if target_monoid is None:
        return F
    M, _ = concentration_monoid(cat, part)
    iso = find_isomorphism(M, target_monoid)
    if iso is None:
        raise StructuralError("concentration monoid is not isomorphic to the requested monoid")
    target = one_object_category(target_monoid)
    return FunctorData(cat, target, F.obj_map, tuple(iso[c] for c in F.mor_map))


def internalize(F: FunctorData) -> MorphismPartition:
    """Pull back the discrete partition of a one-object target."""
    if F.target.n_objects != 1:
        raise StructuralError("internalize needs a functor into a one-object category")
    return pullback_concentration(F, discrete_partition(F.target))


# -- adjunction ------------------------------------------------------------------

def _identification(M: FinMonoid) -> MonoidHom:
    """``m -> [m]`` from ``M`` onto the monoid of ``(BG(M), discrete)``."""
    BM = one_object_category(M)
    M2, class_map = concentration_monoid(BM, discrete_partition(BM))
    h = MonoidHom(M, M2, class_map)
    if not (h.is_homomorphism() and h.is_bijective()):
        raise InternalConsistencyError("canonical identification is not an isomorphism")
    return h


def _unit_is_identity(M: FinMonoid) -> bool:
    # eta at BG(M), pushed back along the identification, is the identity functor
    BM = one_object_category(M)
    target, eta = concentrating_functor(BM, discrete_partition(BM))
    ident = _identification(M)
    back = [0] * ident.target.size
    for m, c in enumerate(ident.map):
        back[c] = m
    counit = FunctorData(target, BM, (0,), tuple(back))
    if not check_functor(counit).ok:
        return False
    return is_identity_functor(compose_functors(counit, eta))


def _counit_after_unit_is_identity(cat: FinCategory, part: MorphismPartition) -> bool:
    M, _ = concentration_monoid(cat, part)
    target, eta = concentrating_functor(cat, part)
    h = induced_hom(eta, part, discrete_partition(target))
    ident = _identification(M)
    # h lands in M_(BG(M), dis); read it back in M
    back = {c: m for m, c in enumerate(ident.map)}
    return all(back[h.map[m]] == m for m in range(M.size))


def verify_adjunction_triangles(cat: FinCategory, part: MorphismPartition) -> bool:
    """Both triangle identities at ``(cat, part)`` and its monoid."""
    M, _ = concentration_monoid(cat, part)
    return _counit_after_unit_is_identity(cat, part) and _unit_is_identity(M)


def verify_adjunction_triangles_monoid(M: FinMonoid) -> bool:
    BM = one_object_category(M)
    return _unit_is_identity(M) and _counit_after_unit_is_identity(BM, discrete_partition(BM))
