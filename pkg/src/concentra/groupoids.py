"""Finite groupoid models: torsor groupoids with path-family concentrations,
and codiscrete covers."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .category import FinCategory, FunctorData, endomorphism_monoid, one_object_category
from .concentration import MorphismPartition, check_concentration, discrete_partition
from .errors import InternalConsistencyError, StructuralError
from .lifting import pullback_concentration
from .monoid import FinMonoid, MonoidHom, concentration_monoid


def _require_group(G: FinMonoid):
    if not G.is_group:
        raise StructuralError("a group is required")


def torsor_groupoid(G: FinMonoid, n: int) -> FinCategory:
    """Objects ``x1..xn``; ``Mor(a, b)`` is a copy of ``G``.

    Morphism ``(a, b, g)`` has id ``(a * n + b) * |G| + g`` and
    ``(b, c, h) o (a, b, g) = (a, c, h g)``.
    """
    _require_group(G)
    if n < 1:
        raise StructuralError("at least one object is required")
    k = G.size
    objects = [f"x{i + 1}" for i in range(n)]
    morphisms = []
    for a in range(n):
        for b in range(n):
            for g in range(k):
                label = G.element_labels[g] if n == 1 else f"{G.element_labels[g]}:{objects[a]}->{objects[b]}"
                morphisms.append((label, a, b))

    def idx(a, b, g):
        return (a * n + b) * k + g

    def comp(f, g):
        b, c, h = divmod(f // k, n) + (f % k,)
        a, _, x = divmod(g // k, n) + (g % k,)
        return idx(a, c, G.table[h][x])

    identities = [idx(a, a, G.identity) for a in range(n)]
    return FinCategory.build(objects, morphisms, identities, comp)


@dataclass(frozen=True)
class ThetaFamily:
    """A chosen morphism ``theta[y]: base -> y`` for every object ``y``."""

    base: int
    theta: tuple

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(int(t) for t in self.theta))


def check_theta(gpd: FinCategory, fam: ThetaFamily) -> None:
    if not 0 <= fam.base < gpd.n_objects:
        raise StructuralError("base object out of range")
    if len(fam.theta) != gpd.n_objects:
        raise StructuralError("theta needs one morphism per object")
    for y, t in enumerate(fam.theta):
        if not 0 <= t < gpd.n_morphisms or gpd.src[t] != fam.base or gpd.tgt[t] != y:
            raise StructuralError(f"theta for object {gpd.objects[y]} does not start at the base")
    if fam.theta[fam.base] != gpd.identities[fam.base]:
        raise StructuralError("theta at the base must be the identity")


def _require_connected_groupoid(gpd):
    if not gpd.is_groupoid():
        raise StructuralError("category is not a groupoid")
    if not gpd.is_connected():
        raise StructuralError("groupoid is not connected")


def sample_theta(gpd: FinCategory, base: int, rng: Optional[random.Random] = None) -> ThetaFamily:
    rng = rng if rng is not None else random.Random(0)
    theta = []
    for y in range(gpd.n_objects):
        if y == base:
            theta.append(gpd.identities[base])
        else:
            choices = gpd.hom(base, y)
            if not choices:
                raise StructuralError("groupoid is not connected")
            theta.append(rng.choice(choices))
    return ThetaFamily(base, tuple(theta))


def conjugate_loop(gpd: FinCategory, fam: ThetaFamily, f: int) -> int:
    """``theta[b]^-1 o f o theta[a]`` for ``f: a -> b``; a loop at the base."""
    inv = gpd.inverses
    a, b = gpd.src[f], gpd.tgt[f]
    return gpd.compose_path(inv[fam.theta[b]], f, fam.theta[a])


def theta_concentration(gpd: FinCategory, fam: ThetaFamily) -> MorphismPartition:
    """Morphisms are related when their conjugated loops at the base coincide."""
    _require_connected_groupoid(gpd)
    check_theta(gpd, fam)
    part = MorphismPartition.from_class_of(
        [conjugate_loop(gpd, fam, f) for f in range(gpd.n_morphisms)])
    if not check_concentration(gpd, part).ok:
        raise InternalConsistencyError("path-family relation is not a concentration")
    return part


def theta_isomorphism(gpd: FinCategory, fam: ThetaFamily) -> MonoidHom:
    """The map ``[f] -> theta[b]^-1 o f o theta[a]`` onto the vertex group,
    checked to be a bijective homomorphism."""
    part = theta_concentration(gpd, fam)
    M, _ = concentration_monoid(gpd, part)
    V, loops = endomorphism_monoid(gpd, fam.base)
    pos = {f: i for i, f in enumerate(loops)}
    h = MonoidHom(M, V, tuple(pos[conjugate_loop(gpd, fam, c[0])] for c in part.classes))
    if not (h.is_homomorphism() and h.is_bijective()):
        raise InternalConsistencyError("conjugation does not identify the monoid with the vertex group")
    return h


def theta_change_functor(gpd: FinCategory, fam1: ThetaFamily, fam2: ThetaFamily,
                         rho: int) -> FunctorData:
    """The functor comparing the concentrations of two path families.

    ``rho`` runs from ``fam1.base`` to ``fam2.base``.  Objects are fixed and
    ``f: a -> b`` goes to
    ``s[b] o rho o t[b]^-1 o f o t[a] o rho^-1 o s[a]^-1``
    with ``t = fam1.theta`` and ``s = fam2.theta``.
    """
    _require_connected_groupoid(gpd)
    check_theta(gpd, fam1)
    check_theta(gpd, fam2)
    if gpd.src[rho] != fam1.base or gpd.tgt[rho] != fam2.base:
        raise StructuralError("rho must run from the first base to the second")
    inv = gpd.inverses
    t, s = fam1.theta, fam2.theta
    mor_map = []
    for f in range(gpd.n_morphisms):
        a, b = gpd.src[f], gpd.tgt[f]
        mor_map.append(gpd.compose_path(s[b], rho, inv[t[b]], f, t[a], inv[rho], inv[s[a]]))
    return FunctorData(gpd, gpd, range(gpd.n_objects), mor_map)


def codiscrete_cover(G: FinMonoid):
    """Codiscrete groupoid on the elements of ``G`` over the one-object category.

    Returns ``(cover, p, partition)``.  The unique morphism ``g -> h`` has id
    ``g * |G| + h`` and ``p`` sends it to ``h g^-1``; ``partition`` is the
    pullback of the discrete partition along ``p``.
    """
    _require_group(G)
    k = G.size
    labels = G.element_labels
    objects = list(labels)
    morphisms = [(f"{labels[g]}->{labels[h]}", g, h) for g in range(k) for h in range(k)]
    identities = [g * k + g for g in range(k)]
    cover = FinCategory.build(objects, morphisms, identities,
                              lambda f, g: (g // k) * k + f % k)
    inv = G.inverses
    BG = one_object_category(G)
    p = FunctorData(cover, BG, (0,) * k,
                    [G.table[h][inv[g]] for g in range(k) for h in range(k)])
    part = pullback_concentration(p, discrete_partition(BG))
    return cover, p, part
