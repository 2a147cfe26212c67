"""Equivalence relations on morphisms and the concentration axioms.

A partition is a concentration when

1. all identities lie in one class,
2. the class of ``f o g`` depends only on the classes of ``f`` and ``g``,
3. every pair of classes has a composable pair of representatives
   (more generally, *k-existence* for k-tuples and composable chains),
4. the associativity axiom holds.

Axiom 4 is decided through the class-level product ``mu([f], [g])`` once
axioms 1-3 hold; :func:`check_concentration` can also re-check it directly
over witness tuples for small categories.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Hashable, Iterable, Optional, Sequence

from .category import FinCategory, FunctorData, is_strongly_invertible
from .errors import SizeBoundError, StructuralError

EXHAUSTIVE_LIMIT = 8
ENUMERATION_BOUND = 10


@dataclass(frozen=True)
class MorphismPartition:
    """Partition of ``range(n)`` in canonical form.

    Classes are sorted by their smallest member, and ``class_of[f]`` is the
    position of ``f``'s class.  Two partitions are equal iff they describe
    the same equivalence relation.
    """

    class_of: tuple
    classes: tuple

    @classmethod
    def from_class_of(cls, labels: Sequence[Hashable]) -> "MorphismPartition":
        index = {}
        class_of = []
        for x in labels:
            class_of.append(index.setdefault(x, len(index)))
        classes = [[] for _ in index]
        for f, c in enumerate(class_of):
            classes[c].append(f)
        return cls(tuple(class_of), tuple(tuple(c) for c in classes))

    from_keys = from_class_of

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]], n: Optional[int] = None) -> "MorphismPartition":
        """From explicit classes; with ``n``, unmentioned morphisms become singletons."""
        classes = [list(c) for c in classes]
        members = [f for c in classes for f in c]
        if len(members) != len(set(members)):
            raise StructuralError("classes overlap")
        if any(f < 0 for f in members):
            raise StructuralError("negative morphism id in a class")
        size = n if n is not None else len(members)
        if members and max(members) >= size:
            raise StructuralError("class member out of range")
        owner = [None] * size
        for i, c in enumerate(classes):
            for f in c:
                owner[f] = ("c", i)
        if n is None and any(o is None for o in owner):
            raise StructuralError("classes do not cover every morphism")
        keys = [o if o is not None else ("s", f) for f, o in enumerate(owner)]
        return cls.from_class_of(keys)

    @property
    def size(self) -> int:
        return len(self.class_of)

    def __len__(self):
        return len(self.classes)

    def related(self, f: int, g: int) -> bool:
        return self.class_of[f] == self.class_of[g]

    def check_against(self, cat: FinCategory) -> None:
        if self.size != cat.n_morphisms:
            raise StructuralError(
                f"partition covers {self.size} morphisms, category has {cat.n_morphisms}")
        for i, c in enumerate(self.classes):
            if any(self.class_of[f] != i for f in c):
                raise StructuralError("class_of and classes disagree")

    def describe(self, cat: FinCategory) -> list:
        return [[cat.morphism_label(f) for f in c] for c in self.classes]


def trivial_concentration(cat: FinCategory) -> MorphismPartition:
    return MorphismPartition.from_class_of([0] * cat.n_morphisms)


def discrete_partition(cat: FinCategory) -> MorphismPartition:
    return MorphismPartition.from_class_of(range(cat.n_morphisms))


def partition_from_labels(cat: FinCategory, classes) -> MorphismPartition:
    """Classes given by morphism labels; unmentioned morphisms are singletons."""
    return MorphismPartition.from_classes(
        [[cat.morphism_id(x) for x in c] for c in classes], n=cat.n_morphisms)


# -- axioms --------------------------------------------------------------------

@dataclass
class AxiomReport:
    """Per-axiom verdicts.  ``associativity`` is ``None`` when not evaluated."""

    identity: bool
    composition: bool
    existence: dict
    associativity: Optional[bool]
    witnesses: dict = field(default_factory=dict)
    exhaustive_associativity: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return (self.identity and self.composition and self.existence.get(2, False)
                and self.associativity is True)

    def is_n_concentration(self, n: int) -> bool:
        if n not in self.existence:
            raise KeyError(f"{n}-existence was not evaluated")
        return self.identity and self.composition and self.existence[n]

    def failures(self) -> list:
        out = []
        if not self.identity:
            out.append("identity")
        if not self.composition:
            out.append("composition")
        out.extend(f"{k}-existence" for k, v in sorted(self.existence.items()) if not v)
        if self.associativity is False:
            out.append("associativity")
        elif self.associativity is None:
            out.append("associativity (not evaluated)")
        return out


def _composition_witness(cat, part):
    seen = {}
    for f, g in cat.composable_pairs:
        key = (part.class_of[f], part.class_of[g])
        h = cat.comp[(f, g)]
        if key not in seen:
            seen[key] = (f, g, h)
        elif part.class_of[seen[key][2]] != part.class_of[h]:
            return key, seen[key], (f, g, h)
    return None


def existence_witness(cat: FinCategory, part: MorphismPartition, k: int) -> Optional[tuple]:
    """First k-tuple of classes (lexicographic) without a composable chain
    ``f1 o f2 o ... o fk`` of representatives, or ``None``."""
    nclass = len(part.classes)
    ends = [{(cat.src[f], cat.tgt[f]) for f in c} for c in part.classes]
    srcs_by_tgt = []
    for e in ends:
        d = {}
        for s, t in e:
            d.setdefault(t, set()).add(s)
        srcs_by_tgt.append(d)
    # reachable[prefix] = possible source objects of a chain realising prefix
    cache = {}

    def sources(prefix):
        if prefix in cache:
            return cache[prefix]
        if len(prefix) == 1:
            out = {s for s, _ in ends[prefix[0]]}
        else:
            prev = sources(prefix[:-1])
            by_tgt = srcs_by_tgt[prefix[-1]]
            out = set()
            for t in prev:
                out |= by_tgt.get(t, set())
        cache[prefix] = out
        return out

    for combo in product(range(nclass), repeat=k):
        if not sources(combo):
            return combo
    return None


def _class_product(cat, part):
    mu = {}
    for f, g in cat.composable_pairs:
        mu.setdefault((part.class_of[f], part.class_of[g]), part.class_of[cat.comp[(f, g)]])
    return mu


def exhaustive_associativity_witness(cat: FinCategory, part: MorphismPartition) -> Optional[tuple]:
    """Check the associativity axiom directly on morphisms.

    Ranges over ``f ~ f', g ~ g', h ~ h', m ~ f o g, n ~ g' o h'`` with
    ``f' o n`` and ``m o h`` defined, and returns the first
    ``(f, f', g, g', h, h', m, n)`` with ``f' o n`` not related to ``m o h``.
    ``f o g`` and ``g' o h'`` must exist for ``m`` and ``n`` to be
    constrained.  No class-level product is used.
    """
    cls, comp = part.class_of, cat.comp
    members = part.classes
    # outcomes of f' o n over f' in class a, n in class b
    left = {}
    for fp, n in cat.composable_pairs:
        left.setdefault((cls[fp], cls[n]), {}).setdefault(cls[comp[(fp, n)]], (fp, n))
    pairs = cat.composable_pairs
    for f, g in pairs:
        fg = comp[(f, g)]
        for gp, hp in pairs:
            if cls[gp] != cls[g]:
                continue
            A = left.get((cls[f], cls[comp[(gp, hp)]]), {})
            if not A:
                continue
            for h in members[cls[hp]]:
                B = {}
                for m in members[cls[fg]]:
                    mh = cat.compose(m, h)
                    if mh is not None:
                        B.setdefault(cls[mh], m)
                if not B:
                    continue
                for a, b in product(sorted(A), sorted(B)):
                    if a != b:
                        fp, n = A[a]
                        return (f, fp, g, gp, h, hp, B[b], n)
    return None


def check_concentration(cat: FinCategory, part: MorphismPartition, max_n: int = 2,
                        exhaustive: bool = False) -> AxiomReport:
    """Decide the concentration axioms and k-existence for ``2 <= k <= max_n``.

    ``exhaustive=True`` additionally re-checks the associativity axiom over
    witness tuples (categories with at most ``EXHAUSTIVE_LIMIT`` morphisms).
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    part.check_against(cat)
    if exhaustive and cat.n_morphisms > EXHAUSTIVE_LIMIT:
        raise SizeBoundError(
            f"category has {cat.n_morphisms} morphisms; exhaustive associativity is limited to {EXHAUSTIVE_LIMIT}",
            size=cat.n_morphisms, bound=EXHAUSTIVE_LIMIT)
    witnesses = {}
    id_classes = {part.class_of[i] for i in cat.identities}
    identity_ok = len(id_classes) <= 1
    if not identity_ok:
        ids = cat.identities
        a = ids[0]
        b = next(i for i in ids if part.class_of[i] != part.class_of[a])
        witnesses["identity"] = (a, b)
    cw = _composition_witness(cat, part)
    composition_ok = cw is None
    if cw is not None:
        witnesses["composition"] = (cw[1], cw[2])
    existence = {}
    for k in range(2, max_n + 1):
        w = existence_witness(cat, part, k)
        existence[k] = w is None
        if w is not None:
            witnesses[f"existence_{k}"] = w
    assoc = None
    if identity_ok and composition_ok and existence[2]:
        mu = _class_product(cat, part)
        nclass = len(part.classes)
        assoc = True
        for a, b, c in product(range(nclass), repeat=3):
            if mu[(mu[(a, b)], c)] != mu[(a, mu[(b, c)])]:
                assoc = False
                witnesses["associativity"] = (a, b, c)
                break
    report = AxiomReport(identity_ok, composition_ok, existence, assoc, witnesses)
    if exhaustive:
        w = exhaustive_associativity_witness(cat, part)
        report.exhaustive_associativity = w is None
        if w is not None:
            witnesses["exhaustive_associativity"] = w
    return report


def is_concentration(cat: FinCategory, part: MorphismPartition) -> bool:
    return check_concentration(cat, part).ok


# -- functors ------------------------------------------------------------------

def is_concentration_preserving(F: FunctorData, part_c: MorphismPartition,
                                part_d: MorphismPartition):
    """``(True, None)`` or ``(False, (f, f'))`` with ``f ~ f'`` but ``F(f), F(f')`` unrelated."""
    part_c.check_against(F.source)
    part_d.check_against(F.target)
    for c in part_c.classes:
        first = c[0]
        target = part_d.class_of[F.mor_map[first]]
        for f in c[1:]:
            if part_d.class_of[F.mor_map[f]] != target:
                return False, (first, f)
    return True, None


def is_concentration_isomorphism(F: FunctorData, part_c: MorphismPartition,
                                 part_d: MorphismPartition) -> bool:
    inv = is_strongly_invertible(F)
    if inv is None:
        return False
    return (is_concentration_preserving(F, part_c, part_d)[0]
            and is_concentration_preserving(inv, part_d, part_c)[0])


# -- enumeration -----------------------------------------------------------------

def set_partitions(n: int):
    """All partitions of ``range(n)`` as restricted growth strings, in
    lexicographic order."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(rgs)
            return
        for v in range(top + 2):
            rgs[i] = v
            yield from rec(i + 1, max(top, v))

    rgs[0] = 0
    yield from rec(1, 0)


def enumerate_concentrations(cat: FinCategory, max_morphisms: int = ENUMERATION_BOUND) -> list:
    """Every concentration on ``cat`` in restricted-growth-string order."""
    if cat.n_morphisms > max_morphisms:
        raise SizeBoundError(
            f"category has {cat.n_morphisms} morphisms; enumeration bound is {max_morphisms}",
            size=cat.n_morphisms, bound=max_morphisms)
    out = []
    ids = cat.identities
    for rgs in set_partitions(cat.n_morphisms):
        if len({rgs[i] for i in ids}) > 1:
            continue
        part = MorphismPartition.from_class_of(rgs)
        if check_concentration(cat, part).ok:
            out.append(part)
    return out
