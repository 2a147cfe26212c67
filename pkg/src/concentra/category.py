"""Explicit finite categories and functors between them.

Morphisms and objects are referred to by integer ids (positions in the
``objects`` / ``morphisms`` tuples).  Labels only matter for I/O.

Composition follows the usual ``f o g`` convention: ``compose(f, g)`` means
"first ``g``, then ``f``" and is defined exactly when ``src(f) == tgt(g)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Optional, Sequence

from .errors import StructuralError


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple
    message: str = ""


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def add(self, kind, witness, message=""):
        self.violations.append(Violation(kind, tuple(witness), message))

    def kinds(self):
        return sorted({v.kind for v in self.violations})

    def first(self, kind):
        for v in self.violations:
            if v.kind == kind:
                return v
        return None


@dataclass(frozen=True)
class FinCategory:
    """A finite category given by explicit tables.

    ``morphisms`` holds ``(label, src, tgt)`` triples, ``identities[A]`` is
    the id of the identity at object ``A`` and ``composition`` lists
    ``(f, g, f o g)`` triples.  The constructor only checks that every index
    is in range; use :func:`validate_category` for the category axioms.
    """

    objects: tuple
    morphisms: tuple
    identities: tuple
    composition: tuple

    def __post_init__(self):
        objects = tuple(str(o) for o in self.objects)
        morphisms = tuple((str(m[0]), int(m[1]), int(m[2])) for m in self.morphisms)
        identities = tuple(int(i) for i in self.identities)
        composition = tuple(sorted((int(a), int(b), int(c)) for a, b, c in self.composition))
        n_obj, n_mor = len(objects), len(morphisms)
        for i, (label, s, t) in enumerate(morphisms):
            if not (0 <= s < n_obj and 0 <= t < n_obj):
                raise StructuralError(f"morphism {i} ({label}) has endpoint out of range")
        if len(identities) != n_obj:
            raise StructuralError(
                f"expected {n_obj} identities, got {len(identities)}")
        for a, i in enumerate(identities):
            if not 0 <= i < n_mor:
                raise StructuralError(f"identity of object {a} is out of range: {i}")
        seen = {}
        for f, g, h in composition:
            if not all(0 <= x < n_mor for x in (f, g, h)):
                raise StructuralError(f"composition entry {(f, g, h)} out of range")
            if seen.setdefault((f, g), h) != h:
                raise StructuralError(f"composite of {(f, g)} given twice with different values")
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "morphisms", morphisms)
        object.__setattr__(self, "identities", identities)
        object.__setattr__(self, "composition", tuple(sorted(set(composition))))

    @classmethod
    def build(cls, objects, morphisms, identities,
              compose: Callable[[int, int], int]) -> "FinCategory":
        """Build a category by calling ``compose(f, g)`` on every composable pair."""
        morphisms = list(morphisms)
        table = []
        for f, g in product(range(len(morphisms)), repeat=2):
            if morphisms[f][1] == morphisms[g][2]:
                table.append((f, g, compose(f, g)))
        return cls(tuple(objects), tuple(morphisms), tuple(identities), tuple(table))

    # -- derived lookups -------------------------------------------------
    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.morphisms)

    @cached_property
    def src(self) -> tuple:
        return tuple(m[1] for m in self.morphisms)

    @cached_property
    def tgt(self) -> tuple:
        return tuple(m[2] for m in self.morphisms)

    @cached_property
    def comp(self) -> dict:
        return {(f, g): h for f, g, h in self.composition}

    @cached_property
    def homs(self) -> dict:
        """``(A, B) -> tuple of morphisms A -> B`` (only nonempty hom-sets)."""
        out = {}
        for i, (_, s, t) in enumerate(self.morphisms):
            out.setdefault((s, t), []).append(i)
        return {k: tuple(v) for k, v in out.items()}

    def hom(self, a: int, b: int) -> tuple:
        return self.homs.get((a, b), ())

    @cached_property
    def composable_pairs(self) -> tuple:
        by_tgt = {}
        for g in range(self.n_morphisms):
            by_tgt.setdefault(self.tgt[g], []).append(g)
        return tuple((f, g) for f in range(self.n_morphisms)
                     for g in by_tgt.get(self.src[f], ()))

    def compose(self, f: int, g: int) -> Optional[int]:
        """``f o g`` or ``None`` when ``src(f) != tgt(g)``."""
        if self.src[f] != self.tgt[g]:
            return None
        return self.comp.get((f, g))

    def compose_path(self, *fs: int) -> Optional[int]:
        """``fs[0] o fs[1] o ... o fs[-1]``."""
        acc = fs[-1]
        for f in reversed(fs[:-1]):
            acc = self.compose(f, acc)
            if acc is None:
                return None
        return acc

    def morphism_label(self, f: int) -> str:
        return self.morphisms[f][0]

    def morphism_id(self, label: str) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict:
        return {m[0]: i for i, m in enumerate(self.morphisms)}

    def object_id(self, label: str) -> int:
        return self.objects.index(label)

    @cached_property
    def inverses(self) -> tuple:
        """Two-sided inverse of each morphism, or ``None``."""
        out = []
        for f in range(self.n_morphisms):
            s, t = self.src[f], self.tgt[f]
            inv = None
            for g in self.hom(t, s):
                if (self.comp.get((g, f)) == self.identities[s]
                        and self.comp.get((f, g)) == self.identities[t]):
                    inv = g
                    break
            out.append(inv)
        return tuple(out)

    def is_groupoid(self) -> bool:
        return all(i is not None for i in self.inverses)

    def is_connected(self) -> bool:
        if self.n_objects == 0:
            return False
        parent = list(range(self.n_objects))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t in zip(self.src, self.tgt):
            parent[find(s)] = find(t)
        return len({find(x) for x in range(self.n_objects)}) == 1


def compose(cat: FinCategory, f: int, g: int) -> Optional[int]:
    return cat.compose(f, g)


def validate_category(cat: FinCategory) -> ValidationReport:
    """Check every category axiom; each violation carries a witness tuple."""
    rep = ValidationReport()
    n = cat.n_morphisms
    src, tgt, comp = cat.src, cat.tgt, cat.comp
    for a, i in enumerate(cat.identities):
        if src[i] != a or tgt[i] != a:
            rep.add("identity_endpoints", (a, i),
                    f"identity of object {a} is not an endomorphism of {a}")
    for (f, g), h in sorted(comp.items()):
        if src[f] != tgt[g]:
            rep.add("noncomposable_entry", (f, g, h),
                    "composite given for a non-composable pair")
        elif src[h] != src[g] or tgt[h] != tgt[f]:
            rep.add("composite_endpoints", (f, g, h),
                    "composite has the wrong source or target")
    for f, g in cat.composable_pairs:
        if (f, g) not in comp:
            rep.add("missing_composite", (f, g), "composable pair without composite")
    if not rep.ok:
        # laws below assume a complete, well-typed table
        return rep
    for f in range(n):
        i_s, i_t = cat.identities[src[f]], cat.identities[tgt[f]]
        if comp[(f, i_s)] != f:
            rep.add("right_identity", (f, i_s), "f o id != f")
        if comp[(i_t, f)] != f:
            rep.add("left_identity", (i_t, f), "id o f != f")
    for f, g in cat.composable_pairs:
        fg = comp[(f, g)]
        for h in range(n):
            if tgt[h] != src[g]:
                continue
            if comp[(fg, h)] != comp[(f, comp[(g, h)])]:
                rep.add("associativity", (f, g, h), "(f o g) o h != f o (g o h)")
    return rep


def one_object_category(monoid) -> FinCategory:
    """The one-object category whose morphisms are the elements of ``monoid``."""
    from .monoid import FinMonoid
    if not isinstance(monoid, FinMonoid):
        raise StructuralError("one_object_category expects a FinMonoid")
    n = monoid.size
    labels = monoid.element_labels
    table = [(a, b, monoid.table[a][b]) for a in range(n) for b in range(n)]
    return FinCategory(("*",), tuple((labels[a], 0, 0) for a in range(n)),
                       (monoid.identity,), tuple(table))


def is_equivalent_to_trivial(cat: FinCategory) -> bool:
    """True iff ``cat`` is nonempty and codiscrete (every hom-set is a singleton)."""
    if cat.n_objects == 0:
        return False
    return all(len(cat.hom(a, b)) == 1
               for a in range(cat.n_objects) for b in range(cat.n_objects))


def endomorphism_monoid(cat: FinCategory, obj: int):
    """``Mor(obj, obj)`` as a :class:`~concentra.monoid.FinMonoid` plus the
    element -> morphism id list."""
    from .monoid import FinMonoid
    ends = list(cat.hom(obj, obj))
    pos = {f: i for i, f in enumerate(ends)}
    table = [[pos[cat.comp[(f, g)]] for g in ends] for f in ends]
    return (FinMonoid(table, pos[cat.identities[obj]],
                      [cat.morphism_label(f) for f in ends]), tuple(ends))


# -- functors -------------------------------------------------------------

@dataclass(frozen=True)
class FunctorData:
    source: FinCategory
    target: FinCategory
    obj_map: tuple
    mor_map: tuple

    def __post_init__(self):
        obj_map = tuple(int(x) for x in self.obj_map)
        mor_map = tuple(int(x) for x in self.mor_map)
        if len(obj_map) != self.source.n_objects:
            raise StructuralError("obj_map length differs from the number of source objects")
        if len(mor_map) != self.source.n_morphisms:
            raise StructuralError("mor_map length differs from the number of source morphisms")
        if any(not 0 <= x < self.target.n_objects for x in obj_map):
            raise StructuralError("obj_map value out of range")
        if any(not 0 <= x < self.target.n_morphisms for x in mor_map):
            raise StructuralError("mor_map value out of range")
        object.__setattr__(self, "obj_map", obj_map)
        object.__setattr__(self, "mor_map", mor_map)

    def __call__(self, f: int) -> int:
        return self.mor_map[f]


def identity_functor(cat: FinCategory) -> FunctorData:
    return FunctorData(cat, cat, tuple(range(cat.n_objects)), tuple(range(cat.n_morphisms)))


def check_functor(F: FunctorData) -> ValidationReport:
    rep = ValidationReport()
    C, D = F.source, F.target
    for f in range(C.n_morphisms):
        g = F.mor_map[f]
        if D.src[g] != F.obj_map[C.src[f]] or D.tgt[g] != F.obj_map[C.tgt[f]]:
            rep.add("endpoints", (f,), "F(f) does not go from F(src f) to F(tgt f)")
    for a, i in enumerate(C.identities):
        if F.mor_map[i] != D.identities[F.obj_map[a]]:
            rep.add("identity", (a,), "F(id_A) != id_F(A)")
    for (f, g), h in sorted(C.comp.items()):
        if D.compose(F.mor_map[f], F.mor_map[g]) != F.mor_map[h]:
            rep.add("composition", (f, g), "F(f o g) != F(f) o F(g)")
    return rep


def compose_functors(F: FunctorData, G: FunctorData) -> FunctorData:
    """``F o G``: apply ``G`` first, then ``F``."""
    if G.target != F.source:
        raise StructuralError("compose_functors: target of G is not the source of F")
    return FunctorData(G.source, F.target,
                       tuple(F.obj_map[x] for x in G.obj_map),
                       tuple(F.mor_map[x] for x in G.mor_map))


def is_identity_functor(F: FunctorData) -> bool:
    return (F.source == F.target
            and F.obj_map == tuple(range(F.source.n_objects))
            and F.mor_map == tuple(range(F.source.n_morphisms)))


def _invert(mapping: Sequence[int], size: int):
    if len(mapping) != size or sorted(mapping) != list(range(size)):
        return None
    inv = [0] * size
    for i, x in enumerate(mapping):
        inv[x] = i
    return tuple(inv)


def is_strongly_invertible(F: FunctorData) -> Optional[FunctorData]:
    """The strict inverse of ``F`` if it exists, else ``None``."""
    inv_obj = _invert(F.obj_map, F.target.n_objects)
    inv_mor = _invert(F.mor_map, F.target.n_morphisms)
    if inv_obj is None or inv_mor is None:
        return None
    G = FunctorData(F.target, F.source, inv_obj, inv_mor)
    if not check_functor(G).ok:
        return None
    return G


def functor_image_is_surjective(F: FunctorData) -> bool:
    return set(F.mor_map) == set(range(F.target.n_morphisms))
