"""Finite monoids by Cayley table, and the concentration monoid construction."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations, product
from typing import Optional, Sequence

from .errors import (ConcentrationError, InternalConsistencyError, NotPreservingError,
                     NormalityError, SizeBoundError, StructuralError)

ISOMORPHISM_BOUND = 64


@dataclass(frozen=True)
class FinMonoid:
    """A finite monoid.  ``table[a][b]`` is the product ``a * b``.

    The table is checked for closure, associativity and the unit law at
    construction time; ``is_group`` is derived from the table.
    """

    table: tuple
    identity: int
    element_labels: tuple = None

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        n = len(table)
        if n == 0:
            raise StructuralError("a monoid has at least one element")
        if any(len(row) != n for row in table):
            raise StructuralError("multiplication table is not square")
        if any(not 0 <= x < n for row in table for x in row):
            raise StructuralError("multiplication table entry out of range")
        e = int(self.identity)
        if not 0 <= e < n:
            raise StructuralError("identity index out of range")
        for a in range(n):
            if table[e][a] != a or table[a][e] != a:
                raise StructuralError(f"element {e} is not a two-sided identity (fails at {a})")
        for a, b, c in product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise StructuralError(f"table is not associative at {(a, b, c)}")
        labels = self.element_labels
        labels = tuple(str(x) for x in labels) if labels is not None else tuple(map(str, range(n)))
        if len(labels) != n:
            raise StructuralError("wrong number of element labels")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "element_labels", labels)

    @property
    def size(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple:
        e, t = self.identity, self.table
        out = []
        for a in range(self.size):
            inv = next((b for b in range(self.size) if t[a][b] == e and t[b][a] == e), None)
            out.append(inv)
        return tuple(out)

    @property
    def is_group(self) -> bool:
        return all(i is not None for i in self.inverses)

    def power_profile(self, a: int) -> tuple:
        """``(index, period)`` of the cyclic submonoid generated by ``a``.

        Invariant under isomorphism; for groups the period is the order.
        """
        seen = {}
        x, k = a, 1
        while x not in seen:
            seen[x] = k
            x = self.table[x][a]
            k += 1
        return seen[x], k - seen[x]

    def generated(self, gens: Sequence[int]) -> set:
        out = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in out:
                    out.add(y)
                    frontier.append(y)
        return out

    def generators(self) -> tuple:
        """Greedy generating set, taking elements in index order."""
        gens, span = [], {self.identity}
        for a in range(self.size):
            if a not in span:
                gens.append(a)
                span = self.generated(gens)
        return tuple(gens)

    def is_submonoid(self, subset) -> bool:
        s = set(subset)
        return self.identity in s and all(self.table[a][b] in s for a in s for b in s)

    def submonoid(self, subset):
        """The submonoid on ``subset`` as its own FinMonoid, with the inclusion map."""
        if not self.is_submonoid(subset):
            raise StructuralError("subset is not a submonoid")
        elems = sorted(set(subset))
        pos = {x: i for i, x in enumerate(elems)}
        table = [[pos[self.table[a][b]] for b in elems] for a in elems]
        sub = FinMonoid(table, pos[self.identity], [self.element_labels[x] for x in elems])
        return sub, MonoidHom(sub, self, tuple(elems))


@dataclass(frozen=True)
class MonoidHom:
    source: FinMonoid
    target: FinMonoid
    map: tuple

    def __post_init__(self):
        m = tuple(int(x) for x in self.map)
        if len(m) != self.source.size or any(not 0 <= x < self.target.size for x in m):
            raise StructuralError("homomorphism map has the wrong size or range")
        object.__setattr__(self, "map", m)

    def __call__(self, a: int) -> int:
        return self.map[a]

    def is_homomorphism(self) -> bool:
        M, N, h = self.source, self.target, self.map
        if h[M.identity] != N.identity:
            return False
        return all(h[M.table[a][b]] == N.table[h[a]][h[b]]
                   for a in range(M.size) for b in range(M.size))

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_bijective(self) -> bool:
        return self.is_injective() and len(self.map) == self.target.size

    def is_identity(self) -> bool:
        return self.source == self.target and self.map == tuple(range(self.source.size))

    def image(self) -> tuple:
        return tuple(sorted(set(self.map)))

    def then(self, other: "MonoidHom") -> "MonoidHom":
        """``other o self``."""
        if self.target != other.source:
            raise StructuralError("homomorphisms are not composable")
        return MonoidHom(self.source, other.target, tuple(other.map[x] for x in self.map))


def identity_hom(M: FinMonoid) -> MonoidHom:
    return MonoidHom(M, M, tuple(range(M.size)))


# -- standard tables --------------------------------------------------------

def cyclic_group(n: int) -> FinMonoid:
    return FinMonoid([[(a + b) % n for b in range(n)] for a in range(n)], 0,
                     [str(a) for a in range(n)])


def trivial_monoid() -> FinMonoid:
    return cyclic_group(1)


def direct_product(M: FinMonoid, N: FinMonoid) -> FinMonoid:
    pairs = list(product(range(M.size), range(N.size)))
    pos = {p: i for i, p in enumerate(pairs)}
    table = [[pos[(M.table[a][c], N.table[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    labels = [f"({M.element_labels[a]},{N.element_labels[b]})" for a, b in pairs]
    return FinMonoid(table, pos[(M.identity, N.identity)], labels)


def klein_four_group() -> FinMonoid:
    return direct_product(cyclic_group(2), cyclic_group(2))


def symmetric_group(n: int) -> FinMonoid:
    """S_n on permutations of ``range(n)`` in lexicographic order.

    ``(p * q)(i) = p(q(i))``, i.e. ``q`` acts first.
    """
    perms = list(permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return FinMonoid(table, pos[tuple(range(n))], ["".join(map(str, p)) for p in perms])


def monoid_from_permutations(perms) -> FinMonoid:
    """Closure of a set of permutations (tuples) under composition."""
    perms = [tuple(p) for p in perms]
    n = len(perms[0])
    ident = tuple(range(n))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        x = frontier.pop()
        for g in perms:
            y = tuple(x[g[i]] for i in range(n))
            if y not in seen:
                seen.add(y)
                elems.append(y)
                frontier.append(y)
    elems.sort()
    pos = {p: i for i, p in enumerate(elems)}
    table = [[pos[tuple(p[q[i]] for i in range(n))] for q in elems] for p in elems]
    return FinMonoid(table, pos[ident], ["".join(map(str, p)) for p in elems])


# -- isomorphism search -----------------------------------------------------

def find_isomorphism(M: FinMonoid, N: FinMonoid, bound: int = ISOMORPHISM_BOUND) -> Optional[tuple]:
    """Lexicographically least multiplication-preserving bijection ``M -> N``.

    Backtracks over images of a greedy generating set of ``M``; candidate
    images are pruned by their ``(index, period)`` power profile.  Because
    generators are taken in index order, the least image sequence yields
    the least map.
    """
    if max(M.size, N.size) > bound:
        raise SizeBoundError(f"order {max(M.size, N.size)} exceeds the isomorphism search bound {bound}",
                             size=max(M.size, N.size), bound=bound)
    if M.size != N.size:
        return None
    prof_m = [M.power_profile(a) for a in range(M.size)]
    prof_n = [N.power_profile(b) for b in range(N.size)]
    if sorted(prof_m) != sorted(prof_n):
        return None
    gens = M.generators()
    # words: how to reach each element of M from the identity by right-multiplying generators
    route = {M.identity: None}
    order = [M.identity]
    for x in order:
        for gi, g in enumerate(gens):
            y = M.table[x][g]
            if y not in route:
                route[y] = (x, gi)
                order.append(y)

    def extend(images):
        phi = {M.identity: N.identity}
        for x in order[1:]:
            parent, gi = route[x]
            phi[x] = N.table[phi[parent]][images[gi]]
        mapping = tuple(phi[a] for a in range(M.size))
        if len(set(mapping)) != M.size:
            return None
        h = MonoidHom(M, N, mapping)
        return mapping if h.is_homomorphism() else None

    def search(images):
        if len(images) == len(gens):
            return extend(images)
        g = gens[len(images)]
        used = set(images)
        for b in range(N.size):
            if b in used or prof_n[b] != prof_m[g] or b == N.identity:
                continue
            found = search(images + [b])
            if found is not None:
                return found
        return None

    return search([])


def are_isomorphic(M: FinMonoid, N: FinMonoid) -> bool:
    return find_isomorphism(M, N) is not None


# -- normal submonoids and quotients ------------------------------------------

def _require_submonoid(M: FinMonoid, S) -> set:
    s = set(S)
    if not s <= set(range(M.size)):
        raise StructuralError("subset has elements outside the monoid")
    if not M.is_submonoid(s):
        raise StructuralError("subset is not a submonoid (needs identity and closure)")
    return s


def normality_witness(M: FinMonoid, S) -> Optional[tuple]:
    """``None`` if ``xS == Sx`` for all ``x``; otherwise ``(x, side, s)``
    where ``side`` names the inclusion that fails and ``s`` the offender."""
    s = _require_submonoid(M, S)
    t = M.table
    for x in range(M.size):
        left = {t[x][a] for a in s}
        right = {t[a][x] for a in s}
        for a in sorted(s):
            if t[x][a] not in right:
                return (x, "xS not in Sx", a)
            if t[a][x] not in left:
                return (x, "Sx not in xS", a)
    return None


def is_normal_submonoid(M: FinMonoid, S) -> bool:
    return normality_witness(M, S) is None


def relation_R_S(M: FinMonoid, S) -> set:
    """``{(a, b) : s1 a = b s2 for some s1, s2 in S}``."""
    s = _require_submonoid(M, S)
    t = M.table
    left = {a: {t[x][a] for x in s} for a in range(M.size)}
    rel = set()
    for a, b in product(range(M.size), repeat=2):
        if left[a] & {t[b][y] for y in s}:
            rel.add((a, b))
    return rel


def relation_R_prime_S(M: FinMonoid, S) -> set:
    """``{(a, b) : Sa == bS}``, the alternative congruence (diagnostic only)."""
    s = _require_submonoid(M, S)
    t = M.table
    return {(a, b) for a, b in product(range(M.size), repeat=2)
            if {t[x][a] for x in s} == {t[b][y] for y in s}}


@dataclass
class CongruenceReport:
    class_of: tuple
    classes: tuple
    closure_changed: bool
    notes: list = field(default_factory=list)


def normal_congruence(M: FinMonoid, S) -> CongruenceReport:
    """Classes of ``R_S``; checks it is an equivalence and a congruence."""
    if not is_normal_submonoid(M, S):
        raise NormalityError("S is not normal in M", witness=normality_witness(M, S))
    rel = relation_R_S(M, S)
    n = M.size
    closed = set(rel)
    changed = False
    # reflexive/symmetric/transitive closure; report if anything had to be added
    closed |= {(a, a) for a in range(n)}
    closed |= {(b, a) for a, b in closed}
    while True:
        extra = {(a, c) for a, b in closed for b2, c in closed if b == b2} - closed
        if not extra:
            break
        closed |= extra
    if closed != rel:
        changed = True
    class_of = [-1] * n
    classes = []
    for a in range(n):
        if class_of[a] < 0:
            members = tuple(b for b in range(n) if (a, b) in closed)
            for b in members:
                class_of[b] = len(classes)
            classes.append(members)
    t = M.table
    for a, a2, b, b2 in product(range(n), repeat=4):
        if class_of[a] == class_of[a2] and class_of[b] == class_of[b2]:
            if class_of[t[a][b]] != class_of[t[a2][b2]]:
                raise InternalConsistencyError(
                    f"R_S is not a congruence at {(a, a2, b, b2)} although S is normal")
    rep = CongruenceReport(tuple(class_of), tuple(classes), changed)
    if changed:
        rep.notes.append("R_S needed an equivalence closure")
    return rep


def quotient_by_normal_submonoid(M: FinMonoid, S) -> FinMonoid:
    cong = normal_congruence(M, S)
    return _quotient(M, cong.class_of, cong.classes)


def quotient_map(M: FinMonoid, S) -> MonoidHom:
    cong = normal_congruence(M, S)
    Q = _quotient(M, cong.class_of, cong.classes)
    return MonoidHom(M, Q, cong.class_of)


def _quotient(M, class_of, classes):
    table = [[class_of[M.table[c[0]][d[0]]] for d in classes] for c in classes]
    labels = ["{" + ",".join(M.element_labels[x] for x in c) + "}" for c in classes]
    return FinMonoid(table, class_of[M.identity], labels)


# -- semidirect products ------------------------------------------------------

def _is_automorphism(M: FinMonoid, f) -> bool:
    return (sorted(f) == list(range(M.size))
            and MonoidHom(M, M, tuple(f)).is_homomorphism())


def check_action(M: FinMonoid, N: FinMonoid, phi) -> Optional[str]:
    """Problem description if ``phi`` is not a homomorphism ``N -> Aut(M)``."""
    if len(phi) != N.size:
        return "phi must give one map per element of N"
    for n in range(N.size):
        if len(phi[n]) != M.size or not _is_automorphism(M, phi[n]):
            return f"phi({N.element_labels[n]}) is not an automorphism of M"
    if tuple(phi[N.identity]) != tuple(range(M.size)):
        return "phi(identity) is not the identity map"
    for a, b in product(range(N.size), repeat=2):
        ab = N.table[a][b]
        if any(phi[ab][m] != phi[a][phi[b][m]] for m in range(M.size)):
            return f"phi is not multiplicative at {(N.element_labels[a], N.element_labels[b])}"
    return None


def semidirect_monoid(M: FinMonoid, N: FinMonoid, phi) -> FinMonoid:
    """``M x| N`` on pairs ``(m, n)`` (lexicographic order) with
    ``(m1, n1)(m2, n2) = (m1 phi_{n1}(m2), n1 n2)``."""
    problem = check_action(M, N, phi)
    if problem:
        raise StructuralError(problem)
    pairs = list(product(range(M.size), range(N.size)))
    pos = {p: i for i, p in enumerate(pairs)}
    table = [[pos[(M.table[m1][phi[n1][m2]], N.table[n1][n2])] for (m2, n2) in pairs]
             for (m1, n1) in pairs]
    labels = [f"({M.element_labels[m]},{N.element_labels[n]})" for m, n in pairs]
    return FinMonoid(table, pos[(M.identity, N.identity)], labels)


def trivial_action(M: FinMonoid, N: FinMonoid) -> tuple:
    return tuple(tuple(range(M.size)) for _ in range(N.size))


# -- concentration monoids -----------------------------------------------------

def concentration_monoid(cat, part, rng: Optional[random.Random] = None):
    """``Mor / ~`` with ``[f][g] = [f' o g']`` for composable representatives.

    Returns ``(monoid, class_map)`` where ``class_map[f]`` is the element
    of morphism ``f``.  Elements follow the partition's canonical class
    order.  Pass ``rng`` to pick representatives at random instead of the
    first composable pair; the table must not change.
    """
    from .concentration import check_concentration
    report = check_concentration(cat, part, max_n=2)
    if not report.ok:
        raise ConcentrationError(
            "partition is not a concentration: " + ", ".join(report.failures()), report)
    k = len(part.classes)
    witnesses = {}
    for f, g in cat.composable_pairs:
        witnesses.setdefault((part.class_of[f], part.class_of[g]), []).append((f, g))
    table = [[0] * k for _ in range(k)]
    for a, b in product(range(k), repeat=2):
        options = witnesses[(a, b)]
        f, g = rng.choice(options) if rng is not None else options[0]
        table[a][b] = part.class_of[cat.comp[(f, g)]]
    labels = ["[" + cat.morphism_label(c[0]) + "]" for c in part.classes]
    M = FinMonoid(table, part.class_of[cat.identities[0]], labels)
    if every_class_has_isomorphism(cat, part) and not M.is_group:
        raise InternalConsistencyError("classes all contain isomorphisms but the monoid is not a group")
    return M, tuple(part.class_of)


def every_class_has_isomorphism(cat, part) -> bool:
    """Sufficient condition for the concentration monoid to be a group."""
    inv = cat.inverses
    return all(any(inv[f] is not None for f in c) for c in part.classes)


def induced_hom(F, part_c, part_d) -> MonoidHom:
    """``[f] -> [F(f)]`` between concentration monoids."""
    from .concentration import is_concentration_preserving
    ok, witness = is_concentration_preserving(F, part_c, part_d)
    if not ok:
        raise NotPreservingError("functor is not concentration preserving", witness)
    M, _ = concentration_monoid(F.source, part_c)
    N, _ = concentration_monoid(F.target, part_d)
    mapping = tuple(part_d.class_of[F.mor_map[c[0]]] for c in part_c.classes)
    h = MonoidHom(M, N, mapping)
    if not h.is_homomorphism():
        raise InternalConsistencyError("induced map is not a homomorphism")
    return h
