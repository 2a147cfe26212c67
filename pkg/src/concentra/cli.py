"""Command-line interface.

Every command prints a human-readable report followed by a fenced JSON
block.  Exit codes: 0 the checked property holds, 1 it fails (a witness is
printed), 2 the input is malformed or outside the supported size bounds.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import catalg, concentration, dirlim, groupoids, lifting
from .category import check_functor, validate_category
from .concentration import (MorphismPartition, check_concentration, discrete_partition,
                            enumerate_concentrations)
from .errors import ConcentraError, SizeBoundError
from .fixtures import fixture_workspaces, group_by_name
from .monoid import (concentration_monoid, direct_product, find_isomorphism,
                     quotient_by_normal_submonoid, semidirect_monoid)
from .workspace import WorkspaceError, save
from .workspace import load as load_unchecked

SEED_ENV = "CONCENTRA_SEED"


class Report:
    def __init__(self):
        self.lines = []
        self.result = {}

    def say(self, text=""):
        self.lines.append(text)

    def render(self) -> str:
        block = json.dumps(self.result, indent=2, sort_keys=True)
        return "\n".join(self.lines) + "\n```json\n" + block + "\n```\n"


def _labels(cat, ids):
    return [cat.morphism_label(f) for f in ids]


def _class_labels(cat, part, classes):
    return ["[" + cat.morphism_label(part.classes[c][0]) + "]" for c in classes]


def _table_lines(M):
    labels = M.element_labels
    width = max(len(x) for x in labels)
    head = " " * width + " | " + " ".join(x.rjust(width) for x in labels)
    rows = [head, "-" * len(head)]
    for a in range(M.size):
        rows.append(labels[a].rjust(width) + " | "
                    + " ".join(labels[M.table[a][b]].rjust(width) for b in range(M.size)))
    return rows


def _monoid_json(M):
    return {"size": M.size, "identity": M.identity, "is_group": M.is_group,
            "labels": list(M.element_labels), "table": [list(r) for r in M.table]}


def _partition_lines(cat, part):
    return ["  {" + ", ".join(_labels(cat, c)) + "}" for c in part.classes]


def _axiom_report(rep, cat, part, report):
    names = {"identity": "identity", "composition": "composition"}
    verdicts = {}
    for key in ("identity", "composition"):
        ok = getattr(report, key)
        verdicts[key] = ok
        line = f"{names[key]}: {'holds' if ok else 'FAILS'}"
        if not ok:
            w = report.witnesses[key]
            if key == "identity":
                line += " witness " + ", ".join(_labels(cat, w))
            else:
                (f, g, h), (f2, g2, h2) = w
                L = cat.morphism_label
                line += (f" witness {L(f)} o {L(g)} = {L(h)} but "
                         f"{L(f2)} o {L(g2)} = {L(h2)}")
        rep.say(line)
    for k, ok in sorted(report.existence.items()):
        verdicts[f"existence_{k}"] = ok
        line = f"{k}-existence: {'holds' if ok else 'FAILS'}"
        if not ok:
            w = report.witnesses[f"existence_{k}"]
            line += " witness (" + ", ".join(_class_labels(cat, part, w)) + ")"
        rep.say(line)
    a = report.associativity
    verdicts["associativity"] = a
    if a is None:
        rep.say("associativity: not evaluated (needs identity, composition and 2-existence)")
    else:
        line = f"associativity: {'holds' if a else 'FAILS'}"
        if not a:
            line += " witness (" + ", ".join(
                _class_labels(cat, part, report.witnesses["associativity"])) + ")"
        rep.say(line)
    if report.exhaustive_associativity is not None:
        ok = report.exhaustive_associativity
        verdicts["exhaustive_associativity"] = ok
        line = f"associativity (exhaustive): {'holds' if ok else 'FAILS'}"
        if not ok:
            line += " witness " + ", ".join(_labels(cat, report.witnesses["exhaustive_associativity"]))
        rep.say(line)
    rep.result["verdicts"] = verdicts
    rep.result["witnesses"] = {k: _jsonable(v) for k, v in sorted(report.witnesses.items())}


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return x


def load(path):
    """Load a workspace and insist that its categories and functors are lawful."""
    ws = load_unchecked(path)
    for name, cat in ws.categories.items():
        v = validate_category(cat)
        if not v.ok:
            raise WorkspaceError(f"category {name!r} violates the category axioms ({', '.join(v.kinds())}); "
                                 "run validate for details", path=f"/categories/{name}")
    for name, (_, _, F) in ws.functors.items():
        v = check_functor(F)
        if not v.ok:
            raise WorkspaceError(f"functor {name!r} is not a functor ({', '.join(v.kinds())})",
                                 path=f"/functors/{name}")
    return ws


# -- commands ----------------------------------------------------------------------

def cmd_validate(args, rep):
    ws = load_unchecked(args.file)
    ok = True
    cats = {}
    for name, cat in sorted(ws.categories.items()):
        if args.category and name != args.category:
            continue
        v = validate_category(cat)
        cats[name] = [[x.kind, list(x.witness)] for x in v.violations]
        rep.say(f"category {name}: {len(cat.objects)} objects, {cat.n_morphisms} morphisms, "
                + ("valid" if v.ok else f"INVALID ({len(v.violations)} violations)"))
        for x in v.violations[:10]:
            rep.say(f"  {x.kind}: {', '.join(_labels(cat, x.witness)) if x.kind != 'identity_endpoints' else x.witness}")
        ok &= v.ok
    funcs = {}
    for name, (_, _, F) in sorted(ws.functors.items()):
        if args.category:
            continue
        v = check_functor(F)
        funcs[name] = [[x.kind, list(x.witness)] for x in v.violations]
        rep.say(f"functor {name}: " + ("valid" if v.ok else f"INVALID ({', '.join(v.kinds())})"))
        ok &= v.ok
    rep.result = {"categories": cats, "functors": funcs, "ok": ok}
    return 0 if ok else 1


def cmd_check_conc(args, rep):
    ws = load(args.file)
    cat, part = ws.partition(args.partition)
    report = check_concentration(cat, part, max_n=args.max_n, exhaustive=args.exhaustive)
    rep.say(f"partition {args.partition} on {cat.n_morphisms} morphisms, {len(part.classes)} classes")
    rep.lines.extend(_partition_lines(cat, part))
    _axiom_report(rep, cat, part, report)
    holds = report.ok and all(report.existence.values())
    if args.exhaustive:
        holds = holds and report.exhaustive_associativity
    rep.say("concentration: " + ("yes" if report.ok else "no"))
    rep.say("all axioms hold" if holds else "some axioms fail")
    rep.result.update({"partition": args.partition, "concentration": report.ok, "holds": holds})
    return 0 if holds else 1


def _require_concentration(rep, cat, part, name):
    report = check_concentration(cat, part)
    if not report.ok:
        rep.say(f"{name} is not a concentration: " + ", ".join(report.failures()))
        _axiom_report(rep, cat, part, report)
        return False
    return True


def cmd_monoid(args, rep):
    ws = load(args.file)
    cat, part = ws.partition(args.partition)
    if not _require_concentration(rep, cat, part, args.partition):
        rep.result["concentration"] = False
        return 1
    M, class_map = concentration_monoid(cat, part)
    rep.say(f"concentration monoid of {args.partition}: order {M.size}, "
            + ("group" if M.is_group else "not a group"))
    rep.lines.extend(_table_lines(M))
    rep.result.update({"concentration": True, "monoid": _monoid_json(M),
                       "class_of": list(class_map)})
    code = 0
    if args.compare:
        N = ws.get("monoids", args.compare)
        iso = find_isomorphism(M, N)
        rep.say(f"isomorphic to {args.compare}: " + ("yes" if iso else "no"))
        rep.result["isomorphism"] = list(iso) if iso else None
        code = 0 if iso else 1
    return code


def _only_category(ws, name):
    if name:
        return name, ws.get("categories", name)
    if len(ws.categories) != 1:
        raise WorkspaceError("several categories present; pass --category", path="/categories")
    return next(iter(ws.categories.items()))


def cmd_enumerate(args, rep):
    ws = load(args.file)
    name, cat = _only_category(ws, args.category)
    found = enumerate_concentrations(cat, args.bound)
    rep.say(f"category {name}: {cat.n_morphisms} morphisms, {len(found)} concentration(s)")
    for i, part in enumerate(found):
        rep.say(f"#{i}: {len(part.classes)} classes")
        rep.lines.extend(_partition_lines(cat, part))
    rep.result = {"category": name, "count": len(found),
                  "partitions": [[list(c) for c in p.classes] for p in found]}
    return 0


def cmd_pullback(args, rep):
    ws = load(args.file)
    F = ws.functor(args.functor)
    tcat, tpart = ws.partition(args.partition)
    if tcat != F.target:
        raise WorkspaceError("partition does not live on the functor's target", path="/partitions")
    ok, w = lifting.check_2_lifting(F)
    rep.result["two_lifting"] = ok
    if not ok:
        L = F.target.morphism_label
        rep.say(f"functor {args.functor} is not 2-lifting: pair ({L(w[0])}, {L(w[1])}) does not lift")
        rep.result["witness"] = list(w)
        return 1
    part = lifting.pullback_concentration(F, tpart)
    rep.say(f"pullback of {args.partition} along {args.functor}: {len(part.classes)} classes")
    rep.lines.extend(_partition_lines(F.source, part))
    rep.result["classes"] = [list(c) for c in part.classes]
    return 0


def cmd_concentrate(args, rep):
    ws = load(args.file)
    cat, part = ws.partition(args.partition)
    if not _require_concentration(rep, cat, part, args.partition):
        return 1
    target, F = lifting.concentrating_functor(cat, part)
    ok, _ = lifting.check_2_lifting(F)
    pres, _ = concentration.is_concentration_preserving(F, part, discrete_partition(target))
    rep.say(f"concentrating functor of {args.partition} into a one-object category with "
            f"{target.n_morphisms} morphisms")
    for f in range(cat.n_morphisms):
        rep.say(f"  {cat.morphism_label(f)} -> {target.morphism_label(F.mor_map[f])}")
    rep.say(f"2-lifting: {'yes' if ok else 'no'}")
    rep.say(f"preserves concentrations (target discrete): {'yes' if pres else 'no'}")
    rep.result = {"mor_map": list(F.mor_map), "two_lifting": ok, "preserving": pres}
    return 0 if ok and pres else 1


def cmd_quotient(args, rep):
    ws = load(args.file)
    cat, part = ws.partition(args.partition)
    cname, sub = ws.get("subcategories", args.sub)
    if ws.categories[cname] != cat:
        raise WorkspaceError("subcategory and partition live on different categories",
                             path="/subcategories")
    if not _require_concentration(rep, cat, part, args.partition):
        return 1
    problem = catalg.subcategory_witness(cat, sub)
    if problem is not None:
        kind, w = problem
        shown = ", ".join(_labels(cat, w)) if kind in ("composition", "endpoint") else w
        rep.say(f"{args.sub} is not a subcategory: {kind} fails at ({shown})")
        rep.result = {"subcategory": False, "witness": [kind, list(w)]}
        return 1
    closed = catalg.check_closed(cat, part, sub)
    rep.say(f"closed on {args.sub}: {'yes' if closed else 'no'}")
    rep.result["closed"] = closed
    if not closed:
        return 1
    normal, w = catalg.is_normal_subconcentration(cat, part, sub)
    rep.say(f"normal: {'yes' if normal else 'no'}")
    rep.result["normal"] = normal
    if not normal:
        rep.result["witness"] = list(w)
        rep.say(f"  witness: element {w[0]}, {w[1]}, sub element {w[2]}")
        return 1
    q = catalg.quotient_concentration(cat, part, sub)
    Q, _ = concentration_monoid(cat, q)
    M, _ = concentration_monoid(cat, part)
    S = sorted({part.class_of[f] for f in sub.morphisms})
    expected = quotient_by_normal_submonoid(M, S)
    iso = find_isomorphism(Q, expected)
    rep.say(f"quotient concentration: {len(q.classes)} classes")
    rep.lines.extend(_partition_lines(cat, q))
    rep.lines.extend(_table_lines(Q))
    rep.say("matches the quotient of the concentration monoid: " + ("yes" if iso else "no"))
    rep.result.update({"classes": [list(c) for c in q.classes], "monoid": _monoid_json(Q),
                       "matches_monoid_quotient": iso is not None})
    return 0 if iso else 1


def cmd_semidirect(args, rep):
    ws = load(args.file)
    base_name, fiber_name, _, action = ws.get("cat_actions", args.action)
    C, pc = ws.partition(args.fiber_partition)
    D, pd = ws.partition(args.base_partition)
    if C != action.fiber or D != action.base:
        raise WorkspaceError("partitions do not match the action's categories", path="/cat_actions")
    cat, part = catalg.semidirect_category(C, pc, D, pd, action)
    M, _ = concentration_monoid(cat, part)
    MC, MD, phi = catalg.induced_action(action, pc, pd)
    expected = semidirect_monoid(MC, MD, phi)
    iso = find_isomorphism(M, expected)
    rep.say(f"semidirect product {fiber_name} x| {base_name}: {cat.n_objects} objects, "
            f"{cat.n_morphisms} morphisms, {len(part.classes)} classes")
    rep.lines.extend(_table_lines(M))
    rep.say("monoid matches the semidirect product of monoids: " + ("yes" if iso else "no"))
    rep.result = {"morphisms": cat.n_morphisms, "classes": len(part.classes),
                  "monoid": _monoid_json(M), "matches": iso is not None,
                  "phi": [list(p) for p in phi]}
    if args.compare:
        N = ws.get("monoids", args.compare)
        iso2 = find_isomorphism(M, N)
        rep.say(f"isomorphic to {args.compare}: " + ("yes" if iso2 else "no"))
        rep.result["compare"] = iso2 is not None
        return 0 if iso and iso2 else 1
    return 0 if iso else 1


def cmd_dirlim(args, rep):
    ws = load(args.file)
    _, _, D = ws.get("diagrams", args.diagram)
    if args.action:
        dname, _, action = ws.get("actions", args.action)
        if ws.diagrams[dname][2] is not D:
            raise WorkspaceError("action belongs to a different diagram", path="/actions")
    else:
        action = dirlim.trivial_action(D.poset)
    SG, part = dirlim.build_SG(D, action)
    dec = dirlim.decomposition(D, action)
    L, classical = dec.limit, dec.classical
    rep.say(f"S_G: {SG.n_objects} objects, {SG.n_morphisms} morphisms, {len(part.classes)} classes")
    rep.say(f"equivariant direct limit: order {L.size}")
    rep.lines.extend(_table_lines(L))
    rep.say(f"classical direct limit (at {D.poset.elements[D.poset.top]}): order {classical.size}")
    rep.say("category decomposes as a semidirect product: "
            + ("yes" if dec.functor_is_isomorphism else "no"))
    rep.say("limit matches classical limit x| G: " + ("yes" if dec.monoid_isomorphism else "no"))
    trivial = all(p == tuple(range(D.poset.size)) for p in action.perms)
    result = {"sg_morphisms": SG.n_morphisms, "classes": len(part.classes),
              "limit": _monoid_json(L), "classical_order": classical.size,
              "decomposition": dec.ok}
    code = 0 if dec.ok else 1
    if trivial:
        prod = direct_product(classical, action.group)
        ok = find_isomorphism(L, prod) is not None
        rep.say("trivial action; limit matches classical limit x G: " + ("yes" if ok else "no"))
        result["direct_product"] = ok
        code = code or (0 if ok else 1)
    if args.compare:
        N = ws.get("monoids", args.compare)
        ok = find_isomorphism(L, N) is not None
        rep.say(f"isomorphic to {args.compare}: " + ("yes" if ok else "no"))
        result["compare"] = ok
        code = code or (0 if ok else 1)
    rep.result = result
    return code


def _monoid_or_partition(ws, name):
    if name in ws.monoids:
        return ws.monoids[name]
    cat, part = ws.partition(name)
    return concentration_monoid(cat, part)[0]


def cmd_iso(args, rep):
    ws = load(args.file)
    M = _monoid_or_partition(ws, args.left)
    N = _monoid_or_partition(ws, args.right)
    iso = find_isomorphism(M, N)
    rep.say(f"{args.left} (order {M.size}) vs {args.right} (order {N.size}): "
            + ("isomorphic" if iso else "not isomorphic"))
    if iso:
        rep.say("  " + ", ".join(f"{M.element_labels[a]} -> {N.element_labels[b]}"
                                  for a, b in enumerate(iso)))
    rep.result = {"isomorphism": list(iso) if iso else None}
    return 0 if iso else 1


def cmd_adjunction(args, rep):
    if args.monoid:
        ws = load(args.file)
        M = ws.get("monoids", args.monoid)
        ok = lifting.verify_adjunction_triangles_monoid(M)
        subject = f"monoid {args.monoid}"
    else:
        ws = load(args.file)
        cat, part = ws.partition(args.partition)
        if not _require_concentration(rep, cat, part, args.partition):
            return 1
        ok = lifting.verify_adjunction_triangles(cat, part)
        subject = f"partition {args.partition}"
    rep.say(f"triangle identities at {subject}: {'hold' if ok else 'FAIL'}")
    rep.result = {"triangles": ok}
    return 0 if ok else 1


def seed_from_env(default: int = 0) -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise WorkspaceError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def cmd_groupoid_model(args, rep):
    try:
        G = group_by_name(args.group)
    except ConcentraError as exc:
        raise WorkspaceError(str(exc)) from None
    seed = args.seed if args.seed is not None else seed_from_env()
    rng = random.Random(seed)
    n = args.objects
    if n < 1:
        raise WorkspaceError("--objects must be at least 1")
    T = groupoids.torsor_groupoid(G, n)
    fam1 = groupoids.sample_theta(T, 0, rng)
    fam2 = groupoids.sample_theta(T, n - 1, rng)
    p1 = groupoids.theta_concentration(T, fam1)
    p2 = groupoids.theta_concentration(T, fam2)
    M, _ = concentration_monoid(T, p1)
    iso = find_isomorphism(M, G)
    explicit = groupoids.theta_isomorphism(T, fam1)
    rho = rng.choice(T.hom(0, n - 1))
    Phi = groupoids.theta_change_functor(T, fam1, fam2, rho)
    change_ok = concentration.is_concentration_isomorphism(Phi, p1, p2)
    rep.say(f"torsor groupoid of {args.group} on {n} objects: {T.n_morphisms} morphisms (seed {seed})")
    rep.say("path family 1: " + ", ".join(_labels(T, fam1.theta)))
    rep.say("path family 2: " + ", ".join(_labels(T, fam2.theta)))
    rep.say(f"concentration monoid: order {M.size}, isomorphic to {args.group}: "
            + ("yes" if iso else "no"))
    rep.say("conjugation map is a bijective homomorphism: yes")
    rep.say("change of path family is a concentration isomorphism: " + ("yes" if change_ok else "no"))
    result = {"seed": seed, "morphisms": T.n_morphisms, "monoid_iso": iso is not None,
              "explicit_map": list(explicit.map), "change_iso": change_ok,
              "theta1": list(fam1.theta), "theta2": list(fam2.theta)}
    ok = iso is not None and change_ok
    if args.cover:
        cover, p, part = groupoids.codiscrete_cover(G)
        from .category import is_equivalent_to_trivial
        Mc, _ = concentration_monoid(cover, part)
        checks = {
            "equivalent_to_trivial": is_equivalent_to_trivial(cover),
            "monoid_iso": find_isomorphism(Mc, G) is not None,
            "multivalued_fibration": lifting.check_multivalued_fibration(p),
            "surjective": lifting.check_surjective_on_morphisms(p),
            "two_lifting": lifting.check_2_lifting(p)[0],
        }
        rep.say(f"codiscrete cover: {cover.n_objects} objects, {cover.n_morphisms} morphisms")
        for k, v in checks.items():
            rep.say(f"  {k.replace('_', ' ')}: {'yes' if v else 'no'}")
        result["cover"] = checks
        ok = ok and all(checks.values())
    rep.result = result
    return 0 if ok else 1


def cmd_export(args, rep):
    os.makedirs(args.directory, exist_ok=True)
    written = []
    for name, ws in sorted(fixture_workspaces().items()):
        path = os.path.join(args.directory, name)
        save(ws, path)
        written.append(name)
        rep.say(f"wrote {path}")
    rep.result = {"files": written}
    return 0


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="concentra",
        description="Check concentration structures on finite categories.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check category and functor axioms")
    p.add_argument("file")
    p.add_argument("--category")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check-conc", help="check the concentration axioms for a partition")
    p.add_argument("file")
    p.add_argument("--partition", required=True)
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--exhaustive", action="store_true",
                   help="also check associativity tuple by tuple (small categories only)")
    p.set_defaults(func=cmd_check_conc)

    p = sub.add_parser("monoid", help="print the concentration monoid")
    p.add_argument("file")
    p.add_argument("--partition", required=True)
    p.add_argument("--compare", help="monoid name to test for isomorphism")
    p.set_defaults(func=cmd_monoid)

    p = sub.add_parser("enumerate-conc", help="list every concentration on a category")
    p.add_argument("file")
    p.add_argument("--category")
    p.add_argument("--bound", type=int, default=concentration.ENUMERATION_BOUND)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("pullback", help="pull a partition back along a functor")
    p.add_argument("file")
    p.add_argument("--functor", required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_pullback)

    p = sub.add_parser("concentrate", help="build the concentrating functor")
    p.add_argument("file")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_concentrate)

    p = sub.add_parser("quotient", help="quotient by a normal sub-concentration")
    p.add_argument("file")
    p.add_argument("--partition", required=True)
    p.add_argument("--sub", required=True)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("semidirect", help="semidirect product of categories with concentration")
    p.add_argument("file")
    p.add_argument("--action", required=True)
    p.add_argument("--fiber-partition", required=True)
    p.add_argument("--base-partition", required=True)
    p.add_argument("--compare")
    p.set_defaults(func=cmd_semidirect)

    p = sub.add_parser("dirlim", help="equivariant direct limit of a group diagram")
    p.add_argument("file")
    p.add_argument("--diagram", required=True)
    p.add_argument("--action")
    p.add_argument("--compare")
    p.set_defaults(func=cmd_dirlim)

    p = sub.add_parser("iso", help="search for a monoid isomorphism")
    p.add_argument("file")
    p.add_argument("left", help="monoid or partition name")
    p.add_argument("right", help="monoid or partition name")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("adjunction", help="check the triangle identities")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--partition")
    g.add_argument("--monoid")
    p.set_defaults(func=cmd_adjunction)

    p = sub.add_parser("groupoid-model", help="torsor groupoid and codiscrete cover of a group")
    p.add_argument("--group", required=True, help="Z1, Zn, Z2xZ2 or Sn")
    p.add_argument("--objects", type=int, default=2)
    p.add_argument("--seed", type=int, help=f"defaults to ${SEED_ENV} or 0")
    p.add_argument("--cover", action="store_true")
    p.set_defaults(func=cmd_groupoid_model)

    p = sub.add_parser("export-fixtures", help="write the example workspaces as JSON")
    p.add_argument("directory")
    p.set_defaults(func=cmd_export)
    return parser


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    rep = Report()
    try:
        code = args.func(args, rep)
    except WorkspaceError as exc:
        rep.say(f"error: {exc}")
        rep.result = {"error": str(exc), "path": exc.path}
        code = 2
    except SizeBoundError as exc:
        rep.say(f"error: {exc}")
        rep.result = {"error": str(exc), "size": exc.size, "bound": exc.bound}
        code = 2
    except ConcentraError as exc:
        rep.say(f"error: {exc}")
        witness = getattr(exc, "witness", None)
        rep.result = {"error": str(exc), "witness": _jsonable(witness)}
        code = 1
    out.write(rep.render())
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
