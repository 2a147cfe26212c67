"""Reading and writing workspace documents (JSON).

A workspace is a JSON object with named sections::

    {
      "format": "concentra-workspace", "version": 1,
      "categories":    {name: {"objects": [...], "morphisms": [[label, src, tgt], ...],
                               "identities": [...], "composition": [[f, g, fg], ...]}},
      "partitions":    {name: {"category": name, "classes": [[id or label, ...], ...]}},
      "functors":      {name: {"source": name, "target": name,
                               "objects": [...], "morphisms": [...]}},
      "monoids":       {name: {"table": [[...]], "identity": i, "labels": [...]}},
      "posets":        {name: {"elements": [...], "leq": [[bool, ...], ...]}},
      "diagrams":      {name: {"poset": name, "groups": [monoid names], "group_of": [...],
                               "homs": [[a, b, [images]], ...]}},
      "actions":       {name: {"diagram": name, "group": monoid name, "perms": [[...], ...]}},
      "subcategories": {name: {"category": name, "objects": [...], "morphisms": [...]}},
      "cat_actions":   {name: {"base": name, "fiber": name, "functors": [functor names]}}
    }

Indices are 0-based.  Partition classes may list morphism ids or labels;
morphisms not mentioned form singleton classes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import jsonschema

from .catalg import CatAction, SubcategoryData
from .category import FinCategory, FunctorData
from .concentration import MorphismPartition
from .dirlim import DirectedPoset, GroupDiagram, PosetAction
from .errors import ConcentraError, StructuralError
from .monoid import FinMonoid

FORMAT = "concentra-workspace"
VERSION = 1

_nat = {"type": "integer", "minimum": 0}
_names = {"type": "string"}


def _section(item):
    return {"type": "object", "additionalProperties": item}


SCHEMA = {
    "type": "object",
    "required": ["format", "version"],
    "additionalProperties": False,
    "properties": {
        "format": {"const": FORMAT},
        "version": {"const": VERSION},
        "categories": _section({
            "type": "object",
            "required": ["objects", "morphisms", "identities", "composition"],
            "additionalProperties": False,
            "properties": {
                "objects": {"type": "array", "items": {"type": "string"}},
                "morphisms": {"type": "array", "items": {
                    "type": "array", "prefixItems": [{"type": "string"}, _nat, _nat],
                    "minItems": 3, "maxItems": 3}},
                "identities": {"type": "array", "items": _nat},
                "composition": {"type": "array", "items": {
                    "type": "array", "items": _nat, "minItems": 3, "maxItems": 3}},
            },
        }),
        "partitions": _section({
            "type": "object", "required": ["category", "classes"], "additionalProperties": False,
            "properties": {
                "category": _names,
                "classes": {"type": "array", "items": {
                    "type": "array", "items": {"type": ["integer", "string"]}}},
            },
        }),
        "functors": _section({
            "type": "object", "required": ["source", "target", "objects", "morphisms"],
            "additionalProperties": False,
            "properties": {
                "source": _names, "target": _names,
                "objects": {"type": "array", "items": _nat},
                "morphisms": {"type": "array", "items": _nat},
            },
        }),
        "monoids": _section({
            "type": "object", "required": ["table", "identity"], "additionalProperties": False,
            "properties": {
                "table": {"type": "array", "minItems": 1,
                          "items": {"type": "array", "items": _nat}},
                "identity": _nat,
                "labels": {"type": "array", "items": {"type": "string"}},
            },
        }),
        "posets": _section({
            "type": "object", "required": ["elements", "leq"], "additionalProperties": False,
            "properties": {
                "elements": {"type": "array", "items": {"type": "string"}},
                "leq": {"type": "array", "items": {"type": "array", "items": {"type": "boolean"}}},
            },
        }),
        "diagrams": _section({
            "type": "object", "required": ["poset", "groups", "group_of", "homs"],
            "additionalProperties": False,
            "properties": {
                "poset": _names,
                "groups": {"type": "array", "items": _names},
                "group_of": {"type": "array", "items": _nat},
                "homs": {"type": "array", "items": {
                    "type": "array", "prefixItems": [_nat, _nat, {"type": "array", "items": _nat}],
                    "minItems": 3, "maxItems": 3}},
            },
        }),
        "actions": _section({
            "type": "object", "required": ["diagram", "group", "perms"],
            "additionalProperties": False,
            "properties": {
                "diagram": _names, "group": _names,
                "perms": {"type": "array", "items": {"type": "array", "items": _nat}},
            },
        }),
        "subcategories": _section({
            "type": "object", "required": ["category", "objects", "morphisms"],
            "additionalProperties": False,
            "properties": {
                "category": _names,
                "objects": {"type": "array", "items": _nat},
                "morphisms": {"type": "array", "items": _nat},
            },
        }),
        "cat_actions": _section({
            "type": "object", "required": ["base", "fiber", "functors"],
            "additionalProperties": False,
            "properties": {
                "base": _names, "fiber": _names,
                "functors": {"type": "array", "items": _names},
            },
        }),
    },
}


class WorkspaceError(ConcentraError):
    """Malformed workspace document; ``path`` locates the offending field."""

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass
class Workspace:
    categories: dict = field(default_factory=dict)
    partitions: dict = field(default_factory=dict)     # name -> (category name, partition)
    functors: dict = field(default_factory=dict)       # name -> (source, target, FunctorData)
    monoids: dict = field(default_factory=dict)
    posets: dict = field(default_factory=dict)
    diagrams: dict = field(default_factory=dict)       # name -> (poset name, group names, diagram)
    actions: dict = field(default_factory=dict)        # name -> (diagram name, group name, action)
    subcategories: dict = field(default_factory=dict)  # name -> (category name, SubcategoryData)
    cat_actions: dict = field(default_factory=dict)    # name -> (base, fiber, functor names, action)

    def get(self, section: str, name: str):
        table = getattr(self, section)
        if name not in table:
            known = ", ".join(sorted(table)) or "none"
            raise WorkspaceError(f"no entry named {name!r} (known: {known})", path=f"/{section}")
        return table[name]

    def partition(self, name):
        cname, part = self.get("partitions", name)
        return self.categories[cname], part

    def functor(self, name) -> FunctorData:
        return self.get("functors", name)[2]


def _path(parts) -> str:
    return "/" + "/".join(str(p) for p in parts)


def _resolve(ws, section, name, where):
    if name not in getattr(ws, section):
        kind = "category" if section == "categories" else section[:-1]
        raise WorkspaceError(f"unknown {kind} {name!r}", path=where)
    return getattr(ws, section)[name]


def _build(where, fn, *args):
    try:
        return fn(*args)
    except (StructuralError, ValueError, TypeError, KeyError, IndexError) as exc:
        raise WorkspaceError(str(exc), path=where) from exc


def _morphism_ref(cat, x, where):
    if isinstance(x, int):
        return x
    try:
        return cat.morphism_id(x)
    except KeyError:
        raise WorkspaceError(f"unknown morphism label {x!r}", path=where) from None


def from_dict(doc: dict) -> Workspace:
    """Validate against :data:`SCHEMA` and build every entry."""
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        raise WorkspaceError(exc.message, path=_path(exc.absolute_path)) from None
    ws = Workspace()
    for name, c in doc.get("categories", {}).items():
        ws.categories[name] = _build(f"/categories/{name}", FinCategory, c["objects"],
                                     c["morphisms"], c["identities"], c["composition"])
    for name, m in doc.get("monoids", {}).items():
        ws.monoids[name] = _build(f"/monoids/{name}", FinMonoid, m["table"], m["identity"],
                                  m.get("labels"))
    for name, p in doc.get("partitions", {}).items():
        where = f"/partitions/{name}"
        cat = _resolve(ws, "categories", p["category"], where + "/category")
        classes = [[_morphism_ref(cat, x, where + "/classes") for x in c] for c in p["classes"]]
        part = _build(where, MorphismPartition.from_classes, classes, cat.n_morphisms)
        ws.partitions[name] = (p["category"], part)
    for name, f in doc.get("functors", {}).items():
        where = f"/functors/{name}"
        src = _resolve(ws, "categories", f["source"], where + "/source")
        tgt = _resolve(ws, "categories", f["target"], where + "/target")
        F = _build(where, FunctorData, src, tgt, f["objects"], f["morphisms"])
        ws.functors[name] = (f["source"], f["target"], F)
    for name, p in doc.get("posets", {}).items():
        ws.posets[name] = _build(f"/posets/{name}", DirectedPoset, p["elements"], p["leq"])
    for name, d in doc.get("diagrams", {}).items():
        where = f"/diagrams/{name}"
        P = _resolve(ws, "posets", d["poset"], where + "/poset")
        groups = [_resolve(ws, "monoids", g, f"{where}/groups/{i}") for i, g in enumerate(d["groups"])]
        homs = {(a, b): m for a, b, m in d["homs"]}
        D = _build(where, GroupDiagram, P, groups, d["group_of"], homs)
        ws.diagrams[name] = (d["poset"], list(d["groups"]), D)
    for name, a in doc.get("actions", {}).items():
        where = f"/actions/{name}"
        _resolve(ws, "diagrams", a["diagram"], where + "/diagram")
        G = _resolve(ws, "monoids", a["group"], where + "/group")
        ws.actions[name] = (a["diagram"], a["group"], _build(where, PosetAction, G, a["perms"]))
    for name, s in doc.get("subcategories", {}).items():
        where = f"/subcategories/{name}"
        _resolve(ws, "categories", s["category"], where + "/category")
        ws.subcategories[name] = (s["category"], SubcategoryData(s["objects"], s["morphisms"]))
    for name, a in doc.get("cat_actions", {}).items():
        where = f"/cat_actions/{name}"
        base = _resolve(ws, "categories", a["base"], where + "/base")
        fiber = _resolve(ws, "categories", a["fiber"], where + "/fiber")
        fs = [_resolve(ws, "functors", f, f"{where}/functors/{i}")[2]
              for i, f in enumerate(a["functors"])]
        ws.cat_actions[name] = (a["base"], a["fiber"], list(a["functors"]),
                                CatAction(base, fiber, fs))
    return ws


def load(path) -> Workspace:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise WorkspaceError(f"invalid JSON: {exc.msg} (line {exc.lineno})", path="/") from None
    except OSError as exc:
        raise WorkspaceError(f"cannot read {path}: {exc.strerror}") from None
    return from_dict(doc)


# -- serialization ------------------------------------------------------------------

def category_to_dict(cat: FinCategory) -> dict:
    return {
        "objects": list(cat.objects),
        "morphisms": [list(m) for m in cat.morphisms],
        "identities": list(cat.identities),
        "composition": [list(t) for t in cat.composition],
    }


def partition_to_dict(category: str, part: MorphismPartition) -> dict:
    return {"category": category, "classes": [list(c) for c in part.classes]}


def functor_to_dict(source: str, target: str, F: FunctorData) -> dict:
    return {"source": source, "target": target,
            "objects": list(F.obj_map), "morphisms": list(F.mor_map)}


def monoid_to_dict(M: FinMonoid) -> dict:
    return {"table": [list(r) for r in M.table], "identity": M.identity,
            "labels": list(M.element_labels)}


def poset_to_dict(P: DirectedPoset) -> dict:
    return {"elements": list(P.elements), "leq": [list(r) for r in P.leq]}


def diagram_to_dict(poset: str, groups, D: GroupDiagram) -> dict:
    return {"poset": poset, "groups": list(groups), "group_of": list(D.group_of),
            "homs": [[a, b, list(m)] for (a, b), m in sorted(D.homs.items())]}


def to_dict(ws: Workspace) -> dict:
    doc = {"format": FORMAT, "version": VERSION}
    if ws.categories:
        doc["categories"] = {k: category_to_dict(v) for k, v in ws.categories.items()}
    if ws.partitions:
        doc["partitions"] = {k: partition_to_dict(c, p) for k, (c, p) in ws.partitions.items()}
    if ws.functors:
        doc["functors"] = {k: functor_to_dict(s, t, F) for k, (s, t, F) in ws.functors.items()}
    if ws.monoids:
        doc["monoids"] = {k: monoid_to_dict(M) for k, M in ws.monoids.items()}
    if ws.posets:
        doc["posets"] = {k: poset_to_dict(P) for k, P in ws.posets.items()}
    if ws.diagrams:
        doc["diagrams"] = {k: diagram_to_dict(p, g, D) for k, (p, g, D) in ws.diagrams.items()}
    if ws.actions:
        doc["actions"] = {k: {"diagram": d, "group": g, "perms": [list(p) for p in A.perms]}
                          for k, (d, g, A) in ws.actions.items()}
    if ws.subcategories:
        doc["subcategories"] = {k: {"category": c, "objects": list(S.objects),
                                    "morphisms": list(S.morphisms)}
                                for k, (c, S) in ws.subcategories.items()}
    if ws.cat_actions:
        doc["cat_actions"] = {k: {"base": b, "fiber": f, "functors": list(names)}
                              for k, (b, f, names, _) in ws.cat_actions.items()}
    return doc


def dumps(ws: Workspace) -> str:
    return json.dumps(to_dict(ws), indent=1, sort_keys=True) + "\n"


def save(ws: Workspace, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(ws))
