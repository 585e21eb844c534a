"""SSJ: a JSON format for finite simplicial sets with optional group action
and retraction.

A document looks like::

    {"name": "S1",
     "generators": [{"id": "v", "dim": 0}, {"id": "e", "dim": 1}],
     "faces": {"e": [[[], "v"], [[], "v"]]},
     "group": {"elements": ["0", "1"], "table": [[0, 1], [1, 0]]},
     "action": {"1": {"v": "v", "e": "e"}},
     "retraction": {"base": {...}, "map": {"e": [[0], "v"]}, "section": {"v": [[], "v"]}}}

Face ``i`` of a generator is ``[degeneracy word, generator]`` with the word in
descending order.  ``group`` may also be ``"free-symbolic"`` (no finite group).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .retract import Base, RetractiveObject, point_base
from .sgrp import FiniteGroup, GroupAction, group_from_table, trivial_group
from .sset import GeneratedSimplicialSet, NormalSimplex, map_from_generators, point


class SSJError(ValueError):
    """Malformed input; ``where`` is ``line:column`` or a JSON path."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


@dataclass
class SSJSpace:
    name: str
    space: GeneratedSimplicialSet
    group: FiniteGroup | None
    action: dict | None          # element -> {generator: generator}
    base: "SSJSpace | None" = None
    retraction: dict | None = None  # generator -> NormalSimplex of base
    section: dict | None = None     # base generator -> NormalSimplex of space
    document: dict | None = None

    def act(self, x: NormalSimplex, g) -> NormalSimplex:
        if self.action is None or g not in self.action:
            return x
        return NormalSimplex(x.degeneracies, self.action[g][x.generator], x.gen_dim)

    def group_action(self) -> GroupAction:
        G = self.group if self.group is not None else trivial_group()
        return GroupAction(G, self.space, self.act)


def loads(text: str) -> SSJSpace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SSJError(exc.msg, f"{exc.lineno}:{exc.colno}") from None
    return from_document(doc)


def load(path: str) -> SSJSpace:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _expect(cond: bool, message: str, where: str) -> None:
    if not cond:
        raise SSJError(message, where)


def _normal(entry: Any, dims: dict, where: str) -> NormalSimplex:
    _expect(isinstance(entry, list) and len(entry) == 2, "expected [degeneracy word, generator]", where)
    word, gen = entry
    _expect(isinstance(word, list) and all(isinstance(j, int) and j >= 0 for j in word),
            "degeneracy word must be a list of nonnegative integers", where)
    _expect(gen in dims, f"unknown generator {gen!r}", where)
    _expect(list(word) == sorted(word, reverse=True) and len(set(word)) == len(word),
            "degeneracy word must be strictly decreasing", where)
    d = dims[gen]
    for t, j in enumerate(reversed(word)):
        _expect(j <= d + t, f"degeneracy s_{j} out of range", where)
    return NormalSimplex(tuple(word), gen, d)


def from_document(doc: Any, path: str = "$") -> SSJSpace:
    _expect(isinstance(doc, dict), "document must be an object", path)
    name = doc.get("name", "")
    _expect(isinstance(name, str), "name must be a string", f"{path}.name")
    gens = doc.get("generators")
    _expect(isinstance(gens, list), "generators must be a list", f"{path}.generators")
    dims: dict = {}
    for k, g in enumerate(gens):
        w = f"{path}.generators[{k}]"
        _expect(isinstance(g, dict) and isinstance(g.get("id"), str) and isinstance(g.get("dim"), int)
                and g["dim"] >= 0, "generator needs a string id and a nonnegative dim", w)
        _expect(g["id"] not in dims, f"duplicate generator {g['id']!r}", w)
        dims[g["id"]] = g["dim"]
    faces_doc = doc.get("faces", {})
    _expect(isinstance(faces_doc, dict), "faces must be an object", f"{path}.faces")
    faces = {}
    for gid, d in dims.items():
        w = f"{path}.faces.{gid}"
        if d == 0:
            _expect(gid not in faces_doc or faces_doc[gid] == [], "vertices have no faces", w)
            continue
        _expect(gid in faces_doc, "missing faces", w)
        entries = faces_doc[gid]
        _expect(isinstance(entries, list) and len(entries) == d + 1, f"expected {d + 1} faces", w)
        faces[gid] = tuple(_normal(e, dims, f"{w}[{i}]") for i, e in enumerate(entries))
        for i, f in enumerate(faces[gid]):
            _expect(f.degree == d - 1, "face has the wrong degree", f"{w}[{i}]")
    for gid in faces_doc:
        _expect(gid in dims, f"faces given for unknown generator {gid!r}", f"{path}.faces")
    X = GeneratedSimplicialSet(dims, faces, name=name)
    rep = X.validate_generators() if hasattr(X, "validate_generators") else X.validate()
    _expect(bool(rep), f"simplicial identities fail: {rep.violation}", f"{path}.faces")

    group, action = None, None
    gdoc = doc.get("group")
    if gdoc is not None and gdoc != "free-symbolic":
        w = f"{path}.group"
        _expect(isinstance(gdoc, dict), "group must be an object or \"free-symbolic\"", w)
        els = gdoc.get("elements")
        table = gdoc.get("table")
        _expect(isinstance(els, list) and all(isinstance(e, str) for e in els) and len(set(els)) == len(els),
                "elements must be distinct strings", w)
        _expect(isinstance(table, list) and len(table) == len(els)
                and all(isinstance(r, list) and len(r) == len(els) for r in table), "table must be square", w)
        _expect(all(isinstance(x, int) and 0 <= x < len(els) for r in table for x in r),
                "table entries are element indices", w)
        try:
            group = group_from_table(els, [[els[x] for x in r] for r in table])
        except ValueError as exc:
            raise SSJError(str(exc), w) from None
        group.name = gdoc.get("name", "")
    adoc = doc.get("action")
    if adoc is not None:
        w = f"{path}.action"
        _expect(group is not None, "action requires a finite group", w)
        _expect(isinstance(adoc, dict), "action must be an object", w)
        action = {}
        for g in group.elements:
            perm = adoc.get(g)
            if perm is None:
                _expect(g == group.identity, f"missing permutation for {g!r}", w)
                perm = {x: x for x in dims}
            _expect(isinstance(perm, dict) and set(perm) == set(dims) and set(perm.values()) == set(dims),
                    f"element {g!r} must permute the generators", f"{w}.{g}")
            _expect(all(dims[a] == dims[b] for a, b in perm.items()), "permutation must preserve dimension",
                    f"{w}.{g}")
            action[g] = perm
        S = SSJSpace(name, X, group, action)
        rep = S.group_action().check(max(dims.values(), default=0) + 1)
        _expect(bool(rep), f"not an action: {rep.violation}", w)

    out = SSJSpace(name, X, group, action, document=doc)
    rdoc = doc.get("retraction")
    if rdoc is not None:
        w = f"{path}.retraction"
        _expect(isinstance(rdoc, dict) and "base" in rdoc, "retraction needs a base", w)
        base = from_document(rdoc["base"], f"{w}.base")
        bdims = base.space.generators
        rmap = rdoc.get("map", {})
        smap = rdoc.get("section", {})
        _expect(isinstance(rmap, dict) and set(rmap) == set(dims), "map must cover every generator", f"{w}.map")
        _expect(isinstance(smap, dict) and set(smap) == set(bdims), "section must cover every base generator",
                f"{w}.section")
        r_images = {g: _normal(e, bdims, f"{w}.map.{g}") for g, e in rmap.items()}
        s_images = {g: _normal(e, dims, f"{w}.section.{g}") for g, e in smap.items()}
        try:
            r = map_from_generators(X, base.space, r_images)
            s = map_from_generators(base.space, X, s_images)
        except ValueError as exc:
            raise SSJError(str(exc), w) from None
        for g in bdims:
            x = base.space.gen(g)
            _expect(r(s(x)) == x, f"r ∘ s moves {g!r}", w)
        out.base, out.retraction, out.section = base, r_images, s_images
        out._r, out._s = r, s
    return out


def dumps(doc: dict) -> str:
    """Canonical form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_document(S: SSJSpace) -> dict:
    X = S.space
    doc: dict = {"name": S.name,
                 "generators": [{"id": g, "dim": d} for g, d in X.generators.items()],
                 "faces": {g: [[list(f.degeneracies), f.generator] for f in fs] for g, fs in X.face_table.items()}}
    if S.group is not None:
        els = list(S.group.elements)
        idx = {e: i for i, e in enumerate(els)}
        doc["group"] = {"elements": els, "table": [[idx[S.group.mul(a, b)] for b in els] for a in els]}
        if S.group.name:
            doc["group"]["name"] = S.group.name
    elif S.document is not None and S.document.get("group") == "free-symbolic":
        doc["group"] = "free-symbolic"
    if S.action is not None:
        doc["action"] = {g: dict(p) for g, p in S.action.items() if g != S.group.identity}
    if S.base is not None:
        doc["retraction"] = {"base": to_document(S.base),
                             "map": {g: [list(x.degeneracies), x.generator] for g, x in S.retraction.items()},
                             "section": {g: [list(x.degeneracies), x.generator] for g, x in S.section.items()}}
    return doc


def retractive(S: SSJSpace, bound: int = 4) -> RetractiveObject:
    """The retractive object described by ``S``.

    With a retraction block the object lives over its base (the group acts on
    the base through ``r``; the base must carry the induced action).  Without
    one, ``S`` becomes ``S₊ = S ⨿ *`` over the point.
    """
    G = S.group if S.group is not None else trivial_group()
    if S.base is None:
        base = point_base(G, bound)
        P = point()
        X = S.space
        b = min(bound, base.bound)

        def simplices(n):
            return [("x", x) for x in X.simplices(n)] + [("b", y) for y in P.simplices(n)]

        return RetractiveObject.build(
            base, simplices,
            lambda i, y: (y[0], (X if y[0] == "x" else P).face(i, y[1])),
            lambda j, y: (y[0], (X if y[0] == "x" else P).degeneracy(j, y[1])),
            lambda y, g: ("x", S.act(y[1], g)) if y[0] == "x" else y,
            lambda y: P.simplices(y[1].degree)[0] if y[0] == "x" else y[1],
            lambda w: ("b", w), bound=b, gen_dim=max(X.generators.values(), default=0), name=f"{S.name}₊")
    W = S.base.space
    base = Base(W, G, S.base.act if S.base.action is not None else None, bound)
    rep = GroupAction(G, W, base.act).check(bound) if S.group is not None else None
    _expect(rep is None or bool(rep), "group does not act on the base", "$.retraction")
    r, s = S._r, S._s
    rel = [d for g, d in S.space.generators.items() if g not in {x.generator for x in S.section.values()}]
    return RetractiveObject.build(base, S.space.simplices, S.space.face, S.space.degeneracy, S.act, r, s,
                                  bound=bound, gen_dim=max(rel, default=-1), name=S.name)
