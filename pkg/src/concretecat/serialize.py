"""JSON encoding of groupoids, functors, quivers and concrete categories.

Groupoids are ``{"objects": n, "morphisms": [{"id", "src", "tgt"}],
"identities": [...], "compose": [[g, f, h], ...]}``.  In a category file the
hom realisation lists, for each hom object, its functor's position in the
canonical enumeration of ``objPlus(x) -> objPlus(y)``, and for each hom
morphism the components of its natural isomorphism.  Output is
deterministic: keys sorted, no floats outside the ``timing`` block.
"""
import hashlib
import json
from itertools import product
from typing import Any, Dict

from .concat import ConcreteCategory, FiberElement, Realisation
from .errors import SchemaError, StructuralValidationError
from .fingpd import (FinGroupoid, GFunctor, NatIso, compose_functors, identity_functor,
                     iter_functors)
from .freecat import Quiver

FORMAT_VERSION = 1


def dumps(obj, pretty=False) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"line {e.lineno}, column {e.colno}", e.msg) from None


# field access with JSON-path errors --------------------------------------------------------------


def _get(d, key, where, kind=None):
    if not isinstance(d, dict):
        raise SchemaError(where, "expected an object")
    if key not in d:
        raise SchemaError(f"{where}.{key}", "missing")
    v = d[key]
    if kind is int and (not isinstance(v, int) or isinstance(v, bool)):
        raise SchemaError(f"{where}.{key}", "expected an integer")
    if kind is list and not isinstance(v, list):
        raise SchemaError(f"{where}.{key}", "expected a list")
    return v


def _ints(v, where):
    if not isinstance(v, list) or any(not isinstance(a, int) or isinstance(a, bool) for a in v):
        raise SchemaError(where, "expected a list of integers")
    return v


# groupoids ----------------------------------------------------------------------------------


def groupoid_to_json(G: FinGroupoid) -> Dict[str, Any]:
    return {"objects": G.n_objects,
            "morphisms": [{"id": m, "src": G.src[m], "tgt": G.tgt[m]} for m in G.morphisms],
            "identities": list(G.identities),
            "compose": [[g, f, h] for (g, f), h in sorted(G.comp.items())]}


def groupoid_from_json(d, where="$") -> FinGroupoid:
    n = _get(d, "objects", where, int)
    mors = _get(d, "morphisms", where, list)
    src, tgt = [], []
    for i, m in enumerate(mors):
        w = f"{where}.morphisms[{i}]"
        if _get(m, "id", w, int) != i:
            raise SchemaError(f"{w}.id", f"expected {i}; ids must be consecutive")
        src.append(_get(m, "src", w, int))
        tgt.append(_get(m, "tgt", w, int))
    ids = _ints(_get(d, "identities", where, list), f"{where}.identities")
    comp = {}
    for i, row in enumerate(_get(d, "compose", where, list)):
        row = _ints(row, f"{where}.compose[{i}]")
        if len(row) != 3:
            raise SchemaError(f"{where}.compose[{i}]", "expected [g, f, h]")
        comp[row[0], row[1]] = row[2]
    try:
        return FinGroupoid(n, src, tgt, ids, comp).validate()
    except StructuralValidationError as e:
        raise SchemaError(where, str(e)) from None


# functors -----------------------------------------------------------------------------------

_RANK_CACHE = {}


def _enumeration(X, Y):
    k = (X.key(), Y.key())
    if k not in _RANK_CACHE:
        fs = list(iter_functors(X, Y))
        _RANK_CACHE[k] = (fs, {F.key: i for i, F in enumerate(fs)})
    return _RANK_CACHE[k]


def functor_rank(F: GFunctor) -> int:
    """Position of ``F`` among all functors ``F.dom -> F.cod`` in canonical order."""
    X, Y = F.dom, F.cod
    if X.is_discrete:
        r = 0
        for v in F.obj_map:
            r = r * Y.n_objects + v
        return r
    return _enumeration(X, Y)[1][F.key]


def functor_unrank(X: FinGroupoid, Y: FinGroupoid, r, where="$") -> GFunctor:
    if X.is_discrete:
        total = Y.n_objects ** X.n_objects
        if not 0 <= r < total:
            raise SchemaError(where, f"functor index {r} out of range 0..{total - 1}")
        obj = []
        for _ in range(X.n_objects):
            r, v = divmod(r, Y.n_objects)
            obj.append(v)
        obj.reverse()
        return GFunctor(X, Y, tuple(obj), tuple(Y.identities[v] for v in obj))
    fs = _enumeration(X, Y)[0]
    if not 0 <= r < len(fs):
        raise SchemaError(where, f"functor index {r} out of range 0..{len(fs) - 1}")
    return fs[r]


def functor_to_json(F: GFunctor):
    return {"dom": groupoid_to_json(F.dom), "cod": groupoid_to_json(F.cod),
            "objects": list(F.obj_map), "morphisms": list(F.mor_map)}


def functor_from_json(d, where="$") -> GFunctor:
    X = groupoid_from_json(_get(d, "dom", where), f"{where}.dom")
    Y = groupoid_from_json(_get(d, "cod", where), f"{where}.cod")
    F = GFunctor(X, Y, tuple(_ints(_get(d, "objects", where, list), f"{where}.objects")),
                 tuple(_ints(_get(d, "morphisms", where, list), f"{where}.morphisms")))
    try:
        return F.validate()
    except StructuralValidationError as e:
        raise SchemaError(where, str(e)) from None


def quiver_from_json(d, where="$") -> Quiver:
    n = _get(d, "vertices", where, int)
    arrows = [tuple(_ints(a, f"{where}.arrows[{i}]"))
              for i, a in enumerate(_get(d, "arrows", where, list))]
    if any(len(a) != 2 for a in arrows):
        raise SchemaError(f"{where}.arrows", "each arrow is [src, tgt]")
    return Quiver(n, arrows)


# categories ------------------------------------------------------------------------------------


def category_to_json(C: ConcreteCategory) -> Dict[str, Any]:
    pool, index = [], {}

    def ref(G):
        k = G.key()
        if k not in index:
            index[k] = len(pool)
            pool.append(groupoid_to_json(G))
        return index[k]

    homs = []
    for x, y in C.pairs():
        R = C.hom_plus[x, y]
        homs.append({"src": x, "tgt": y, "groupoid": ref(C.hom[x, y]),
                     "homPlus": {"objects": [functor_rank(F) for F in R.objects],
                                 "morphisms": [list(a.components) for a in R.morphisms]}})
    out = {
        "kind": "category", "format": FORMAT_VERSION, "name": C.name, "notes": list(C.notes),
        "objects": C.n_objects,
        "objPlus": [ref(G) for G in C.obj_plus],
        "hom": homs,
        "groupoids": pool,
        "witnesses": {
            "ident": [{"element": w.element, "path": list(w.path.components)} for w in C.ident],
            "cmp": [list(k) + [w.element, list(w.path.components)] for k, w in sorted(C.cmp.items())],
        },
    }
    higher = {"assoc": C.assoc, "cmpMor": C.cmp_mor, "leftUnitor": C.left_unitor,
              "rightUnitor": C.right_unitor}
    for name, table in higher.items():
        if table:
            out["witnesses"][name] = [list(k) + [v] for k, v in sorted(table.items())]
    return out


def category_from_json(d, where="$") -> ConcreteCategory:
    if _get(d, "kind", where) != "category":
        raise SchemaError(f"{where}.kind", "expected 'category'")
    n = _get(d, "objects", where, int)
    pool = [groupoid_from_json(g, f"{where}.groupoids[{i}]")
            for i, g in enumerate(_get(d, "groupoids", where, list))]

    def deref(r, w):
        if not isinstance(r, int) or not 0 <= r < len(pool):
            raise SchemaError(w, "bad groupoid reference")
        return pool[r]

    obj_plus = [deref(r, f"{where}.objPlus[{i}]")
                for i, r in enumerate(_get(d, "objPlus", where, list))]
    if len(obj_plus) != n:
        raise SchemaError(f"{where}.objPlus", f"expected {n} entries")
    hom, hom_plus = {}, {}
    for i, h in enumerate(_get(d, "hom", where, list)):
        w = f"{where}.hom[{i}]"
        x, y = _get(h, "src", w, int), _get(h, "tgt", w, int)
        if not (0 <= x < n and 0 <= y < n):
            raise SchemaError(w, "endpoint out of range")
        H = deref(_get(h, "groupoid", w), f"{w}.groupoid")
        hp = _get(h, "homPlus", w)
        fs = [functor_unrank(obj_plus[x], obj_plus[y], r, f"{w}.homPlus.objects[{j}]")
              for j, r in enumerate(_ints(_get(hp, "objects", f"{w}.homPlus", list),
                                          f"{w}.homPlus.objects"))]
        mors = _get(hp, "morphisms", f"{w}.homPlus", list)
        if len(fs) != H.n_objects or len(mors) != H.n_morphisms:
            raise SchemaError(f"{w}.homPlus", "does not cover the hom groupoid")
        alphas = [NatIso(fs[H.src[m]], fs[H.tgt[m]], _ints(c, f"{w}.homPlus.morphisms[{m}]"))
                  for m, c in enumerate(mors)]
        hom[x, y] = H
        hom_plus[x, y] = Realisation(H, obj_plus[x], obj_plus[y], fs, alphas)
    missing = [(x, y) for x, y in product(range(n), repeat=2) if (x, y) not in hom]
    if missing:
        raise SchemaError(f"{where}.hom", f"no entry for {missing[0]}")
    wit = _get(d, "witnesses", where)
    ident = []
    for x, e in enumerate(_get(wit, "ident", f"{where}.witnesses", list)):
        w = f"{where}.witnesses.ident[{x}]"
        c = _get(e, "element", w, int)
        if x >= n or not 0 <= c < hom[x, x].n_objects:
            raise SchemaError(w, "element outside hom")
        F = hom_plus[x, x].objects[c]
        ident.append(FiberElement(c, NatIso(F, identity_functor(obj_plus[x]),
                                            _ints(_get(e, "path", w, list), f"{w}.path"))))
    cmp = {}
    for i, row in enumerate(_get(wit, "cmp", f"{where}.witnesses", list)):
        w = f"{where}.witnesses.cmp[{i}]"
        if not isinstance(row, list) or len(row) != 7:
            raise SchemaError(w, "expected [x, y, z, g, f, element, path]")
        x, y, z, g, f, c = _ints(row[:6], w)
        if not all(0 <= v < n for v in (x, y, z)):
            raise SchemaError(w, "object out of range")
        if not (0 <= g < hom[y, z].n_objects and 0 <= f < hom[x, y].n_objects
                and 0 <= c < hom[x, z].n_objects):
            raise SchemaError(w, "hom element out of range")
        target = compose_functors(hom_plus[y, z].objects[g], hom_plus[x, y].objects[f])
        cmp[x, y, z, g, f] = FiberElement(c, NatIso(hom_plus[x, z].objects[c], target,
                                                    _ints(row[6], f"{w}.path")))
    extra = {}
    for name, arity in (("assoc", 7), ("cmpMor", 5), ("leftUnitor", 3), ("rightUnitor", 3)):
        rows = wit.get(name, [])
        table = {}
        for i, row in enumerate(rows):
            row = _ints(row, f"{where}.witnesses.{name}[{i}]")
            if len(row) != arity + 1:
                raise SchemaError(f"{where}.witnesses.{name}[{i}]", f"expected {arity + 1} integers")
            table[tuple(row[:arity])] = row[arity]
        extra[name] = table
    C = ConcreteCategory(n, obj_plus, hom, hom_plus, ident, cmp, name=d.get("name", ""),
                         notes=tuple(d.get("notes", ())), assoc=extra["assoc"],
                         cmp_mor=extra["cmpMor"], left_unitor=extra["leftUnitor"],
                         right_unitor=extra["rightUnitor"])
    try:
        return C.validate()
    except StructuralValidationError as e:
        raise SchemaError(where, str(e)) from None
