"""Command-line front end: ``python -m concretecat <command> ...``.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on bad input (unreadable file, schema violation, bad parameters, cap).
"""
import argparse
import sys
import time

from . import __version__
from .cocart import check_arrowlike, cocart_uniqueness_check, extract_functor, is_cocartesian_fibration
from .concat import check_univalent, conformity_report
from .config import DEFAULT_CAP, set_cap
from .constructions import (FiniteOneCategory, PointedGroupoid, aks_embed, aks_fixtures,
                            disjoint_union, pointed_category, product, star, two_group_bz2,
                            type_as_category)
from .delta import canonicalize, count_ord, delta_category, parse_term, realize
from .errors import ConcreteCatError
from .fingpd import (bz2, brute_force_functor_count, cyclic, discrete, empty, homotopy_fiber,
                     indiscrete, iter_functors, trivial)
from .finset import FinFun, enumerate_maps
from .freecat import Quiver, free_category, path_count_oracle
from .serialize import (category_from_json, category_to_json, digest, dumps, functor_from_json,
                        functor_rank, groupoid_from_json, groupoid_to_json, loads, quiver_from_json)
from .spans import endo_fiber_analysis


class InputError(Exception):
    pass


def _read_json(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    return loads(text)


_GROUPOIDS = {"one": trivial, "point": trivial, "bz2": bz2, "empty": empty}


def _groupoid_arg(name):
    """A groupoid file, or a builtin: one, bz2, empty, discrete:N, cyclic:N, indiscrete:N."""
    if name in _GROUPOIDS:
        return _GROUPOIDS[name]()
    head, _, n = name.partition(":")
    if head in ("discrete", "cyclic", "indiscrete") and n.isdigit():
        return {"discrete": discrete, "cyclic": cyclic, "indiscrete": indiscrete}[head](int(n))
    return groupoid_from_json(_read_json(name))


def _ints(text):
    try:
        return [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _arrows(text):
    out = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        s, sep, t = part.partition("-")
        if not sep or not s.isdigit() or not t.isdigit():
            raise InputError(f"bad arrow {part!r}; use SRC-TGT")
        out.append((int(s), int(t)))
    return out


# check -------------------------------------------------------------------------------------------


def _witness_json(w):
    if w is None:
        return None
    return {"level": w.level, "point": functor_rank(w.point), "components": w.n_components,
            "automorphisms": w.automorphisms,
            "representatives": [[e, list(p)] for e, p in w.representatives]}


def _law_json(r):
    return {"passed": r.passed, "checked": r.checked, "note": r.note,
            "violations": r.violations[:10], "violation_count": len(r.violations)}


def check_report(C, require=None, univalence=False):
    r = conformity_report(C, require=require)
    out = {
        "category": C.name,
        "objects": C.n_objects,
        "per_pair": [[x, y, lvl] for (x, y), lvl in sorted(r.per_pair.items())],
        "conformity_level": r.conformity_level,
        "minimal_level": r.minimal_level,
        "certified": {str(k): v for k, v in sorted(r.certified.items())},
        "laws": {k: _law_json(v) for k, v in sorted(r.law_status.items())},
        "notes": list(r.notes),
    }
    ok = r.minimal_level is not None if require is None else r.certified[require]
    if require is not None and r.conformity_level > require:
        x, y = r.worst_pair
        out["counterexample"] = {"pair": [x, y], "fiber": _witness_json(r.fiber_witnesses.get((x, y)))}
    if univalence:
        u = check_univalent(C)
        out["univalence"] = {"univalent": u.univalent, "level": u.level, "violations": u.violations}
        ok = ok and u.univalent
    return out, ok


def _text(report):
    lines = []
    for k, v in report.items():
        if k in ("per_pair",):
            lines.append("per-pair levels: " + " ".join(f"({x},{y})={l}" for x, y, l in v))
        elif isinstance(v, dict):
            lines.append(f"{k}:")
            for k2, v2 in v.items():
                lines.append(f"  {k2}: {v2}")
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


def cmd_check(args):
    data = _read_json(args.file)
    C = category_from_json(data)
    body, ok = check_report(C, args.require_level, args.univalence)
    return {"input_digest": digest(data), **body}, ok


# build -------------------------------------------------------------------------------------------


def _load_category(path):
    return category_from_json(_read_json(path))


def _monoid(text):
    rows = [_ints(r) for r in text.split(";")]
    return tuple(tuple(r) for r in rows)


def cmd_build(args):
    kind = args.kind
    if kind == "delta":
        if args.objects is None or args.objects < 0:
            raise InputError("delta needs --objects N >= 0 (objects [0]..[N])")
        C = delta_category(args.objects)
    elif kind == "free":
        if args.quiver:
            Q = quiver_from_json(_read_json(args.quiver))
        else:
            if args.vertices is None:
                raise InputError("free needs --quiver FILE or --vertices N [--arrows 0-1,...]")
            Q = Quiver(args.vertices, _arrows(args.arrows or ""))
        C = free_category(Q)
    elif kind == "aks":
        if args.monoid:
            D = FiniteOneCategory.from_monoid(_monoid(args.monoid), "monoid")
        else:
            names = {D.name: D for D in aks_fixtures()}
            if args.fixture not in names:
                raise InputError(f"aks needs --monoid 'ROW;ROW' or --fixture from {sorted(names)}")
            D = names[args.fixture]
        C = aks_embed(D)
    elif kind == "type":
        C = type_as_category(_groupoid_arg(args.groupoid or "bz2"))
    elif kind == "pointed":
        gs = args.groupoid_list or ["one", "bz2"]
        pts = args.point or [0] * len(gs)
        if len(pts) != len(gs):
            raise InputError("give one --point per --pointed groupoid")
        C, _ = pointed_category([PointedGroupoid(_groupoid_arg(g), p) for g, p in zip(gs, pts)],
                                truncate=args.truncate)
    elif kind in ("union", "product"):
        if not (args.left and args.right):
            raise InputError(f"{kind} needs --left FILE --right FILE")
        L, R = _load_category(args.left), _load_category(args.right)
        C = disjoint_union(L, R) if kind == "union" else product(L, R)
    elif kind == "star":
        C = star()
    elif kind == "two-group":
        C = two_group_bz2(args.associator)
    elif kind == "groupoid":
        return groupoid_to_json(_groupoid_arg(args.groupoid or "one")), True
    else:
        raise InputError(f"unknown builder {kind!r}")
    return category_to_json(C), True


# oracles -----------------------------------------------------------------------------------------


def cmd_oracle(args):
    name = args.name
    if name == "ord-count":
        if args.m is None or args.n is None:
            raise InputError("ord-count needs --m and --n")
        brute = sum(1 for f in enumerate_maps(args.m, args.n) if f.is_monotone)
        return {"oracle": name, "m": args.m, "n": args.n, "monotone_maps": brute,
                "terms": count_ord(args.m, args.n)}, brute == count_ord(args.m, args.n)
    if name == "path-count":
        if args.quiver:
            Q = quiver_from_json(_read_json(args.quiver))
        elif args.vertices is not None:
            Q = Quiver(args.vertices, _arrows(args.arrows or ""))
        else:
            raise InputError("path-count needs --quiver FILE or --vertices N --arrows ...")
        if args.src is None or args.tgt is None:
            raise InputError("path-count needs --src and --tgt")
        C = free_category(Q)
        dp = path_count_oracle(Q, args.src, args.tgt)
        return {"oracle": name, "src": args.src, "tgt": args.tgt, "paths": dp,
                "hom_size": C.hom_size(args.src, args.tgt)}, dp == C.hom_size(args.src, args.tgt)
    if name == "functor-count":
        if not (args.dom and args.cod):
            raise InputError("functor-count needs --dom and --cod")
        X, Y = _groupoid_arg(args.dom), _groupoid_arg(args.cod)
        brute = brute_force_functor_count(X, Y)
        fast = sum(1 for _ in iter_functors(X, Y))
        return {"oracle": name, "functors": brute, "enumerated": fast}, brute == fast
    if name == "fiber-count":
        if not args.functor or args.at is None:
            raise InputError("fiber-count needs --functor FILE --at OBJECT")
        F = functor_from_json(_read_json(args.functor))
        fib = homotopy_fiber(F, args.at)
        brute = sum(len(F.cod.hom(F.obj_map[g], args.at)) for g in F.dom.objects)
        return {"oracle": name, "at": args.at, "fiber_objects": brute,
                "fiber_components": len(fib.components())}, brute == fib.n_objects
    raise InputError(f"unknown oracle {name!r}")


# delta, spans, cocart -----------------------------------------------------------------------------


def cmd_delta(args):
    if args.term:
        t = parse_term(args.term)
        return {"term": str(t), "m": t.m, "n": t.n, "table": list(realize(t).table)}, True
    if args.table is not None:
        if args.cod is None:
            raise InputError("--table needs --cod")
        f = FinFun(len(_ints(args.table)), args.cod, _ints(args.table))
        return {"table": list(f.table), "cod": args.cod, "term": str(canonicalize(f))}, True
    if args.count:
        m, n = args.count
        return {"m": m, "n": n, "count": count_ord(m, n)}, True
    raise InputError("delta needs --term, --table or --count")


def cmd_spans(args):
    r = endo_fiber_analysis(args.endo_fiber, args.universe)
    return {"apex": r.u_size, "universe_max": r.universe_max, "count": r.count,
            "closed_form": r.closed_form,
            "witnesses": [[list(c) for c in w.path.components] for w in r.witnesses],
            "has_swap": r.swap_witness is not None, "caveat": r.caveat}, r.count == r.closed_form


def cmd_cocart(args):
    C = _load_category(args.file)
    part = tuple(args.partition.upper())
    AC = check_arrowlike(C, part)
    ok, found = is_cocartesian_fibration(AC)
    out = {"fibration": ok,
           "cocartesian": {str(a): [[w.b, w.f] for w in ws] for a, ws in sorted(found.items())}}
    if ok:
        E = extract_functor(AC)
        out["functor"] = {"objects": list(E.functor.obj_map),
                          "morphisms": [[list(k), list(v)] for k, v in E.functor.mor_map]}
    u = cocart_uniqueness_check(AC)
    out["uniqueness"] = {"refused": u.refused, "passed": u.passed, "explanation": u.explanation,
                         "mediators": u.mediators}
    return out, ok and (u.refused or u.passed)


# entry point -------------------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="concretecat", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap")
    common.add_argument("--report", choices=["text", "json"], default="json")
    common.add_argument("--seed", type=int, default=0, help="accepted for compatibility; unused")
    common.add_argument("-o", "--output", help="write the result here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="certify a category file")
    c.add_argument("file")
    c.add_argument("--require-level", type=int, choices=range(0, 4))
    c.add_argument("--univalence", action="store_true")

    b = sub.add_parser("build", parents=[common], help="emit a category file")
    b.add_argument("kind", choices=["delta", "free", "aks", "type", "pointed", "union", "product",
                                    "star", "two-group", "groupoid"])
    b.add_argument("--objects", type=int)
    b.add_argument("--quiver")
    b.add_argument("--vertices", type=int)
    b.add_argument("--arrows")
    b.add_argument("--monoid", help="multiplication table, rows separated by ';'")
    b.add_argument("--fixture")
    b.add_argument("--groupoid", help="file or builtin (one, bz2, empty, discrete:N, cyclic:N)")
    b.add_argument("--pointed", dest="groupoid_list", action="append",
                   help="groupoid for a pointed object; repeat")
    b.add_argument("--point", type=int, action="append")
    b.add_argument("--truncate", type=int, choices=[-1])
    b.add_argument("--left")
    b.add_argument("--right")
    b.add_argument("--associator", type=int, default=0)

    o = sub.add_parser("oracle", parents=[common], help="run a brute-force oracle")
    o.add_argument("name", choices=["ord-count", "path-count", "functor-count", "fiber-count"])
    o.add_argument("--m", type=int)
    o.add_argument("--n", type=int)
    o.add_argument("--quiver")
    o.add_argument("--vertices", type=int)
    o.add_argument("--arrows")
    o.add_argument("--src", type=int)
    o.add_argument("--tgt", type=int)
    o.add_argument("--dom")
    o.add_argument("--cod")
    o.add_argument("--functor")
    o.add_argument("--at", type=int)

    d = sub.add_parser("delta", parents=[common], help="Ord terms and monotone maps")
    d.add_argument("--term")
    d.add_argument("--table")
    d.add_argument("--cod", type=int)
    d.add_argument("--count", type=int, nargs=2, metavar=("M", "N"))

    s = sub.add_parser("spans", parents=[common], help="fiber of the pull-push realisation")
    s.add_argument("--endo-fiber", type=int, required=True, metavar="U")
    s.add_argument("--universe", type=int, default=2)

    k = sub.add_parser("cocart", parents=[common], help="cocartesian analysis of a category file")
    k.add_argument("file")
    k.add_argument("--partition", required=True, help="one letter A or B per object, e.g. AAB")
    return p


_COMMANDS = {"check": cmd_check, "build": cmd_build, "oracle": cmd_oracle, "delta": cmd_delta,
             "spans": cmd_spans, "cocart": cmd_cocart}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        set_cap(args.cap)
        start = time.perf_counter()
        result, ok = _COMMANDS[args.command](args)
        elapsed = time.perf_counter() - start
    except (InputError, ConcreteCatError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.command == "build":
        text = dumps(result)
    else:
        result = {"tool": "concretecat", "version": __version__, "command": args.command,
                  "verdict": "pass" if ok else "fail", **result,
                  "timing": {"seconds": round(elapsed, 6)}}
        text = dumps(result, pretty=True) if args.report == "json" else _text(result)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def strip_timing(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing"}


if __name__ == "__main__":
    sys.exit(main())
