import json
import subprocess
import sys

import pytest

from concretecat.cli import main, strip_timing
from concretecat.concat import conformity_report
from concretecat.constructions import (PointedGroupoid, aks_embed, aks_fixtures, disjoint_union,
                                       pointed_category, product, star, two_group_bz2,
                                       type_as_category)
from concretecat.delta import delta_category
from concretecat.errors import SchemaError
from concretecat.fingpd import bz2, coproduct, discrete, indiscrete, iter_functors, trivial
from concretecat.freecat import Quiver, free_category
from concretecat.serialize import (category_from_json, category_to_json, dumps, functor_rank,
                                   functor_to_json, functor_unrank, groupoid_from_json,
                                   groupoid_to_json, loads)


def builders():
    yield "delta2", delta_category(2)
    yield "free", free_category(Quiver(3, [(0, 1), (1, 2), (0, 2)]))
    yield "aks", aks_embed(aks_fixtures()[6])
    yield "type", type_as_category(bz2())
    yield "pointed", pointed_category([PointedGroupoid(trivial(), 0), PointedGroupoid(bz2(), 0)])[0]
    yield "union", disjoint_union(star(), star())
    yield "product", product(delta_category(1), star())
    yield "two-group", two_group_bz2(1)


@pytest.mark.parametrize("name,C", list(builders()), ids=lambda v: v if isinstance(v, str) else "")
def test_category_round_trip(name, C):
    text = dumps(category_to_json(C))
    D = category_from_json(loads(text))
    assert dumps(category_to_json(D)) == text
    r, s = conformity_report(C), conformity_report(D)
    assert (r.per_pair, r.minimal_level, r.notes) == (s.per_pair, s.minimal_level, s.notes)


def test_groupoid_round_trip():
    for G in (bz2(), indiscrete(3), coproduct(bz2(), discrete(2))):
        H = groupoid_from_json(loads(dumps(groupoid_to_json(G))))
        assert groupoid_to_json(H) == groupoid_to_json(G)


def test_functor_rank_is_enumeration_order():
    for X, Y in [(discrete(2), indiscrete(2)), (bz2(), coproduct(bz2(), trivial())), (discrete(3), bz2())]:
        for i, F in enumerate(iter_functors(X, Y)):
            assert functor_rank(F) == i
            assert functor_unrank(X, Y, i).key == F.key


def test_malformed_json_reports_position():
    with pytest.raises(SchemaError) as e:
        loads('{"kind": "category",\n  "objects": }')
    assert "line 2" in str(e.value)


def test_schema_error_names_the_path():
    d = category_to_json(delta_category(1))
    d["hom"][0]["src"] = "zero"
    with pytest.raises(SchemaError) as e:
        category_from_json(d)
    assert "hom" in str(e.value)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_build_and_check_delta(tmp_path, capsys):
    f = tmp_path / "delta3.json"
    assert main(["build", "delta", "--objects", "3", "-o", str(f)]) == 0
    code, out = run(capsys, "check", str(f), "--require-level", "1")
    report = json.loads(out)
    assert code == 0 and report["verdict"] == "pass" and report["certified"]["1"]


def test_check_pointed_fails_at_level_one(tmp_path, capsys):
    f = tmp_path / "pointed.json"
    main(["build", "pointed", "-o", str(f)])
    code, out = run(capsys, "check", str(f), "--require-level", "1")
    report = json.loads(out)
    assert code == 1 and report["verdict"] == "fail"
    assert report["counterexample"]["pair"] == [0, 1]
    assert report["counterexample"]["fiber"]["components"] == 2


def test_exit_code_two_on_bad_input(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    assert main(["check", str(f)]) == 2
    assert "line 1" in capsys.readouterr().err
    assert main(["build", "delta"]) == 2
    assert main(["build", "free", "--vertices", "2", "--arrows", "0-1,1-0"]) == 2


def test_cap_overflow_exits_two(capsys):
    assert main(["oracle", "ord-count", "--m", "6", "--n", "6", "--cap", "10"]) == 2


def test_oracles(capsys):
    code, out = run(capsys, "oracle", "ord-count", "--m", "4", "--n", "4")
    assert code == 0 and json.loads(out)["terms"] == 35
    code, out = run(capsys, "oracle", "functor-count", "--dom", "one", "--cod", "bz2")
    assert code == 0 and json.loads(out)["functors"] == 1
    code, out = run(capsys, "oracle", "path-count", "--vertices", "3", "--arrows", "0-1,1-2,0-2",
                    "--src", "0", "--tgt", "2")
    assert code == 0 and json.loads(out)["paths"] == 2


def test_delta_subcommand(capsys):
    code, out = run(capsys, "delta", "--table", "0,1", "--cod", "2")
    assert json.loads(out)["term"] == "Sl(Sr(Sl(Sr(Z))))"
    code, out = run(capsys, "delta", "--term", "Sl(Sr(Sl(Sr(Z))))")
    assert json.loads(out)["table"] == [0, 1]


def test_spans_subcommand(capsys):
    code, out = run(capsys, "spans", "--endo-fiber", "2", "--universe", "2")
    r = json.loads(out)
    assert code == 0 and r["count"] == 48 and r["has_swap"]


def test_cocart_subcommand(tmp_path, capsys):
    f = tmp_path / "arrow.json"
    main(["build", "free", "--vertices", "2", "--arrows", "0-1", "-o", str(f)])
    code, out = run(capsys, "cocart", str(f), "--partition", "AB")
    r = json.loads(out)
    assert code == 0 and r["fibration"] and r["functor"]["objects"] == [0]
    assert main(["cocart", str(f), "--partition", "BA"]) == 2


def test_text_report(tmp_path, capsys):
    f = tmp_path / "star.json"
    main(["build", "star", "-o", str(f)])
    code, out = run(capsys, "check", str(f), "--report", "text")
    assert code == 0 and "minimal_level: 0" in out


def test_reports_are_deterministic(tmp_path):
    f = tmp_path / "aks.json"
    main(["build", "aks", "--monoid", "0,1;1,0", "-o", str(f)])
    runs = [subprocess.run([sys.executable, "-m", "concretecat", "check", str(f), "--univalence"],
                           capture_output=True, text=True, check=False) for _ in range(2)]
    a, b = (strip_timing(json.loads(r.stdout)) for r in runs)
    assert dumps(a) == dumps(b)


def test_union_and_product_from_files(tmp_path, capsys):
    star_f, d1 = tmp_path / "star.json", tmp_path / "delta1.json"
    main(["build", "star", "-o", str(star_f)])
    main(["build", "delta", "--objects", "1", "-o", str(d1)])
    for kind, left, want in [("union", star_f, 1), ("product", d1, 1)]:
        out = tmp_path / f"{kind}.json"
        assert main(["build", kind, "--left", str(left), "--right", str(left), "-o", str(out)]) == 0
        code, text = run(capsys, "check", str(out), "--require-level", "1")
        assert code == 0 and json.loads(text)["minimal_level"] == want


def test_oracles_on_files(tmp_path, capsys):
    one, b = tmp_path / "one.json", tmp_path / "bz2.json"
    main(["build", "groupoid", "--groupoid", "one", "-o", str(one)])
    main(["build", "groupoid", "--groupoid", "bz2", "-o", str(b)])
    code, out = run(capsys, "oracle", "functor-count", "--dom", str(one), "--cod", str(b))
    assert code == 0 and json.loads(out)["functors"] == 1
    F = next(iter_functors(bz2(), trivial()))
    f = tmp_path / "f.json"
    f.write_text(dumps(functor_to_json(F)))
    code, out = run(capsys, "oracle", "fiber-count", "--functor", str(f), "--at", "0")
    r = json.loads(out)
    assert code == 0 and r["fiber_objects"] == 1 and r["fiber_components"] == 1
