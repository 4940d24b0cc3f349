import io
import json
import os

import pytest

from equihom import characters
from equihom.cli import make_parser, run
from equihom.complexes import SimplicialComplex, matching_complex


def invoke(argv):
    buf = io.StringIO()
    code = run(argv, out=buf)
    return code, buf.getvalue()


def test_formula_fp_text():
    code, out = invoke(["formula", "fp", "--p", "3", "--format", "text"])
    assert code == 0
    assert out.strip() == "s[3]"


def test_formula_json_schema():
    code, out = invoke(["formula", "odd-parts", "--k", "2", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "schur"
    assert data["degree"] == 7
    assert {tuple(t["partition"]) for t in data["terms"]} == {(5, 1, 1), (3, 3, 1)}
    assert all(t["coeff"] == "1" for t in data["terms"])


def test_verify_table_passes():
    code, out = invoke(["verify-table"])
    assert code == 0
    assert out.strip().endswith("12/12 rows match")


def test_equivariant_json():
    code, out = invoke(
        ["equivariant", "--complex", "matching", "--p", "3", "--n", "4",
         "--degree", "0", "--format", "json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["degrees"] == [
        {"i": 0, "betti": 3, "specht": [{"partition": [3, 1], "mult": 1}]}
    ]


def test_homology_output():
    code, out = invoke(["homology", "--complex", "matching", "--p", "2", "--n", "5"])
    assert code == 0
    assert "b~_1 = 6" in out


def test_build_and_dump():
    code, out = invoke(["build", "--complex", "pcycle", "--p", "5", "--n", "5"])
    assert code == 0 and "(1, 6)" in out
    code, out = invoke(["dump", "--complex", "matching", "--p", "3", "--n", "4"])
    assert code == 0
    cx = SimplicialComplex.from_text(out)
    assert cx.f_vector() == matching_complex(3, 4).f_vector()


def test_dump_boundary_matrix():
    code, out = invoke(
        ["dump", "--complex", "matching", "--p", "2", "--n", "4", "--boundary", "1"]
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "6 3"
    triples = [tuple(int(x) for x in line.split()) for line in lines[1:]]
    assert len(triples) == 6  # three disjoint edges, two endpoints each
    assert all(v in (-1, 1) for _, _, v in triples)
    code, _ = invoke(
        ["dump", "--complex", "matching", "--p", "2", "--n", "4", "--boundary", "9"]
    )
    assert code == 2


def test_verify_conjecture_small():
    code, out = invoke(["verify-conjecture", "--p", "2", "--k", "2"])
    assert code == 0 and "equals the prediction" in out
    code, out = invoke(["verify-conjecture", "--p", "3", "--k", "1"])
    assert code == 0
    code, out = invoke(["verify-conjecture", "--p", "5", "--k", "2"])
    assert code == 0 and "equals the prediction" in out


def test_cross_check_quick():
    code, out = invoke(["cross-check", "--quick"])
    assert code == 0
    assert out.strip().endswith("all cross-checks passed")
    assert "FAIL" not in out


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        run(["homology", "--complex", "nosuch", "--p", "3", "--n", "4"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["nosuch-command"])
    assert exc.value.code == 2
    # domain errors are reported as usage problems, not tracebacks
    code, _ = invoke(["build", "--complex", "pcycle", "--p", "4", "--n", "6"])
    assert code == 2


def test_size_guard_requires_allow_large():
    code, _ = invoke(["build", "--complex", "quillen", "--p", "3", "--n", "10"])
    assert code == 2


def test_determinism_and_thread_invariance():
    base = None
    for threads in ("1", "4", "16"):
        code, out = invoke(
            ["--threads", threads, "equivariant", "--complex", "matching",
             "--p", "3", "--n", "7", "--format", "json"]
        )
        assert code == 0
        if base is None:
            base = out
        assert out == base
    again = invoke(
        ["--threads", "1", "equivariant", "--complex", "matching",
         "--p", "3", "--n", "7", "--format", "json"]
    )[1]
    assert again == base


def test_cache_dir_round_trip(tmp_path):
    argv = ["--cache-dir", str(tmp_path), "equivariant", "--complex", "quillen",
            "--p", "3", "--n", "5", "--format", "json"]
    code, first = invoke(argv)
    assert code == 0
    names = os.listdir(tmp_path)
    assert any(n.startswith("quillen") for n in names)
    code, second = invoke(argv)
    assert code == 0 and second == first
    # corrupt complex cache entries are rebuilt
    for n in names:
        if n.startswith("quillen"):
            (tmp_path / n).write_text("garbage")
    code, third = invoke(argv)
    assert code == 0 and third == first
    characters.set_cache_dir(None)


def test_parser_prog_name():
    parser = make_parser()
    assert parser.prog == "equihom"
