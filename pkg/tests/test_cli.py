import io

import pytest

from mimicnet.cli import run_cli
from mimicnet.io import read_graph, write_graph


def run(*argv):
    out = io.StringIO()
    code = run_cli(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def gfile(tmp_path, path_graph):
    p = tmp_path / "g.graph"
    write_graph(path_graph, p)
    return str(p)


def test_mincut(gfile):
    code, out = run("mincut", "--graph", gfile, "--side", "a,b")
    assert code == 0
    assert "value 2/1" in out and "unique yes" in out
    code, out = run("mincut", "--graph", gfile, "--side", "a")
    assert "value 3/1" in out and "unique no" in out


def test_profile(gfile):
    code, out = run("profile", "--graph", gfile, "--uniqueness")
    assert code == 0
    assert out.splitlines()[0] == "{a}|{b,c} 3/1 non-unique"
    assert out.splitlines()[-1] == "unique minimum cuts: 2/3"


def test_compress_then_validate(gfile, tmp_path):
    small = tmp_path / "small.graph"
    code, out = run("compress", "--graph", gfile, "--out", str(small))
    assert code == 0 and "vertices 5 -> 4" in out
    assert read_graph(small).n == 4
    code, out = run("validate", "--original", gfile, "--compressed", str(small))
    assert code == 0 and "result: PASS" in out


def test_validate_failure_exit_code(gfile, tmp_path):
    bad = tmp_path / "bad.graph"
    from mimicnet.graph import TerminalGraph

    write_graph(TerminalGraph.from_edges([("a", "b", 1), ("b", "c", 1)], ["a", "b", "c"]), bad)
    code, out = run("validate", "--original", gfile, "--compressed", str(bad))
    assert code == 1 and "result: FAIL" in out


def test_rank(gfile, tmp_path, capsys):
    dump = tmp_path / "m.txt"
    code, out = run("rank", "--graph", gfile, "--dump", str(dump))
    assert code == 0
    assert "incidence matrix 2x4" in out and "rank 2" in out
    assert "warning: dropped 1 rows" in capsys.readouterr().err
    assert dump.read_text().startswith("2 4\n")
    assert run("rank", "--graph", gfile, "--rows", "all", "--strict")[0] == 2


def test_gen_and_verify_planar(tmp_path):
    d = str(tmp_path / "k4")
    code, out = run("gen", "planar", "--k", "4", "--out", d)
    assert code == 0 and "C=18" in out
    for check in ("structure", "claim-paths", "unique-cycles", "identity-submatrix"):
        code, out = run("verify", check, "--instance", d)
        assert code == 0, out
        assert "[k=4]" in out
    assert run("verify", "side-assignment", "--instance", d)[0] == 2


def test_gen_dblexp_errors(tmp_path):
    assert run("gen", "dblexp", "--r", "3", "--out", str(tmp_path / "x"))[0] == 2
    assert run("gen", "dblexp", "--r", "2", "--alpha", "1.5", "--out", str(tmp_path / "x"))[0] == 2
    assert run("gen", "dblexp", "--r", "6", "--out", str(tmp_path / "x"))[0] == 2


def test_export(tmp_path, gfile):
    d = str(tmp_path / "k3")
    run("gen", "planar", "--k", "3", "--out", d)
    code, out = run("export", "dot", "--instance", d, "--which", "dual")
    assert code == 0 and out.startswith('graph "dual_k3"')
    target = tmp_path / "g.dot"
    assert run("export", "dot", "--graph", gfile, "--out", str(target))[0] == 0
    assert target.read_text().startswith('graph "G"')
    assert run("export", "dot")[0] == 2


def test_usage_errors(gfile, tmp_path):
    assert run()[0] == 2
    assert run("nosuch")[0] == 2
    assert run("mincut", "--graph", gfile, "--side", "zz")[0] == 2
    assert run("mincut", "--graph", str(tmp_path / "missing"), "--side", "a")[0] == 2
    bad = tmp_path / "bad.graph"
    bad.write_text("mimicnet-graph 1\nterminals a b\nvertex a\nvertex b\nedge a b 3\n")
    assert run("profile", "--graph", str(bad))[0] == 2


def test_output_is_deterministic(tmp_path):
    d1, d2 = tmp_path / "a", tmp_path / "b"
    run("gen", "planar", "--k", "5", "--out", str(d1))
    run("gen", "planar", "--k", "5", "--out", str(d2))
    for name in ("dual.graph", "primal.graph", "meta"):
        assert (d1 / name).read_bytes() == (d2 / name).read_bytes()
    assert run("profile", "--graph", str(d1 / "primal.graph")) == run(
        "profile", "--graph", str(d2 / "primal.graph"), "--jobs", "2"
    )
