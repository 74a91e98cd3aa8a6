import json

import pytest
from hypothesis import given, strategies as st

from rootpoly import cli
from rootpoly.corpus import SIX_VERTEX, directed_cycle, two_vertex
from rootpoly.digraph import Digraph, format_digraph
from rootpoly.polynomial import Polynomial


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return {
        "six": write("six.txt", format_digraph(SIX_VERTEX)),
        "c3": write("c3.txt", format_digraph(directed_cycle(3))),
        "tv": write("tv.txt", format_digraph(two_vertex(2))),
        "ne": write("ne.txt", "digraph 3 3\n1 2\n2 3\n1 3\n"),
        "bad": write("bad.txt", "digraph 2 2\n1 2\n2 x\n"),
        "mat": write("m.txt", "matrix 2 4\n1 0 1 -1\n0 1 -1 1\n"),
        "notu": write("notu.txt", "matrix 2 2\n2 1\n1 1\n"),
    }


def run_json(capsys, *argv):
    code = cli.main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_check_six_vertex(files, capsys):
    code, rep = run_json(capsys, "check", files["six"])
    assert code == 0
    assert rep["info"]["eulerian"] is True
    assert rep["info"]["dual_rank"] == 4
    assert rep["info"]["polytope_dimension"] == 3


def test_check_non_eulerian(files, capsys):
    code, rep = run_json(capsys, "check", files["ne"])
    assert code == 0
    assert rep["info"]["eulerian"] is False
    assert rep["info"]["hstar_available"] is False
    assert cli.main(["hstar", files["ne"]]) == cli.EXIT_INPUT
    assert cli.main(["lambda", files["ne"], "--method", "hstar_ehrhart"]) == cli.EXIT_INPUT


def test_parse_error_names_line(files, capsys):
    assert cli.main(["check", files["bad"]]) == cli.EXIT_INPUT
    assert "line 3" in capsys.readouterr().err


def test_missing_file(tmp_path, capsys):
    assert cli.main(["check", str(tmp_path / "nope.txt")]) == cli.EXIT_INPUT


def test_lambda_three_cycle(files, capsys):
    code, rep = run_json(capsys, "lambda", files["c3"])
    assert code == 0
    assert set(rep["polynomials"]) == set(cli.gd.METHODS)
    assert all(v == ["0", "1"] for v in rep["polynomials"].values())
    assert rep["verdicts"] == [{"name": "agreement", "passed": True, "witness": None}]


def test_lambda_two_vertex_text(files, capsys):
    assert cli.main(["lambda", files["tv"]]) == 0
    out = capsys.readouterr().out
    assert "t^3 + t^2" in out and "PASS agreement" in out


def test_lambda_all_roots(files, capsys):
    code, rep = run_json(capsys, "lambda", files["six"], "--root", "all", "--method", "activity")
    assert code == 0
    assert len(rep["polynomials"]) == 6
    assert len({tuple(v) for v in rep["polynomials"].values()}) == 1


def test_lambda_bad_method_and_root(files):
    assert cli.main(["lambda", files["c3"], "--method", "nope"]) == cli.EXIT_INPUT
    assert cli.main(["lambda", files["c3"], "--root", "9"]) == cli.EXIT_INPUT


def test_scale_cap_exit(files, capsys):
    assert cli.main(["ehrhart", files["six"], "--max-box", "5"]) == cli.EXIT_CAP
    assert "scale cap" in capsys.readouterr().err


def test_verify_passes(files, capsys):
    code, rep = run_json(capsys, "verify", files["six"])
    assert code == 0
    assert all(v["passed"] for v in rep["verdicts"])
    assert rep["polynomials"]["lambda"] == rep["polynomials"]["lambda_reversed"]


@pytest.mark.parametrize("kind, needle", [("drop", "normalized volume"),
                                          ("swap", "do not meet in a common face")])
def test_verify_mutation_fails(files, capsys, kind, needle):
    code, rep = run_json(capsys, "verify", files["six"], "--mutate", kind)
    assert code == cli.EXIT_FAIL
    failed = [v for v in rep["verdicts"] if not v["passed"]]
    assert failed and needle in failed[0]["witness"]


def test_hstar_routes(files, capsys):
    code, rep = run_json(capsys, "hstar", files["six"])
    assert code == 0
    assert all(v == ["1", "2"] for v in rep["polynomials"].values())


def test_matrix_input(files, capsys):
    code, rep = run_json(capsys, "ehrhart", files["mat"])
    assert code == 0
    assert rep["polynomials"]["ehrhart"] == ["1", "5/2", "3/2"]
    assert rep["info"]["counts"][:2] == [1, 5]
    assert cli.main(["hstar", files["mat"], "--method", "triangulation"]) == cli.EXIT_INPUT
    assert cli.main(["check", files["notu"]]) == cli.EXIT_INPUT


def test_gen_corpus_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    assert cli.main(["gen-corpus", str(a), "--seed", "11", "--count", "8"]) == 0
    assert cli.main(["gen-corpus", str(b), "--seed", "11", "--count", "8"]) == 0
    fa = sorted(p.name for p in a.iterdir())
    assert fa == sorted(p.name for p in b.iterdir())
    assert all((a / f).read_bytes() == (b / f).read_bytes() for f in fa)
    for name in ("cycle2", "cycle5", "twovertex2", "twovertex6", "sixvertex"):
        assert f"{name}.txt" in fa


def test_seed_range():
    with pytest.raises(SystemExit):
        cli.main(["gen-corpus", "x", "--seed", str(1 << 64)])


@given(st.dictionaries(st.sampled_from(["a", "b", "c"]),
                       st.lists(st.integers(-10**25, 10**25), max_size=5)),
       st.lists(st.tuples(st.text(max_size=8), st.booleans())),
       st.floats(0, 100))
def test_report_roundtrip(polys, verdicts, secs):
    rep = cli.RunReport("lambda", "x.txt", {k: Polynomial(v) for k, v in polys.items()},
                        [cli.Verdict(n, ok, None if ok else "w") for n, ok in verdicts],
                        {"n": 3, "eulerian": True}, secs)
    assert cli.RunReport.loads(rep.dumps()) == rep
