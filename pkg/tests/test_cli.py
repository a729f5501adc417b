import json

import pytest

from munarini import cli
from munarini import graphs as gr
from munarini import hypercube_analysis as ha
from munarini import polynomials as pl
from munarini import strings as st


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def csv_rows(text):
    return [tuple(int(x) for x in line.split(",")) for line in text.splitlines()[1:]]


# -- examples -----------------------------------------------------------------

def test_gen_json(capsys):
    code, out, _ = run(capsys, "gen", "--family", "munarini", "-n", "2", "-k", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert len(data["vertices"]) == 10 and len(data["edges"]) == 13


def test_gen_star_edgelist(capsys):
    code, out, _ = run(capsys, "gen", "--family", "star", "-k", "4", "--format", "edgelist")
    assert code == 0 and len(out.splitlines()) == 3


def test_gen_dot(capsys):
    code, out, _ = run(capsys, "gen", "--family", "munarini", "-n", "2", "-k", "3", "--format", "dot")
    assert code == 0
    assert out.startswith("graph munarini_2_3 {") and out.rstrip().endswith("}")
    assert out.count(" -- ") == 13


@pytest.mark.parametrize("argv", [
    ["gen", "--family", "genpell", "-n", "1", "-k", "1"],
    ["gen", "--family", "munarini", "-n", "-1", "-k", "2"],
    ["gen", "--family", "munarini", "-n", "2", "-k", "0"],
    ["poly", "maxcube", "-n", "3", "-k", "1"],
    ["gen", "--family", "nope"],
    ["frobnicate"],
    ["gen", "--family", "munarini", "-n", "2", "-k", "2", "--format", "csv"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


@pytest.mark.parametrize("argv,expected", [
    (["poly", "weight", "-n", "2", "-k", "3"], "1 + 5*x + 4*x^2\n"),
    (["poly", "qnum", "-k", "2", "-N", "4"], "1 3 11 39 139\n"),
    (["poly", "maxcube", "-n", "1", "-k", "5"], "4*x\n"),
    (["poly", "cube", "-n", "2", "-k", "3"], "10 + 13*x + 4*x^2\n"),
    (["poly", "qnum", "-n", "3", "-k", "3"], "145\n"),
])
def test_poly_examples(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_poly_csv_and_json(capsys):
    code, out, _ = run(capsys, "poly", "cube", "-n", "2", "-k", "3", "--format", "csv")
    assert code == 0 and csv_rows(out) == [(2, 3, 0, 10), (2, 3, 1, 13), (2, 3, 2, 4)]
    code, out, _ = run(capsys, "poly", "dcube", "-n", "2", "-k", "3", "--format", "csv")
    assert (2, 3, 1, 1, 8) in csv_rows(out)
    code, out, _ = run(capsys, "poly", "weight", "-k", "2", "-N", "2", "--format", "json")
    assert [d["value"] for d in json.loads(out)] == ["1", "1 + x", "1 + 3*x + x^2"]


def test_census_examples(capsys):
    _, out, _ = run(capsys, "census", "cubes", "--family", "munarini", "-n", "2", "-k", "3")
    assert csv_rows(out) == [(0, 10), (1, 13), (2, 4)]
    _, out, _ = run(capsys, "census", "maxcubes", "--family", "munarini", "-n", "3", "-k", "2")
    assert csv_rows(out) == [(2, 2), (3, 1)]
    _, out, _ = run(capsys, "census", "dcubes", "--family", "munarini", "-n", "0", "-k", "1")
    assert csv_rows(out) == [(0, 0, 1)]
    code, out, _ = run(capsys, "census", "cubes", "--family", "genpell", "-n", "2", "-k", "3", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 27


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "all", "--n-max", "5", "--k-max", "3")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "identities", "--n-max", "0", "--k-max", "1")
    assert code == 0


def test_verify_reports_genpell_not_daisy(capsys):
    code, out, _ = run(capsys, "verify", "daisy", "--family", "genpell", "-n", "2", "-k", "3")
    assert code == 1
    line = next(l for l in out.splitlines() if "daisy" in l)
    assert line.startswith("FAIL") and "[" in line
    code, _, _ = run(capsys, "verify", "daisy", "--family", "munarini", "-n", "3", "-k", "3")
    assert code == 0


def test_export(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--family", "munarini", "-n", "2", "-k", "2")
    data = json.loads(out)
    assert code == 0 and data["m"] == 4 and "0000" in data["labels"]
    code, out, _ = run(capsys, "export", "cubes", "--family", "munarini", "-n", "2", "-k", "3")
    assert len(json.loads(out)) == 27


# -- invariants ---------------------------------------------------------------

@pytest.mark.parametrize("family,n,k", [("munarini", 3, 3), ("genpell", 3, 2), ("fibonacci", 4, 1), ("hypercube", 3, 1)])
def test_json_round_trip(capsys, family, n, k):
    _, out, _ = run(capsys, "gen", "--family", family, "-n", str(n), "-k", str(k), "--format", "json")
    G = gr.from_json(out)
    assert G == gr.build(family, n, k)
    assert G.keys == gr.build(family, n, k).keys


@pytest.mark.parametrize("argv", [
    ["gen", "--family", "munarini", "-n", "3", "-k", "3", "--format", "dot"],
    ["census", "dcubes", "--family", "genpell", "-n", "3", "-k", "3"],
    ["export", "--family", "genpell", "-n", "3", "-k", "2"],
    ["poly", "dcube", "-k", "3", "-N", "4"],
])
def test_byte_determinism(capsys, argv):
    outs = {run(capsys, *argv)[1] for _ in range(3)}
    assert len(outs) == 1


def test_output_file(capsys, tmp_path):
    path = tmp_path / "g.json"
    code, out, _ = run(capsys, "gen", "--family", "munarini", "-n", "2", "-k", "2", "--format", "json", "-o", str(path))
    assert code == 0 and out == ""
    assert gr.from_json(path.read_text()) == gr.build_munarini(2, 2)


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"family": "munarini", "n": 2, "k": 3, "which": "cubes"}))
    code, out, _ = run(capsys, "census", "--config", str(cfg))
    assert code == 0 and csv_rows(out) == [(0, 10), (1, 13), (2, 4)]
    # flags override the file
    code, out, _ = run(capsys, "census", "--config", str(cfg), "-n", "1")
    assert csv_rows(out) == [(0, 3), (1, 2)]
    cfg.write_text(json.dumps({"bogus": 1}))
    assert run(capsys, "census", "--config", str(cfg))[0] == 2
    assert run(capsys, "census", "--config", str(tmp_path / "missing.json"))[0] == 2


def test_vertex_cap(capsys, monkeypatch):
    monkeypatch.setenv(cli.MAX_VERTICES_ENV, "50")
    code, _, err = run(capsys, "gen", "--family", "munarini", "-n", "4", "-k", "3")
    assert code == 2 and "cap" in err
    assert run(capsys, "gen", "--family", "munarini", "-n", "2", "-k", "3")[0] == 0
    monkeypatch.setenv(cli.MAX_VERTICES_ENV, "lots")
    assert run(capsys, "gen", "--family", "munarini", "-n", "2", "-k", "3")[0] == 2
    monkeypatch.delenv(cli.MAX_VERTICES_ENV)
    assert cli.vertex_cap() == cli.DEFAULT_MAX_VERTICES


PUBLIC_OPS = {
    st: ["enumerate_pell_strings", "is_pell_string", "encode_psi", "decode_psi", "weight",
         "enumerate_maximal_strings", "count_ank_words"],
    gr: ["build_munarini", "build_generalized_pell", "build_fibonacci_cube", "decompose_munarini",
         "iso_to_fibonacci", "bfs_distances", "count_edges_closed_form"],
    ha: ["check_isometric", "check_daisy", "check_median_closed", "enumerate_cubes",
         "enumerate_maximal_cubes", "distance_cube_census", "median"],
    pl: ["expand_series", "weight_poly", "cube_poly", "distance_cube_poly", "maximal_cube_poly",
         "cube_number", "total_weight", "fib_k", "max_degree_witness"],
    cli: ["cmd_verify"],
}


def test_verify_all_covers_every_public_op(capsys, monkeypatch):
    called = set()

    def spy(mod, name):
        fn = getattr(mod, name)

        def wrapper(*a, **kw):
            called.add(name)
            return fn(*a, **kw)
        return wrapper

    for mod, names in PUBLIC_OPS.items():
        for name in names:
            monkeypatch.setitem(cli._DISPATCH, name[4:], spy(mod, name)) if mod is cli else \
                monkeypatch.setattr(mod, name, spy(mod, name))
    assert cli.main(["verify", "all", "--n-max", "5", "--k-max", "3"]) == 0
    capsys.readouterr()
    expected = {n for names in PUBLIC_OPS.values() for n in names}
    assert expected - called == set()
