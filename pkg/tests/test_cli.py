import json

import pytest

from embsum.cli import main
from embsum.curvefile import load_curvefile, save_curvefile
from embsum.torus import geodesic_curve


@pytest.fixture
def pair_file(tmp_path):
    path = tmp_path / "pair.json"
    save_curvefile([geodesic_curve((1, 2), ident="c1"),
                    geodesic_curve((2, 1), base=(0.31, 0.17), ident="c2")],
                   path)
    return str(path)


@pytest.fixture
def overlap_file(tmp_path):
    path = tmp_path / "overlap.json"
    save_curvefile([geodesic_curve((1, 0), ident="c1"),
                    geodesic_curve((1, 0), base=(0.5, 0.0), ident="c2")],
                   path)
    return str(path)


def small_config(tmp_path, **extra):
    cfg = {"samples": 500, "collision_samples": 2000}
    cfg.update(extra)
    path = tmp_path / "config.json"
    path.write_text(json.dumps(cfg))
    return str(path)


# ----------------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------------

def test_verify_unknown_suite_exits_2():
    with pytest.raises(SystemExit) as err:
        main(["verify", "bogus"])
    assert err.value.code == 2


def test_verify_suite_report(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "local-model", "--config",
                 small_config(tmp_path), "--out", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["schema"] == 1
    assert report["pass"] is True
    names = [r["name"] for r in report["suites"]["local-model"]]
    assert "param-residual" in names and "jac-sv-floor" in names


def test_verify_reports_are_byte_identical(tmp_path):
    cfg = small_config(tmp_path)
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert main(["verify", "fiber-family", "--config", cfg,
                 "--out", str(out1)]) == 0
    assert main(["verify", "fiber-family", "--config", cfg,
                 "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_verify_rejects_unknown_config_key(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"sampels": 10}))
    assert main(["verify", "local-model", "--config", str(path)]) == 2


# ----------------------------------------------------------------------------
# resolve
# ----------------------------------------------------------------------------

def test_resolve_roundtrip(tmp_path, pair_file, capsys):
    out = tmp_path / "res.json"
    svg = tmp_path / "res.svg"
    code = main(["resolve", pair_file, "--out", str(out), "--svg", str(svg)])
    assert code == 0
    printed = capsys.readouterr().out
    assert "components 3" in printed
    assert "sum (3,3)" in printed

    data = json.loads(out.read_text())
    assert data["components"] == 3
    assert data["chamfer"] > 0.0
    assert [c["class"] for c in data["inputs"]] == [[1, 2], [2, 1]]
    # the resolved diagram reloads as valid curves with the same classes
    curves = load_curvefile(str(out))
    assert sorted(c.homology_class() for c in curves) == [(1, 1)] * 3
    assert svg.read_text().startswith("<svg")


def test_resolve_deterministic_bytes(tmp_path, pair_file):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert main(["resolve", pair_file, "--out", str(out1)]) == 0
    assert main(["resolve", pair_file, "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_resolve_rejects_overlap_with_3(tmp_path, overlap_file):
    out = tmp_path / "res.json"
    assert main(["resolve", overlap_file, "--out", str(out)]) == 3


def test_resolve_rejects_bad_input(tmp_path):
    out = tmp_path / "res.json"
    missing = tmp_path / "nope.json"
    assert main(["resolve", str(missing), "--out", str(out)]) == 2

    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json")
    assert main(["resolve", str(garbled), "--out", str(out)]) == 2

    single = tmp_path / "single.json"
    save_curvefile([geodesic_curve((1, 0), ident="c1")], single)
    assert main(["resolve", str(single), "--out", str(out)]) == 2


def test_resolve_explicit_chamfer(tmp_path, pair_file):
    out = tmp_path / "res.json"
    assert main(["resolve", pair_file, "--out", str(out),
                 "--chamfer", "0.01"]) == 0
    assert json.loads(out.read_text())["chamfer"] == 0.01


# ----------------------------------------------------------------------------
# bound
# ----------------------------------------------------------------------------

def test_bound_classes_report(tmp_path):
    out = tmp_path / "bound.json"
    code = main(["bound", "--classes", "1,2;2,1", "--out", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["min_components"] == 3
    assert report["component_gap_bound"]["value"] == 2
    assert report["weighted_crossing_bound"]["ceiling"] == 2


def test_bound_weighted_fraction(tmp_path):
    out = tmp_path / "bound.json"
    assert main(["bound", "--classes", "0,5;10,0", "--weights", "2,1",
                 "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["weighted_crossing_bound"]["fraction"] == "9/2"
    assert report["weighted_crossing_bound"]["ceiling"] == 5


def test_bound_not_applicable(tmp_path, capsys):
    assert main(["bound", "--classes", "1,0;0,1"]) == 0
    err = capsys.readouterr().err
    assert "not applicable" in err


def test_bound_usage_errors():
    assert main(["bound"]) == 2
    assert main(["bound", "--classes", "1,2"]) == 2
    assert main(["bound", "--classes", "1,2;2,1", "--weights", "1"]) == 2
    assert main(["bound", "--classes", "1,x;2,1"]) == 2
    # torsion flag on an orientable surface is contradictory
    assert main(["bound", "--classes", "1,2;2,1", "--twisted", "1,0"]) == 2


def test_bound_graph_mode(tmp_path, pair_file):
    res = tmp_path / "res.json"
    assert main(["resolve", pair_file, "--out", str(res)]) == 0
    graph_path = tmp_path / "graph.json"
    data = json.loads(res.read_text())
    graph_path.write_text(json.dumps(
        {"graph": data["graph"], "choices": data["graph_choices"]}))
    out = tmp_path / "bound.json"
    assert main(["bound", "--config", str(graph_path),
                 "--out", str(out)]) == 0
    assert json.loads(out.read_text())["components"] == 3


def test_bound_graph_mode_rejects_bad_schema(tmp_path):
    path = tmp_path / "graph.json"
    path.write_text(json.dumps({"schema": 9, "side1_arcs": ["a0"],
                                "side2_arcs": ["b0"], "crossings": []}))
    assert main(["bound", "--config", str(path)]) == 2


# ----------------------------------------------------------------------------
# sample
# ----------------------------------------------------------------------------

def test_sample_model_csv(tmp_path):
    out = tmp_path / "pts.csv"
    assert main(["sample", "--what", "model", "--n", "50",
                 "--out", str(out)]) == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0] == "x1,x2,y1,y2,residual"
    assert len(lines) == 51
    residuals = [float(line.split(",")[-1]) for line in lines[1:]]
    assert max(residuals) <= 1e-12


def test_sample_family_json(tmp_path):
    out = tmp_path / "pts.json"
    assert main(["sample", "--what", "family", "--g", "0.4,0.3", "--n", "40",
                 "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["schema"] == 1
    assert data["columns"][-1] == "residual"
    assert len(data["rows"]) == 40
    assert max(row[-1] for row in data["rows"]) <= 1e-12


def test_sample_degenerate_family_splits_axes(tmp_path):
    out = tmp_path / "pts.csv"
    assert main(["sample", "--what", "family", "--g", "0", "--n", "40",
                 "--out", str(out)]) == 0
    rows = [line.split(",") for line in
            out.read_text().strip().split("\n")[1:]]
    on_first = sum(1 for r in rows if float(r[4]) == 0.0 and float(r[5]) == 0.0)
    assert on_first == 20


def test_sample_filled_and_interpolation(tmp_path):
    for what in ("filled", "interpolation"):
        out = tmp_path / (what + ".csv")
        assert main(["sample", "--what", what, "--n", "30",
                     "--out", str(out)]) == 0
        lines = out.read_text().strip().split("\n")
        assert len(lines) == 31


def test_sample_usage_errors():
    assert main(["sample", "--what", "model", "--n", "0"]) == 2
    assert main(["sample", "--what", "family", "--g", "2.0"]) == 2
    assert main(["sample", "--what", "family", "--g", "1,2,3"]) == 2
    with pytest.raises(SystemExit) as err:
        main(["sample", "--what", "nonsense"])
    assert err.value.code == 2


def test_sample_deterministic(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    for out in (out1, out2):
        assert main(["sample", "--what", "model", "--n", "25", "--seed", "9",
                     "--out", str(out)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
