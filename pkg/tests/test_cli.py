from __future__ import annotations

import json

import pytest

from kndrawings.cli import main
from kndrawings.drawing import drawing_to_json, encode_drawing, from_geometric
from kndrawings.geometry import generate_convex
from kndrawings.report import (
    CHECK_NAMES,
    resolve_checks,
    run_checks,
    verify_batch,
)


# -- report assembly --------------------------------------------------------


def test_resolve_checks_all():
    assert resolve_checks(("all",), 6, "natural") == (
        "t1", "t2", "t3", "segbound", "natural", "claims",
    )
    assert resolve_checks(("all",), 6, "random") == ("t1", "t2", "t3", "segbound", "claims")
    assert resolve_checks(("all",), 3, "random") == ("t1", "t2", "t3", "segbound")
    assert resolve_checks(("t2", "t1"), 6, "random") == ("t2", "t1")


def test_run_checks_entry(crossed_k4):
    ok, entry = run_checks(crossed_k4, ("t1", "natural"))
    assert ok
    assert entry["n"] == 4
    assert entry["validation"]["ok"] is True
    assert list(entry["checks"]) == ["t1", "natural"]
    assert entry["counts"] == {"crossings": 1, "faces": 5, "triangles": 4}


def test_run_checks_invalid_skips_checks(crossed_k4):
    from kndrawings.drawing import GoodDrawing

    bad = GoodDrawing(
        n=4,
        rotation=crossed_k4.rotation,
        crossings_along=crossed_k4.crossings_along,
        crossing_sign={((1, 3), (2, 4)): -1},
    )
    ok, entry = run_checks(bad, ("t1",))
    assert not ok
    assert entry["validation"]["ok"] is False
    assert "checks" not in entry or not entry["checks"]


def test_verify_batch_statuses(crossed_k4, planar_k4):
    rep = verify_batch([({"seed": 0}, crossed_k4)], ("t1",), "random")
    assert rep.ok and not rep.invalid and rep.exit_status == 0
    # natural fails on the planar drawing -> exit 1
    rep = verify_batch([({}, planar_k4)], ("natural",), "file")
    assert not rep.ok and rep.exit_status == 1


def test_report_bytes_deterministic(crossed_k4):
    a = verify_batch([({"seed": 1}, crossed_k4)], ("t1", "t2"), "random").to_bytes()
    b = verify_batch([({"seed": 1}, crossed_k4)], ("t1", "t2"), "random").to_bytes()
    assert a == b
    assert a.endswith(b"\n")
    blob = json.loads(a)
    assert blob["input_policy"]
    assert [e["seed"] for e in blob["entries"]] == [1]


# -- command-line entry points ----------------------------------------------


def test_generate_writes_drawing_and_points(tmp_path, capsys):
    out = tmp_path / "d.json"
    rc = main([
        "generate", "--kind", "natural", "--n", "5", "--seed", "0",
        "--out", str(out),
    ])
    assert rc == 0
    blob = json.loads(out.read_text())
    assert blob["n"] == 5 and len(blob["crossings"]) == 5
    pts = json.loads((tmp_path / "d.points.json").read_text())
    assert pts["n"] == 5 and len(pts["points"]) == 5
    # matches the library path byte for byte
    want = encode_drawing(from_geometric(generate_convex(5, 0)))
    assert out.read_bytes() == want


def test_generate_stdout(capsys):
    rc = main(["generate", "--kind", "random", "--n", "4", "--seed", "9"])
    assert rc == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["n"] == 4


def test_verify_natural_ok(tmp_path):
    out = tmp_path / "rep.json"
    rc = main([
        "verify", "--kind", "natural", "--n", "6", "--seeds", "0..2",
        "--out", str(out),
    ])
    assert rc == 0
    blob = json.loads(out.read_text())
    assert blob["ok"] is True
    assert len(blob["entries"]) == 3
    for entry in blob["entries"]:
        assert set(entry["checks"]) == {"t1", "t2", "t3", "segbound", "natural", "claims"}
        for rep in entry["checks"].values():
            assert rep["pass"] is True


def test_verify_failing_check_exits_1(tmp_path):
    out = tmp_path / "rep.json"
    rc = main([
        "verify", "--kind", "random", "--n", "5", "--seed", "0",
        "--checks", "natural", "--out", str(out),
    ])
    assert rc == 1
    blob = json.loads(out.read_text())
    assert blob["ok"] is False
    assert blob["entries"][0]["checks"]["natural"]["pass"] is False


def test_verify_file_round_trip(tmp_path, crossed_k4):
    src = tmp_path / "d.json"
    src.write_bytes(encode_drawing(crossed_k4))
    out = tmp_path / "rep.json"
    rc = main(["verify", "--kind", "file", "--in", str(src), "--out", str(out)])
    assert rc == 0
    blob = json.loads(out.read_text())
    assert blob["entries"][0]["input"] == str(src)


def test_verify_invalid_drawing_exits_2(tmp_path, crossed_k4):
    blob = drawing_to_json(crossed_k4)
    blob["crossings"][0]["sign"] = -1  # flips the map into a non-sphere
    src = tmp_path / "bad.json"
    src.write_text(json.dumps(blob))
    out = tmp_path / "rep.json"
    rc = main(["verify", "--kind", "file", "--in", str(src), "--out", str(out)])
    assert rc == 2
    rep = json.loads(out.read_text())
    assert rep["invalid"] == 1
    rules = [v["rule"] for v in rep["entries"][0]["validation"]["violations"]]
    assert "non-spherical" in rules


def test_verify_corrupted_file_exits_2(tmp_path, capsys):
    src = tmp_path / "junk.json"
    src.write_text("{broken")
    rc = main(["verify", "--kind", "file", "--in", str(src)])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_verify_csv(tmp_path):
    csv_path = tmp_path / "out.csv"
    rc = main([
        "verify", "--kind", "natural", "--n", "5", "--seed", "2",
        "--checks", "t1,t3", "--csv", str(csv_path),
        "--out", str(tmp_path / "rep.json"),
    ])
    assert rc == 0
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "kind,n,seed,check,pass,witnesses,faces,crossings,triangles"
    assert len(lines) == 4  # header + validation + t1 + t3
    assert lines[1].startswith("natural,5,2,validation,True,0,12,5,10")


def test_verify_figures(tmp_path):
    figs = tmp_path / "figs"
    rc = main([
        "verify", "--kind", "natural", "--n", "4", "--seed", "0",
        "--checks", "t1", "--figures", str(figs),
        "--out", str(tmp_path / "rep.json"),
    ])
    assert rc == 0
    svg = figs / "natural-n4-s0.svg"
    assert svg.exists()
    assert b"<svg" in svg.read_bytes()


def test_verify_figures_for_file_kind_rejected(tmp_path, crossed_k4, capsys):
    src = tmp_path / "d.json"
    src.write_bytes(encode_drawing(crossed_k4))
    rc = main([
        "verify", "--kind", "file", "--in", str(src),
        "--figures", str(tmp_path / "figs"),
    ])
    assert rc == 2
    assert "coordinates" in capsys.readouterr().err


def test_render_natural(tmp_path, capsys):
    out = tmp_path / "pic.svg"
    rc = main([
        "render", "--kind", "natural", "--n", "5", "--seed", "1",
        "--shade-faces", "--out", str(out),
    ])
    assert rc == 0
    data = out.read_bytes()
    assert b"<svg" in data
    assert "wrote" in capsys.readouterr().err


def test_render_deterministic(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for p in (a, b):
        assert main(["render", "--kind", "random", "--n", "6", "--seed", "3", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_render_file_kind_needs_points(tmp_path, crossed_k4, capsys):
    src = tmp_path / "d.json"
    src.write_bytes(encode_drawing(crossed_k4))
    rc = main(["render", "--kind", "file", "--in", str(src), "--out", str(tmp_path / "x.svg")])
    assert rc == 2
    assert "--points" in capsys.readouterr().err


def test_render_file_kind_with_points(tmp_path):
    d_path = tmp_path / "d.json"
    p_path = tmp_path / "p.json"
    assert main([
        "generate", "--kind", "random", "--n", "5", "--seed", "4",
        "--out", str(d_path), "--points-out", str(p_path),
    ]) == 0
    rc = main([
        "render", "--kind", "file", "--in", str(d_path),
        "--points", str(p_path), "--out", str(tmp_path / "x.svg"),
    ])
    assert rc == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["nonsense"],
        ["generate", "--kind", "file", "--n", "5"],
        ["generate", "--kind", "natural"],  # missing --n
        ["generate", "--kind", "natural", "--n", "2", "--seed", "0"],
        ["verify", "--kind", "natural", "--n", "5", "--seed", "0", "--checks", "t9"],
        ["verify", "--kind", "natural", "--n", "5", "--seed", "0", "--seeds", "1..2"],
        ["verify", "--kind", "natural", "--n", "5", "--seeds", "5..1"],
        ["verify", "--kind", "file"],  # missing --in
        ["render", "--kind", "natural", "--n", "5", "--seed", "0"],  # missing --out
    ],
)
def test_usage_errors_exit_3(argv, capsys):
    assert main(argv) == 3
    assert capsys.readouterr().err


def test_check_names_constant():
    assert CHECK_NAMES == ("t1", "t2", "t3", "segbound", "natural", "claims")
