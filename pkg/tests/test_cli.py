import json
import subprocess
import sys

import pytest

from equistick.cli import main


def run(capsys, *argv, environ=None):
    code = main(list(argv), environ or {})
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys, tmp_path):
    f = tmp_path / "t.txt"
    f.write_text("1 3\n2 4\n3 5\n1 4\n2 5\n")
    code, out, _ = run(capsys, "validate", "--file", str(f))
    assert code == 0
    assert json.loads(out)["n"] == 5


def test_validate_json_file(capsys, tmp_path):
    f = tmp_path / "t.json"
    f.write_text('{"n": 2, "arcs": [[1, 2], [1, 2]]}')
    code, out, _ = run(capsys, "validate", "--file", str(f))
    assert code == 0 and json.loads(out)["n"] == 2


def test_realize_trefoil(capsys, tmp_path):
    out_file = tmp_path / "t.json"
    code, out, _ = run(capsys, "realize", "3_1", "--out", str(out_file))
    report = json.loads(out)
    assert code == 0
    assert report["sticks"] == 8
    assert report["bounds"]["upper_bound"] == 8 and report["passed"]
    assert json.loads(out_file.read_text())["edge_length"] == 1.0


def test_realize_figure_eight(capsys):
    code, out, _ = run(capsys, "realize", "4_1")
    report = json.loads(out)
    assert code == 0 and report["sticks"] == 10 and report["bounds"]["lower_sanity"] == 7


def test_realize_no_reduce(capsys):
    code, out, _ = run(capsys, "realize", "3_1", "--no-reduce")
    assert code == 0 and json.loads(out)["sticks"] == 10


def test_realize_garbage_file(capsys, tmp_path):
    f = tmp_path / "garbage.txt"
    f.write_text("1 2\n1 3\n1 2\n")
    out_file = tmp_path / "never.json"
    code, out, err = run(capsys, "realize", "--file", str(f), "--out", str(out_file))
    assert code != 0
    assert json.loads(err)["error"] == "DegreeError"
    assert not out_file.exists()


def test_parse_error_has_line(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("1 3\n2 x\n")
    code, _, err = run(capsys, "validate", "--file", str(f))
    assert code == 2 and json.loads(err)["line"] == 2


def test_unknown_table_name(capsys):
    code, _, err = run(capsys, "realize", "13n_1")
    assert code == 2 and json.loads(err)["error"] == "KeyError"


def test_file_input_with_crossing_number(capsys, tmp_path):
    f = tmp_path / "t.txt"
    f.write_text("1 3\n2 4\n3 5\n1 4\n2 5\n")
    code, out, _ = run(capsys, "realize", "--file", str(f), "--crossing-number", "3")
    assert code == 0 and json.loads(out)["bounds"]["upper_bound"] == 8
    code, out, _ = run(capsys, "realize", "--file", str(f))
    assert code == 0 and json.loads(out)["bounds"] is None


def test_compose(capsys, tmp_path):
    merged = tmp_path / "m.txt"
    code, out, _ = run(capsys, "compose", "3_1", "3_1", "--merged-out", str(merged))
    report = json.loads(out)
    assert code == 0 and report["sticks"] == 12 and report["bounds"]["upper_bound"] == 12
    assert merged.read_text() == report["merged_presentation"]
    code, out, _ = run(capsys, "compose", "3_1", "4_1")
    assert code == 0 and json.loads(out)["sticks"] == 14


def test_compose_bad_arc(capsys):
    code, _, err = run(capsys, "compose", "3_1", "3_1", "--arc1", "0")
    assert code == 2 and json.loads(err)["error"] == "NoEligibleArc"


def test_invariant(capsys):
    code, out, _ = run(capsys, "invariant", "3_1")
    assert code == 0 and json.loads(out)["determinant"] == 3
    code, out, _ = run(capsys, "invariant", "unknot2")
    r = json.loads(out)
    assert r["jones"] == {"0": 1} and r["determinant"] == 1


def test_invariant_round_trip_from_polygon(capsys, tmp_path):
    f = tmp_path / "t.json"
    run(capsys, "realize", "3_1", "--out", str(f))
    _, direct, _ = run(capsys, "invariant", "3_1")
    _, from_poly, _ = run(capsys, "invariant", "--from-polygon", str(f))
    a, b = json.loads(direct), json.loads(from_poly)
    mirrored = {str(-int(k)): v for k, v in a["jones"].items()}
    assert b["jones"] in (a["jones"], mirrored)
    assert a["determinant"] == b["determinant"]


@pytest.mark.parametrize("fmt", ["json", "csv", "obj", "vect", "pd"])
def test_export_formats(capsys, tmp_path, fmt):
    poly = tmp_path / "t.json"
    run(capsys, "realize", "3_1", "--out", str(poly))
    target = tmp_path / f"t_out.{fmt}"
    code, _, _ = run(capsys, "export", "--from-polygon", str(poly), "--out", str(target))
    assert code == 0 and target.read_text()


def test_export_presentation_pd(capsys):
    code, out, _ = run(capsys, "export", "3_1", "--format", "pd")
    assert code == 0 and out.startswith("X[")


def test_format_inferred_from_suffix(capsys, tmp_path):
    target = tmp_path / "t.obj"
    run(capsys, "realize", "3_1", "--out", str(target))
    assert target.read_text().startswith("# closed")


def test_batch_formats(capsys):
    code, out, _ = run(capsys, "batch", "--names", "3_1,4_1", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("name,") and len(lines) == 3
    code, out, _ = run(capsys, "batch", "--names", "4_1,3_1", "--format", "text")
    assert out.splitlines()[1].startswith("3_1")


def test_batch_empty_selection(capsys):
    code, out, _ = run(capsys, "batch", "--names", "")
    assert code == 0 and json.loads(out) == {"all_passed": True, "rows": []}


def test_batch_seeds_agree_on_counts(capsys):
    _, a, _ = run(capsys, "batch", "--names", "3_1,5_2,8_20", "--seed", "7")
    _, b, _ = run(capsys, "batch", "--names", "3_1,5_2,8_20", "--seed", "11")
    key = lambda out: [(r["sticks"], r["passed"], r["bound_pass"]) for r in json.loads(out)["rows"]]
    assert key(a) == key(b)


def test_batch_jobs_same_output(capsys):
    _, a, _ = run(capsys, "batch", "--names", "3_1,4_1,5_1")
    _, b, _ = run(capsys, "batch", "--names", "3_1,4_1,5_1", "--jobs", "2")
    assert a == b


def test_env_overrides(capsys):
    _, a, _ = run(capsys, "batch", "--names", "3_1", environ={"EQUISTICK_FORMAT": "csv"})
    assert a.startswith("name,")
    _, b, _ = run(capsys, "batch", "--names", "3_1", "--format", "json", environ={"EQUISTICK_FORMAT": "csv"})
    assert b.startswith("{")
    code, _, err = run(capsys, "realize", "3_1", environ={"EQUISTICK_SEED": "x"})
    assert code == 2 and "EQUISTICK_SEED" in err
    code, out, _ = run(capsys, "realize", "3_1", environ={"EQUISTICK_NO_REDUCE": "1"})
    assert json.loads(out)["sticks"] == 10


def test_table_listing(capsys):
    code, out, _ = run(capsys, "table", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) >= 36 and rows[1]["name"] == "3_1"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "equistick", "invariant", "3_1"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["determinant"] == 3
