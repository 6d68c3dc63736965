"""CLI behaviour, file formats, determinism and SVG structure."""

import csv
import json
import math
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from fnr import Region, classify_point, support_function
from fnr.cli import main
from fnr.render import clip_segment, format_float, support_line_segment

SVG = "{http://www.w3.org/2000/svg}"


def _classes(root):
    counts = {}
    for element in root.iter():
        cls = element.get("class")
        if cls:
            counts[cls] = counts.get(cls, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def test_float_format_round_trips():
    for value in (1.5, math.sqrt(1.25), -0.8042477193189872, 1e-17, 0.0):
        assert float(format_float(value)) == value


def test_clip_segment():
    assert clip_segment((-5.0, 0.0), (5.0, 0.0), 2.0) == ((-2.0, 0.0), (2.0, 0.0))
    assert clip_segment((0.0, 3.0), (0.0, 5.0), 2.0) is None
    inside = clip_segment((0.1, 0.2), (0.3, -0.4), 2.0)
    assert inside == ((0.1, 0.2), (0.3, -0.4))


def test_support_line_segment_touches_the_offset_point():
    segment = support_line_segment(0.3, 1.4, 2.0)
    assert segment is not None
    (x0, y0), (x1, y1) = segment
    # both endpoints satisfy the line equation x cos + y sin = offset
    for x, y in ((x0, y0), (x1, y1)):
        assert abs(x * math.cos(0.3) + y * math.sin(0.3) - 1.4) <= 1e-9


# ---------------------------------------------------------------------------
# support-lines command
# ---------------------------------------------------------------------------


def test_support_lines_outputs(tmp_path, capsys):
    assert main(["support-lines", "--r", "0.5", "--samples", "180", "--out", str(tmp_path)]) == 0
    capsys.readouterr()

    rows = list(csv.DictReader(open(tmp_path / "support_lines.csv")))
    assert len(rows) == 180
    by_theta = {float(row["theta"]): float(row["offset"]) for row in rows}
    assert by_theta[0.0] == 1.5
    for theta, offset in by_theta.items():
        assert offset == support_function(theta, 0.5)

    root = ET.parse(tmp_path / "support_lines.svg").getroot()
    assert root.tag == f"{SVG}svg"
    assert _classes(root)["support-line"] == 180


def test_support_lines_degenerate_radius_is_flat(tmp_path, capsys):
    assert main(["support-lines", "--r", "0", "--samples", "90", "--out", str(tmp_path)]) == 0
    capsys.readouterr()
    rows = list(csv.DictReader(open(tmp_path / "support_lines.csv")))
    assert all(float(row["offset"]) == 1.0 for row in rows)


# ---------------------------------------------------------------------------
# boundary command
# ---------------------------------------------------------------------------


def test_boundary_outputs(tmp_path, capsys):
    assert main(["boundary", "--r", "0.5", "--out", str(tmp_path)]) == 0
    capsys.readouterr()

    rows = list(csv.DictReader(open(tmp_path / "boundary.csv")))
    assert len(rows) == 720
    assert [row["branch"] for row in rows].count("circle-right") > 0

    rightmost = max(rows, key=lambda row: float(row["x"]))
    assert float(rightmost["x"]) == 1.5
    assert rightmost["branch"] == "circle-right"

    transitions = sum(
        1 for i in range(len(rows)) if rows[i]["branch"] != rows[i - 1]["branch"]
    )
    assert transitions == 4

    # round-trip: every emitted row classifies as a boundary point
    for row in rows:
        point = classify_point(float(row["x"]), float(row["y"]), 0.5)
        assert point is Region.BOUNDARY

    root = ET.parse(tmp_path / "boundary.svg").getroot()
    counts = _classes(root)
    assert counts["boundary"] == 1
    assert counts["aux-circle"] == 2
    assert counts["switch-marker"] == 4
    assert counts["switch-line"] == 4
    assert counts.get("aux-sextic", 0) >= 2

    # solid main curve, dashed auxiliaries
    for element in root.iter():
        cls = element.get("class")
        if cls == "boundary":
            assert element.get("stroke-dasharray") is None
        elif cls in ("aux-circle", "aux-sextic", "switch-line"):
            assert element.get("stroke-dasharray")


def test_boundary_rejects_degenerate_radius(tmp_path, capsys):
    assert main(["boundary", "--r", "0", "--out", str(tmp_path)]) == 2
    err = capsys.readouterr().err
    assert "unit disk" in err
    assert not (tmp_path / "boundary.csv").exists()


# ---------------------------------------------------------------------------
# verify command
# ---------------------------------------------------------------------------


def test_verify_small_passes(tmp_path, capsys):
    code = main(["verify", "--r", "0.5", "--N", "64", "--out", str(tmp_path)])
    capsys.readouterr()
    assert code == 0
    payload = json.loads((tmp_path / "verify.json").read_text())
    assert payload["all_pass"] is True
    names = {check["name"] for check in payload["checks"]}
    assert {"support-symmetry", "compression-convergence", "dual-route",
            "ellipse-gap-positive"} <= names
    for check in payload["checks"]:
        assert set(check) == {"name", "measured", "tolerance", "pass"}


def test_verify_zero_tolerance_fails(tmp_path, capsys):
    code = main([
        "verify", "--r", "0.5", "--N", "64", "--tol-conv", "0", "--out", str(tmp_path)
    ])
    err = capsys.readouterr().err
    assert code == 1
    assert "compression-convergence" in err
    payload = json.loads((tmp_path / "verify.json").read_text())
    assert payload["all_pass"] is False


def test_verify_degenerate_radius(tmp_path, capsys):
    assert main(["verify", "--r", "0", "--out", str(tmp_path)]) == 0
    capsys.readouterr()
    payload = json.loads((tmp_path / "verify.json").read_text())
    names = {check["name"] for check in payload["checks"]}
    assert names == {"support-constant-one", "degenerate-refusals"}


def test_verify_with_resultant(tmp_path, capsys):
    code = main([
        "verify", "--r", "0.5", "--N", "64", "--with-resultant", "--out", str(tmp_path)
    ])
    capsys.readouterr()
    assert code == 0
    payload = json.loads((tmp_path / "verify.json").read_text())
    names = {check["name"] for check in payload["checks"]}
    assert "resultant-identity-r=1/2" in names


# ---------------------------------------------------------------------------
# resultant command
# ---------------------------------------------------------------------------


def test_resultant_success_and_reports(tmp_path, capsys):
    code = main(["resultant", "--r", "1/2", "--seed", "1", "--out", str(tmp_path)])
    out = capsys.readouterr().out
    assert code == 0
    assert "success        : True" in out
    payload = json.loads((tmp_path / "resultant.json").read_text())
    assert payload["all_success"] is True
    assert payload["reports"][0]["r"] == "1/2"
    assert (tmp_path / "resultant.txt").exists()


def test_resultant_mutation_self_test_fails(tmp_path, capsys):
    code = main(["resultant", "--r", "1/2", "--mutate", "--out", str(tmp_path)])
    captured = capsys.readouterr()
    assert code == 1
    assert "nonzero residual" in captured.out
    payload = json.loads((tmp_path / "resultant.json").read_text())
    assert payload["mutated"] is True
    assert payload["all_success"] is False


def test_resultant_rejects_degenerate_radius(tmp_path, capsys):
    assert main(["resultant", "--r", "0", "--out", str(tmp_path)]) == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# Configuration handling and exit codes
# ---------------------------------------------------------------------------


def test_coupling_flag_sets_radius(tmp_path, capsys):
    assert main(["support-lines", "--a", "0,1", "--samples", "90", "--out", str(tmp_path)]) == 0
    capsys.readouterr()
    rows = list(csv.DictReader(open(tmp_path / "support_lines.csv")))
    by_theta = {float(row["theta"]): float(row["offset"]) for row in rows}
    assert by_theta[0.0] == 1.5  # |i|/2 = 0.5


def test_conflicting_radius_and_coupling(tmp_path, capsys):
    assert main([
        "support-lines", "--r", "0.4", "--a", "1,0", "--out", str(tmp_path)
    ]) == 2
    assert "conflicts" in capsys.readouterr().err


def test_io_error_exit_code(tmp_path, capsys):
    target = tmp_path / "blocked"
    target.write_text("a file, not a directory\n")
    assert main(["boundary", "--r", "0.5", "--out", str(target)]) == 3
    assert "I/O error" in capsys.readouterr().err


def test_outputs_are_deterministic(tmp_path, capsys):
    first = tmp_path / "a"
    second = tmp_path / "b"
    for out in (first, second):
        assert main(["boundary", "--r", "0.5", "--samples", "180", "--out", str(out)]) == 0
        assert main(["resultant", "--r", "1/3", "--seed", "9", "--out", str(out)]) == 0
    capsys.readouterr()
    for name in ("boundary.csv", "boundary.svg", "resultant.json", "resultant.txt"):
        assert (first / name).read_bytes() == (second / name).read_bytes()
