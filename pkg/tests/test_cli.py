import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from taxicab import angle, parallax, triangle, trig
from taxicab.cli import main, parse_angle, render_json
from taxicab.core import Point


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)


def lib(x):
    """Library value at the CLI's default precision."""
    return float(f"{x:.10g}")


def test_convert_e2t(capsys):
    code, out, _ = run(capsys, "convert", "e2t", "0.7853981634")
    assert code == 0
    assert "t_radians: 1\n" in out


def test_convert_t2e(capsys):
    data = run_json(capsys, "convert", "t2e", "1.5")
    assert data["radians"] == lib(angle.euclidean_measure_standard(1.5))


def test_convert_t2e_right_angle_is_out_of_domain(capsys):
    code, _, err = run(capsys, "convert", "t2e", "2")
    assert code == 1 and err.startswith("error:")


def test_convert_with_reference(capsys):
    data = run_json(capsys, "convert", "e2t", str(math.pi / 4), "--psi", str(math.pi / 8))
    assert data["t_radians"] == lib(angle.taxicab_measure_in_quadrant(math.pi / 4, math.pi / 8))


def test_convert_domain_error(capsys):
    code, out, err = run(capsys, "convert", "e2t", "3.2")
    assert code == 1
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_trig_theta(capsys):
    code, out, _ = run(capsys, "trig", "1")
    assert code == 0
    assert "cos: 0.5\n" in out and "sin: 0.5\n" in out


def test_trig_theta_zero(capsys):
    data = run_json(capsys, "trig", "0")
    assert data["cos"] == 1 and data["sin"] == 0


def test_trig_sum_reports_row(capsys):
    data = run_json(capsys, "trig", "--sum", "3", "5")
    assert data["cos_sum"] == {"value": 1.0, "row": "II,III", "form": "1-|cos a - cos b|"}
    assert data["sin_sum"]["value"] == lib(trig.sin_sum(3, 5))


def test_trig_double(capsys):
    data = run_json(capsys, "trig", "--double", "1.3")
    assert data["cos_double"] == lib(trig.cos_double(1.3))
    assert data["sin_double"] == lib(trig.sin_double(1.3))


def test_trig_radian_suffix(capsys):
    data = run_json(capsys, "trig", f"{math.pi / 2}r")
    assert data["theta"] == pytest.approx(2.0, abs=1e-9)
    assert data["sin"] == pytest.approx(1.0, abs=1e-9)


def test_parse_angle_units():
    assert parse_angle("2", "t") == 2
    assert parse_angle(f"{math.pi}r", "t") == pytest.approx(4, abs=1e-12)
    assert parse_angle("2t", "r") == pytest.approx(math.pi / 2, abs=1e-12)


def test_trig_without_arguments_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["trig"])
    assert exc.value.code == 2


def test_triangle_single(capsys):
    data = run_json(capsys, "triangle", "0", "0", "2", "0", "2", "2")
    assert sorted(data["sides"]) == [2, 2, 4]
    assert sorted(data["angles"]) == [1, 1, 2]
    assert data["angle_sum"] == 4


def test_triangle_pair(capsys):
    data = run_json(capsys, "triangle", *"0 0 2 0 2 2 0 0 2 0 1 -1".split())
    assert data["congruence"]["ASASA"] is True
    assert data["congruence"]["SASAS"] is False
    assert data["congruent"] is False
    expected = triangle.classify_congruence(
        triangle.Triangle.from_coords(0, 0, 2, 0, 2, 2),
        triangle.Triangle.from_coords(0, 0, 2, 0, 1, -1)).as_dict()
    assert data["congruence"] == expected


def test_triangle_degenerate(capsys):
    code, _, err = run(capsys, "triangle", "0", "0", "1", "1", "2", "2")
    assert code == 1 and "collinear" in err


def test_triangle_wrong_arity(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["triangle", "0", "0", "1"])
    assert exc.value.code == 2


def test_parallax_taxicab(capsys):
    data = run_json(capsys, "parallax", "taxicab", "--s", "0.2", "--alpha", "1.0", "--beta", "1.05")
    assert data["distance"] == lib(0.2 / 0.05)
    assert data["distance"] == pytest.approx(4, abs=1e-9)


def test_parallax_simulate(capsys):
    data = run_json(capsys, "parallax", "simulate", "--observer", "0,0", "--object", "3,4",
                    "--step", "1")
    assert data["truth"] == 7
    assert data["reconstructed"] == pytest.approx(7, abs=1e-9)
    assert data["difference"] < 1e-9


def test_parallax_simulate_rejected_direction(capsys):
    code, _, err = run(capsys, "parallax", "simulate", "--observer", "0,0", "--object", "3,4",
                       "--step", "1", "--direction", "NE")
    assert code == 1 and "NE" in err


def test_parallax_simulate_batch(capsys):
    data = run_json(capsys, "parallax", "simulate", "--random", "50", "--seed", "2")
    assert data["scenes"] == 50 and data["exact"] is True


def test_parallax_euclid_modes(capsys):
    m = parallax.simulate_euclidean_diagonal(Point(0, 0), Point(3, 4), 1.0, 0.0)
    data = run_json(capsys, "parallax", "euclid-exact", "--s", "1", "--alpha", repr(m.alpha_e),
                    "--beta", repr(m.beta_e), "--theta", "0")
    assert data["distance"] == pytest.approx(5, abs=1e-9)
    data = run_json(capsys, "parallax", "euclid-perp", "--s", "1", "--alpha", "0", "--beta", "0.01")
    assert data["distance"] == lib(parallax.euclidean_parallax_perpendicular(1, 0, 0.01))
    data = run_json(capsys, "parallax", "euclid-approx", "--s", "2", "--alpha", "0", "--beta", "0.5")
    assert data["distance"] == 4


def test_parallax_approx_zero_shift(capsys):
    code, _, _ = run(capsys, "parallax", "euclid-approx", "--s", "1", "--alpha", "0", "--beta", "0")
    assert code == 1


def test_parallax_missing_parameter(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["parallax", "taxicab", "--s", "1"])
    assert exc.value.code == 2


def test_plot_trig_csv(tmp_path, capsys):
    path = tmp_path / "trig.csv"
    code, _, _ = run(capsys, "plot", "trig-graphs", "--format", "csv", "--output", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "theta,cos,sin"
    assert "0,1,0" in lines and "1,0.5,0.5" in lines
    assert len(lines) == 1 + 1601
    assert path.read_bytes().endswith(b"\n")


def test_plot_unit_circle_svg(tmp_path, capsys):
    path = tmp_path / "circle.svg"
    code, _, _ = run(capsys, "plot", "unit-circle", "--output", str(path))
    assert code == 0
    text = path.read_text()
    ET.fromstring(text)
    assert 'points="1,0 0,1 -1,0 0,-1"' in text


def test_plot_trig_svg_parses(capsys):
    code, out, _ = run(capsys, "plot", "trig-graphs", "--format", "svg")
    assert code == 0
    root = ET.fromstring(out)
    ids = {el.get("id") for el in root.iter() if el.tag.endswith("polyline")}
    assert ids == {"cos_t", "sin_t"}


def test_plot_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "plot", "unit-circle", "--output", str(tmp_path / "no" / "x.svg"))
    assert code == 1 and err.startswith("error:")


def test_svg_only_for_plot(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["trig", "1", "--format", "svg"])
    assert exc.value.code == 2


def test_csv_output(capsys):
    code, out, _ = run(capsys, "trig", "1", "--format", "csv")
    assert out == "theta,cos,sin,quadrant\n1,0.5,0.5,I\n"


def test_precision_flag(capsys):
    code, out, _ = run(capsys, "convert", "e2t", "1.0", "--precision", "4")
    assert f"t_radians: {angle.taxicab_measure_standard(1.0):.4g}\n" in out


def test_verify(capsys):
    data = run_json(capsys, "verify", "--samples", "2000")
    assert data["ok"] is True
    assert max(data["max_deviation"].values()) < 1e-9


@pytest.mark.parametrize("argv", [
    ["trig", "--sum", "3", "5"],
    ["triangle", *"0 0 2 0 2 2 0 0 2 0 1 -1".split()],
    ["parallax", "simulate", "--observer", "0,0", "--object", "3,4", "--step", "1"],
    ["convert", "e2t", "0.3"],
])
def test_json_round_trip(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    assert render_json(json.loads(out)) == out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "taxicab", "trig", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "cos: 0.5" in proc.stdout
