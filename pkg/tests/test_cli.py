import json

from click.testing import CliRunner

from sphereinc import serialize as ser
from sphereinc.cli import cli


def run(runner, *args):
    return runner.invoke(cli, list(args))


def write_grid(runner, path, k=2):
    result = run(runner, "gen", "--kind", "grid", "--k", str(k), "--out", path)
    assert result.exit_code == 0, result.output
    return path


def write_unit_sphere_instance(runner, tmp_path):
    """The equator square plus a 3-sphere pencil through its circle."""
    pts = {"points": [["1", "0", "0"], ["-1", "0", "0"], ["0", "1", "0"], ["0", "-1", "0"]]}
    circle = {"plane": {"normal": ["0", "0", "1"], "offset": "0"},
              "sphere": {"center": ["0", "0", "0"], "radius_sq": "1"}}
    p_file = str(tmp_path / "pts.json")
    c_file = str(tmp_path / "circle.json")
    ser.write_json(p_file, pts)
    ser.write_json(c_file, circle)
    s_file = str(tmp_path / "sph.json")
    result = run(runner, "gen", "--kind", "sphere_pencil", "--circle", c_file,
                 "--lambdas", "0,1,2", "--out", s_file)
    assert result.exit_code == 0, result.output
    return p_file, s_file


def test_gen_grid_and_incidences(tmp_path):
    runner = CliRunner()
    p_file = write_grid(runner, str(tmp_path / "grid.json"))
    data = ser.read_json(p_file)
    assert len(data["points"]) == 8
    s_file = str(tmp_path / "sph.json")
    ser.write_json(s_file, {"spheres": [{"center": ["0", "0", "0"], "radius_sq": "1"}]})
    out = str(tmp_path / "inc.json")
    result = run(runner, "incidences", "--points", p_file, "--spheres", s_file,
                 "--engine", "bucketed", "--verify", "--out", out)
    assert result.exit_code == 0, result.output
    report = ser.read_json(out)
    assert report["incidences"] == 3  # (1,0,0), (0,1,0), (0,0,1)
    assert report["engine"] == "bucketed"
    assert "wall_time" not in report


def test_incidences_timing_flag(tmp_path):
    runner = CliRunner()
    p_file = write_grid(runner, str(tmp_path / "grid.json"))
    s_file = str(tmp_path / "sph.json")
    ser.write_json(s_file, {"spheres": [{"center": ["0", "0", "0"], "radius_sq": "1"}]})
    out = str(tmp_path / "inc.json")
    result = run(runner, "incidences", "--points", p_file, "--spheres", s_file,
                 "--timing", "--out", out)
    assert result.exit_code == 0
    assert "wall_time" in ser.read_json(out)


def test_pencil_decompose_verify_roundtrip(tmp_path):
    runner = CliRunner()
    p_file, s_file = write_unit_sphere_instance(runner, tmp_path)
    d_file = str(tmp_path / "decomp.json")
    result = run(runner, "decompose", "--points", p_file, "--spheres", s_file,
                 "--verify", "--out", d_file)
    assert result.exit_code == 0, result.output
    decomp = ser.read_json(d_file)
    assert len(decomp["blocks"]) == 1
    assert decomp["stats"]["incidences"] == 12
    assert decomp["residual_edges"] == []
    result = run(runner, "verify", "--decomp", d_file, "--points", p_file,
                 "--spheres", s_file)
    assert result.exit_code == 0
    assert "verified" in result.output


def test_verify_detects_corruption(tmp_path):
    runner = CliRunner()
    p_file, s_file = write_unit_sphere_instance(runner, tmp_path)
    d_file = str(tmp_path / "decomp.json")
    run(runner, "decompose", "--points", p_file, "--spheres", s_file, "--out", d_file)
    decomp = ser.read_json(d_file)
    decomp["blocks"][0]["point_indices"] = [0, 1]
    ser.write_json(d_file, decomp)
    report_file = str(tmp_path / "report.json")
    result = run(runner, "verify", "--decomp", d_file, "--points", p_file,
                 "--spheres", s_file, "--out", report_file)
    assert result.exit_code == 2
    assert ser.read_json(report_file)["ok"] is False


def test_distances_command(tmp_path):
    runner = CliRunner()
    p_file = write_grid(runner, str(tmp_path / "grid.json"))
    out = str(tmp_path / "dist.json")
    result = run(runner, "distances", "--points", p_file, "--unit", "--out", out)
    assert result.exit_code == 0
    data = ser.read_json(out)
    assert data["t"] == 3
    assert data["unit_count"] == 12
    assert data["histogram"] == {"1": 12, "2": 12, "3": 4}


def test_distances_bipartite(tmp_path):
    runner = CliRunner()
    a = str(tmp_path / "a.json")
    b = str(tmp_path / "b.json")
    ser.write_json(a, {"points": [["0", "0", "0"]]})
    ser.write_json(b, {"points": [["1", "0", "0"], ["0", "0", "0"]]})
    out = str(tmp_path / "dist.json")
    result = run(runner, "distances", "--points", a, "--points2", b, "--unit", "--out", out)
    assert result.exit_code == 0
    data = ser.read_json(out)
    assert data["mode"] == "bipartite"
    assert data["zero_count"] == 1
    assert data["unit_count"] == 1


def test_experiment_command(tmp_path):
    runner = CliRunner()
    out = str(tmp_path / "exp.json")
    result = run(runner, "experiment", "--family", "grid-unit", "--sizes", "2,3,4",
                 "--verify", "--out", out)
    assert result.exit_code == 0, result.output
    data = ser.read_json(out)
    assert [r["value"] for r in data["rows"]] == [12, 54, 144]
    assert "alpha = " in result.output


def test_experiment_bad_sizes(tmp_path):
    runner = CliRunner()
    out = str(tmp_path / "exp.json")
    assert run(runner, "experiment", "--family", "grid-unit", "--sizes", "4,3,2",
               "--out", out).exit_code == 3
    assert run(runner, "experiment", "--family", "grid-unit", "--sizes", "a,b,c",
               "--out", out).exit_code == 3


def test_gen_input_errors(tmp_path):
    runner = CliRunner()
    out = str(tmp_path / "x.json")
    assert run(runner, "gen", "--kind", "grid", "--k", "0", "--out", out).exit_code == 3
    assert run(runner, "gen", "--kind", "sphere_pencil", "--out", out).exit_code == 3


def test_byte_identical_reruns(tmp_path):
    runner = CliRunner()
    outs = []
    for name in ("a.json", "b.json"):
        out = str(tmp_path / name)
        result = run(runner, "gen", "--kind", "random_points", "--count", "25",
                     "--seed", "7", "--out", out)
        assert result.exit_code == 0
        with open(out, "rb") as fh:
            outs.append(fh.read())
    assert outs[0] == outs[1]
    # canonical form regardless of key order on disk
    assert json.loads(outs[0].decode()) == json.loads(outs[1].decode())
