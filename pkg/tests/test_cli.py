import json

import pytest

from sidonkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_theta_and_encode_chain(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    code, out, _ = run_cli(capsys, "theta", "--k", "2", "--ell", "2", "--out", str(graph))
    assert code == 0 and "girth 4" in out
    set_file = tmp_path / "x.txt"
    map_file = tmp_path / "map.txt"
    code, out, _ = run_cli(
        capsys, "encode", "--graph", str(graph), "--k", "2",
        "--out-set", str(set_file), "--out-map", str(map_file),
    )
    assert code == 0
    assert set_file.read_text().split() == ["20", "120", "500", "600"]
    assert "x 20 1 2" in map_file.read_text()

    code, out, _ = run_cli(capsys, "--format", "json", "classify",
                           "--set", str(set_file), "--k", "2")
    assert code == 0
    assert json.loads(out) == {"ell": 2, "is_bkl": True, "k": 2}

    code, out, _ = run_cli(capsys, "rho", "--set", str(set_file), "--k", "2", "--n", "620")
    assert code == 0 and "2 representation(s)" in out

    code, out, _ = run_cli(capsys, "verify", "--set", str(set_file), "--k", "2", "--ell", "2")
    assert code == 0 and "PASS" in out

    code, out, _ = run_cli(capsys, "extract", "--graph", str(graph), "--k", "2")
    assert code == 0 and "chosen side" in out

    code, out, _ = run_cli(capsys, "ramsey", "check-set", "--set", str(set_file),
                           "--k", "2", "--ell", "2", "--r", "2")
    assert code == 0 and "does not hold" in out

    code, out, _ = run_cli(capsys, "ramsey", "check-graph", "--graph", str(graph),
                           "--k", "2", "--ell", "2", "--r", "1")
    assert code == 0 and "holds" in out

    code, out, _ = run_cli(capsys, "oracle", "colorings", "--set", str(set_file),
                           "--k", "2", "--ell", "2", "--r", "2")
    assert code == 0 and "does not hold" in out

    code, out, _ = run_cli(capsys, "oracle", "sums", "--set", str(set_file), "--k", "2")
    assert code == 0 and "620: 2" in out

    code, out, _ = run_cli(capsys, "oracle", "cycles", "--graph", str(graph), "--s", "4")
    assert code == 0 and "1 induced cycle(s)" in out


def test_verify_failure_exit_code(tmp_path, capsys):
    set_file = tmp_path / "ap.txt"
    set_file.write_text("1\n2\n3\n4\n5\n")
    code, out, _ = run_cli(capsys, "verify", "--set", str(set_file), "--k", "2", "--ell", "3")
    assert code == 1 and "FAIL" in out


def test_pipeline_writes_bundle_and_manifest(tmp_path, capsys):
    outdir = tmp_path / "run"
    code, out, _ = run_cli(capsys, "pipeline", "--k", "2", "--ell", "2",
                           "--outdir", str(outdir))
    assert code == 0 and "bundle: PASS" in out
    bundle = json.loads((outdir / "bundle.json").read_text())
    manifest = json.loads((outdir / "manifest.json").read_text())
    assert bundle["passed"] is True
    assert bundle["stages"]["arrow"]["holds"] is False
    assert manifest["workers"] == 1
    assert "wall_time_s" in manifest


def test_pipeline_names_failing_stage(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("v 2\n")  # no edges: the encode stage must reject it
    code, _, err = run_cli(capsys, "pipeline", "--k", "2", "--ell", "2", "--graph", str(bad))
    assert code == 1
    assert "encode" in err


def test_malformed_graph_file_is_an_input_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("vertices 4\n")
    code, _, err = run_cli(capsys, "encode", "--graph", str(bad), "--k", "2")
    assert code == 1 and "error" in err


def test_guard_refusal_exit_code(tmp_path, capsys):
    set_file = tmp_path / "x.txt"
    set_file.write_text("\n".join(str(i) for i in range(1, 30)) + "\n")
    code, _, err = run_cli(capsys, "ramsey", "check-set", "--set", str(set_file),
                           "--k", "2", "--ell", "2", "--r", "2")
    assert code == 2 and "refused" in err


def test_config_file_and_env_override(tmp_path, capsys, monkeypatch):
    set_file = tmp_path / "x.txt"
    set_file.write_text("20\n120\n500\n600\n")
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("arrow_max_colorings = 4\n")
    code, _, err = run_cli(capsys, "--config", str(cfg), "ramsey", "check-set",
                           "--set", str(set_file), "--k", "2", "--ell", "2", "--r", "2")
    assert code == 2
    monkeypatch.setenv("SIDONKIT_ARROW_MAX_COLORINGS", "1024")
    code, out, _ = run_cli(capsys, "--config", str(cfg), "ramsey", "check-set",
                           "--set", str(set_file), "--k", "2", "--ell", "2", "--r", "2")
    assert code == 0 and "does not hold" in out


def test_forest_cli(tmp_path, capsys, eight_triangle_family, ring_family_on_triangulated_host,
                    fan_pool):
    from sidonkit.forest import write_family_file

    fam = tmp_path / "fam.txt"
    write_family_file(fam, eight_triangle_family)
    code, out, _ = run_cli(capsys, "forest", "check", "--family", str(fam))
    assert code == 0 and "yes" in out

    ring = tmp_path / "ring.txt"
    write_family_file(ring, ring_family_on_triangulated_host)
    code, out, _ = run_cli(capsys, "forest", "check", "--family", str(ring))
    assert code == 0 and "no" in out

    pool = tmp_path / "pool.txt"
    write_family_file(pool, fan_pool)
    code, out, _ = run_cli(capsys, "forest", "extend", "--family", str(ring),
                           "--pool", str(pool), "--budget", "3")
    assert code == 0 and "extension of size 3" in out


def test_json_output_is_canonical(tmp_path, capsys):
    set_file = tmp_path / "x.txt"
    set_file.write_text("20\n120\n500\n600\n")
    code, out1, _ = run_cli(capsys, "--format", "json", "verify", "--set", str(set_file),
                            "--k", "2", "--ell", "2")
    code, out2, _ = run_cli(capsys, "--format", "json", "verify", "--set", str(set_file),
                            "--k", "2", "--ell", "2")
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["passed"] is True
