import json
import subprocess
import sys

import numpy as np
import pytest

from entcert import BipartiteShape, ppt_min_eigenvalue
from entcert.cli import main
from entcert.dmfile import (
    DmParseError,
    format_density,
    parse_density,
    read_density,
    write_density,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roundtrip_shipped_files(data_dir):
    files = sorted(data_dir.glob("*.dm"))
    assert files, "shipped example files missing"
    for path in files:
        text = path.read_text(encoding="ascii")
        assert format_density(parse_density(text)) == text


def test_make_state_and_parse_back(tmp_path, capsys):
    out = tmp_path / "w.dm"
    code, _, _ = run(capsys, "make-state", "werner", "--a", "0.5", "--out", str(out))
    assert code == 0
    rho = read_density(out)
    assert abs(rho.mat.trace() - 1) < 1e-12
    assert rho.shape == BipartiteShape(2, 2)
    # rewrite is byte-identical (canonical float repr)
    assert format_density(rho) == out.read_text(encoding="ascii")


def test_make_state_horodecki_ppt_roundtrip(tmp_path, capsys):
    out = tmp_path / "h.dm"
    code, _, _ = run(capsys, "make-state", "horodecki33", "--alpha", "3.5", "--out", str(out))
    assert code == 0
    assert ppt_min_eigenvalue(read_density(out)) >= -1e-10


def test_make_state_rejects_bad_params(tmp_path, capsys):
    code, _, err = run(capsys, "make-state", "werner", "--a", "1.5", "--out", str(tmp_path / "x.dm"))
    assert code == 3
    assert "must be in [0, 1]" in err


def test_detect_exit_codes_cover_verdicts(tmp_path, capsys):
    w = tmp_path / "w.dm"
    run(capsys, "make-state", "werner", "--a", "0.5", "--out", str(w))
    code, out, _ = run(capsys, "detect", str(w))
    assert code == 0
    assert "entangled_certified" in out
    assert abs(float(out.split("best_f:")[1].splitlines()[0]) - 0.1875) < 1e-9

    mm = tmp_path / "mm.dm"
    run(capsys, "make-state", "iso23", "--a", "0", "--out", str(mm))
    code, out, _ = run(capsys, "detect", str(mm))
    assert code == 2
    assert "separable" in out

    h = tmp_path / "h.dm"
    run(capsys, "make-state", "horodecki33", "--alpha", "3.5", "--out", str(h))
    code, out, _ = run(capsys, "detect", str(h))
    assert code == 1
    assert "inconclusive" in out


def test_detect_optimize_flips_iso23(tmp_path, capsys):
    iso = tmp_path / "iso.dm"
    run(capsys, "make-state", "iso23", "--a", "1", "--out", str(iso))
    code, out, _ = run(capsys, "detect", str(iso))
    assert code == 1  # identity unitaries miss it
    code, out, _ = run(
        capsys, "detect", str(iso), "--optimize", "--restarts", "6", "--seed", "1"
    )
    assert code == 0


def test_detect_optimize_weakly_entangled_shipped_state(data_dir, capsys):
    # just past the a = 1/4 threshold: optimum is only ~6.8e-3
    path = data_dir / "iso23_0.26.dm"
    assert run(capsys, "detect", str(path))[0] == 1
    code, out, _ = run(capsys, "detect", str(path), "--optimize", "--json")
    assert code == 0
    assert json.loads(out)["best_f"] > 1e-9


def test_detect_json_contains_full_report(tmp_path, capsys):
    w = tmp_path / "w.dm"
    run(capsys, "make-state", "werner", "--a", "0.5", "--out", str(w))
    code, out, _ = run(capsys, "detect", str(w), "--json")
    assert code == 0
    rec = json.loads(out)
    assert set(rec) == {
        "verdict", "best_f", "best_pair", "best_params", "y_values",
        "ppt_min", "ppt_verdict", "evaluations",
    }
    assert rec["verdict"] == "entangled_certified"
    assert abs(rec["best_f"] - 0.1875) < 1e-9
    assert rec["best_pair"] == [1, 2]
    assert set(rec["y_values"]) == {"y1", "y2", "y3", "f"}
    assert len(rec["best_params"]["theta_a"]) == 3


def test_detect_pair_flag(tmp_path, capsys):
    h = tmp_path / "h.dm"
    run(capsys, "make-state", "horodecki33", "--alpha", "5", "--out", str(h))
    code, out, _ = run(capsys, "detect", str(h), "--pair", "2", "3", "--json")
    rec = json.loads(out)
    assert rec["best_pair"] == [2, 3]
    code, _, err = run(capsys, "detect", str(h), "--pair", "1", "7")
    assert code == 4
    assert "not valid" in err


def test_ppt_command(tmp_path, capsys):
    w1 = tmp_path / "w1.dm"
    run(capsys, "make-state", "werner", "--a", "1", "--out", str(w1))
    code, out, _ = run(capsys, "ppt", str(w1))
    assert code == 0
    assert abs(float(out.split("ppt_min_eigenvalue:")[1].splitlines()[0]) - (-0.5)) < 1e-10

    boundary = tmp_path / "wb.dm"
    run(capsys, "make-state", "werner", "--a", str(1 / 3), "--out", str(boundary))
    code, out, _ = run(capsys, "ppt", str(boundary))
    assert abs(float(out.split("ppt_min_eigenvalue:")[1].splitlines()[0])) < 1e-10

    mm = tmp_path / "mm.dm"
    run(capsys, "make-state", "iso23", "--a", "0", "--out", str(mm))
    assert run(capsys, "ppt", str(mm))[0] == 2

    h45 = tmp_path / "h45.dm"
    run(capsys, "make-state", "horodecki33", "--alpha", "4.5", "--out", str(h45))
    code, out, _ = run(capsys, "ppt", str(h45))
    assert code == 0  # NPT, free entangled
    assert float(out.split("ppt_min_eigenvalue:")[1].splitlines()[0]) < 0


def test_basis_command(tmp_path, capsys):
    out = tmp_path / "b2.txt"
    code, _, _ = run(capsys, "basis", "--dim", "2", "--out", str(out))
    assert code == 0
    text = out.read_text(encoding="ascii").splitlines()
    assert text[0] == "ggm v1" and text[1] == "dim 2"
    assert text[2] == "s:1,2" and text[5] == "a:1,2" and text[8] == "d:1"
    # blocks are sigma_x, sigma_y, diag(1,-1)
    assert text[3].split() == ["0.0,0.0", "1.0,0.0"]
    assert text[6].split() == ["0.0,0.0", "0.0,-1.0"]
    assert text[9].split() == ["1.0,0.0", "0.0,0.0"]

    code, _, _ = run(capsys, "basis", "--dim", "1", "--out", str(tmp_path / "bad.txt"))
    assert code == 3


def test_basis_dim3_traceless(tmp_path, capsys):
    out = tmp_path / "b3.txt"
    run(capsys, "basis", "--dim", "3", "--out", str(out))
    lines = out.read_text(encoding="ascii").splitlines()
    labels = [l for l in lines if ":" in l and "," not in l.split(":")[0]]
    assert len(labels) == 8
    # re-parse each block and check the trace
    idx = 2
    while idx < len(lines):
        assert ":" in lines[idx]
        block = lines[idx + 1 : idx + 4]
        mat = np.array(
            [[complex(*map(float, tok.split(","))) for tok in row.split()] for row in block]
        )
        assert abs(np.trace(mat)) < 1e-14
        idx += 4


def test_scan_deterministic_and_correct(tmp_path, capsys):
    out1, out2 = tmp_path / "s1.csv", tmp_path / "s2.csv"
    args = ["scan", "iso23", "--param-steps", "11", "--p-steps", "11"]
    assert run(capsys, *args, "--out", str(out1))[0] == 0
    assert run(capsys, *args, "--out", str(out2))[0] == 0
    b1 = out1.read_bytes()
    assert b1 == out2.read_bytes()
    lines = b1.decode("ascii").splitlines()
    assert lines[0] == "param,p,f"
    assert len(lines) == 1 + 11 * 11
    for line in lines[1:]:
        a, p, f = map(float, line.split(","))
        ref = (1 + 2 * a) * (6 * a * np.sin(p) ** 2 - 2 * a - 1) / 9
        assert abs(f - ref) < 1e-9
        # values re-parse to exactly what was written
        assert ",".join(f"{v:.16e}" for v in (a, p, f)) == line


def test_scan_rejects_bad_grid(tmp_path, capsys):
    code, _, err = run(
        capsys, "scan", "werner", "--param-min", "-1", "--out", str(tmp_path / "x.csv")
    )
    assert code == 3
    assert "domain" in err


def test_parse_error_reports_line_and_column(tmp_path, capsys):
    bad = tmp_path / "bad.dm"
    bad.write_text("dm v1\ndims 2 2\n" + "0.25,0.0 0,0 0,0 0,0\n" * 3 + "0,0 0,0 oops 0.25,0\n")
    code, _, err = run(capsys, "detect", str(bad))
    assert code == 4
    assert "line 6" in err and "column 9" in err

    with pytest.raises(DmParseError) as exc_info:
        parse_density("dm v2\n")
    assert exc_info.value.line == 1


def test_invalid_density_file_rejected(tmp_path, capsys):
    # valid syntax, not a density matrix (trace 2)
    bad = tmp_path / "trace2.dm"
    bad.write_text(
        "dm v1\ndims 2 2\n"
        "1.0,0.0 0.0,0.0 0.0,0.0 0.0,0.0\n"
        "0.0,0.0 1.0,0.0 0.0,0.0 0.0,0.0\n"
        "0.0,0.0 0.0,0.0 0.0,0.0 0.0,0.0\n"
        "0.0,0.0 0.0,0.0 0.0,0.0 0.0,0.0\n"
    )
    code, _, err = run(capsys, "ppt", str(bad))
    assert code == 4
    assert "trace" in err


def test_missing_file_and_usage_errors(tmp_path, capsys):
    assert run(capsys, "detect", str(tmp_path / "nope.dm"))[0] == 4
    assert run(capsys, "frobnicate")[0] == 3
    assert run(capsys, "make-state", "werner", "--out", "x.dm")[0] == 3  # missing --a


def test_console_entry_subprocess(tmp_path):
    out = tmp_path / "w.dm"
    r = subprocess.run(
        [sys.executable, "-m", "entcert", "make-state", "werner", "--a", "0.9", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    r = subprocess.run(
        [sys.executable, "-m", "entcert", "detect", str(out)], capture_output=True, text=True
    )
    assert r.returncode == 0
    assert "entangled_certified" in r.stdout


def test_write_density_roundtrip_values(tmp_path):
    from entcert import random_density

    rho = random_density(BipartiteShape(2, 3), seed=99)
    path = tmp_path / "r.dm"
    write_density(rho, path)
    back = read_density(path)
    assert np.array_equal(back.mat, rho.mat)
    assert back.shape == rho.shape
