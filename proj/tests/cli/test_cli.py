import json
import math
import os
import subprocess

import pytest

CLI = os.environ.get("DIRACSL_CLI", "diracsl")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


@pytest.fixture
def free_problem(tmp_path):
    p = tmp_path / "problem.json"
    p.write_text(
        json.dumps(
            {
                "potential": {"type": "zero"},
                "weight": {"nodes": [1 / 3, 2 / 3], "masses": [1.0, 1.0]},
            }
        )
    )
    return str(p)


@pytest.fixture
def broken_h_problem(tmp_path):
    p = tmp_path / "problem.json"
    p.write_text(
        json.dumps(
            {
                "potential": {"type": "constant", "value": -9 * math.pi**2 / 4},
                "weight": {"nodes": [0.25, 1 / 3], "masses": [1.0, 1.0]},
            }
        )
    )
    return str(p)


def test_spectrum_json_contract(free_problem):
    r = run("spectrum", "--problem", free_problem)
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["classification"] == "finite"
    assert doc["method"] == "tridiag"
    assert doc["eigenvalues"] == pytest.approx([3.0, 9.0], abs=1e-9)
    assert doc["hypotheses"]["h0"] is True
    assert len(doc["residuals"]) == 2
    assert all(res < 1e-9 for res in doc["residuals"])


def test_spectrum_is_deterministic(free_problem):
    a = run("spectrum", "--problem", free_problem)
    b = run("spectrum", "--problem", free_problem)
    assert a.stdout == b.stdout
    assert a.stdout.endswith("\n")


def test_spectrum_csv(free_problem):
    r = run("spectrum", "--problem", free_problem, "--csv")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "eigenvalue,residual"
    assert len(lines) == 3
    assert float(lines[1].split(",")[0]) == pytest.approx(3.0, abs=1e-9)


def test_methods_agree(free_problem):
    values = {}
    for method in ("auto", "charpoly", "tridiag", "oracle"):
        r = run("spectrum", "--problem", free_problem, "--method", method)
        assert r.returncode == 0, r.stderr
        values[method] = json.loads(r.stdout)["eigenvalues"]
    for method in ("charpoly", "tridiag", "oracle"):
        assert values[method] == pytest.approx(values["auto"], abs=1e-8)


def test_tridiag_refusal_exit_code(broken_h_problem):
    r = run("spectrum", "--problem", broken_h_problem, "--method", "tridiag")
    assert r.returncode == 2
    assert "tridiagonal route unavailable" in r.stderr


def test_bad_problem_file_is_exit_one(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"potential": {"type": "zero"}}')
    r = run("spectrum", "--problem", str(p))
    assert r.returncode == 1
    assert r.stderr.startswith("error:")


def test_unknown_key_rejected(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(
        json.dumps(
            {
                "potential": {"type": "zero"},
                "weight": {"nodes": [0.5], "masses": [1.0]},
                "comment": "hi",
            }
        )
    )
    r = run("spectrum", "--problem", str(p))
    assert r.returncode == 1


def test_classify_report(free_problem):
    r = run("classify", "--problem", free_problem)
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["classification"] == "finite"
    assert doc["h"] is True
    assert doc["margins"]["h0"] == pytest.approx(0.5)


def test_charpoly_output(free_problem):
    r = run("charpoly", "--problem", free_problem)
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["coefficients"] == pytest.approx([1.0, -4 / 9, 1 / 27], abs=1e-12)
    assert doc["degenerate"] is False


def test_eigenfunction_csv(free_problem, tmp_path):
    out = tmp_path / "ef.csv"
    r = run("eigenfunction", "--problem", free_problem, "--lambda", "3.0",
            "--samples", "7", "--out", str(out))
    assert r.returncode == 0, r.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "x,E"
    assert len(lines) == 8
    r = run("eigenfunction", "--problem", free_problem, "--lambda", "2.0",
            "--out", str(out))
    assert r.returncode == 1
    assert "not an eigenvalue" in r.stderr


def test_forward_map_and_inverse_round_trip(tmp_path):
    qfile = tmp_path / "q.json"
    qfile.write_text(json.dumps({"type": "constant", "value": 5.0}))
    curve = tmp_path / "curve.csv"
    r = run("forward-map", "--potential", str(qfile), "--grid", "0.02:0.98:241",
            "--out", str(curve))
    assert r.returncode == 0, r.stderr
    lines = curve.read_text().splitlines()
    assert lines[0] == "t,lambda"
    assert len(lines) == 242

    rec = tmp_path / "recovered.csv"
    r = run("inverse", "--data", str(curve), "--out", str(rec))
    assert r.returncode == 0, r.stderr
    rows = [line.split(",") for line in rec.read_text().splitlines()[1:]]
    errs = [abs(float(qv) - 5.0) for xv, qv in rows if 0.1 <= float(xv) <= 0.9]
    assert max(errs) < 0.05


def test_inverse_validation_gate_and_force(tmp_path):
    data = tmp_path / "curve.csv"
    rows = ["t,lambda"]
    for i in range(41):
        t = 0.1 + 0.8 * i / 40
        rows.append(f"{t},{1.0 / (t * (1.0 - t))}")
    data.write_text("\n".join(rows) + "\n")
    out = tmp_path / "q.csv"
    r = run("inverse", "--data", str(data), "--out", str(out))
    assert r.returncode == 1
    assert "force" in r.stderr
    r = run("inverse", "--data", str(data), "--out", str(out), "--force")
    assert r.returncode == 0, r.stderr
    assert out.read_text().splitlines()[0] == "x,q"


def test_validate_sl_report(tmp_path):
    data = tmp_path / "curve.csv"
    rows = ["t,lambda"]
    for i in range(97):
        t = 0.02 + 0.96 * i / 96
        rows.append(f"{t},{1.0 / (t * (1.0 - t))}")
    data.write_text("\n".join(rows) + "\n")
    r = run("validate-sl", "--data", str(data))
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["overall"] is True
    assert doc["positivity"]["pass"] is True
    assert doc["limit_bands"]["heuristic"] is True


def test_forward_map_rejects_grid_touching_the_boundary(tmp_path):
    qfile = tmp_path / "q.json"
    qfile.write_text(json.dumps({"type": "zero"}))
    r = run("forward-map", "--potential", str(qfile), "--grid", "0:1:11",
            "--out", str(tmp_path / "x.csv"))
    assert r.returncode == 1


def test_zero_eigenvalue_regime_exit(tmp_path):
    qfile = tmp_path / "q.json"
    qfile.write_text(json.dumps({"type": "constant", "value": -math.pi**2}))
    r = run("forward-map", "--potential", str(qfile), "--grid", "0.2:0.8:7",
            "--out", str(tmp_path / "x.csv"))
    assert r.returncode == 2


def test_oracle_subcommand(free_problem):
    r = run("oracle", "--problem", free_problem, "--window", "-1:12")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["roots"] == pytest.approx([3.0, 9.0], abs=1e-8)
    assert doc["window"] == [-1.0, 12.0]


def test_help_and_usage_errors():
    r = run("--help")
    assert r.returncode == 0
    assert "spectrum" in r.stdout
    r = run("spectrum")  # missing --problem
    assert r.returncode == 1
    r = run("nonsense")
    assert r.returncode == 1
