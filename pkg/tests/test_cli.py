import json
import subprocess
import sys

import numpy as np
import pytest

from reflectionless_lab import cli
from reflectionless_lab.potentials import PotentialSpec, evaluate


def run_main(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_potential_csv_round_trip(capsys):
    code, out, _ = run_main(capsys, "potential", "--family", "scarf2", "--a", "1.3", "--b", "0.4",
                            "--points", "41")
    assert code == 0
    cols, rows = cli.read_csv(out)
    assert cols == ["x", "re_V", "im_V"]
    assert len(rows) == 41
    x = np.array([float(r[0]) for r in rows])
    v = np.array([complex(float(r[1]), float(r[2])) for r in rows])
    # parsing the text gives back the exact doubles
    np.testing.assert_array_equal(x, np.linspace(-5, 5, 41))
    ref = np.asarray(evaluate(PotentialSpec.scarf2(1.3, 0.4), x))
    np.testing.assert_array_equal(v, ref)
    # and re-serializing reproduces the text
    assert [[cli.fmt(float(c)) for c in r] for r in rows] == rows


def test_potential_json_round_trip(capsys):
    code, out, _ = run_main(capsys, "potential", "--family", "realsech", "--N", "3", "--points", "11",
                            "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["spec"]["family"] == "realsech"
    x = np.array([r[0] for r in doc["rows"]])
    np.testing.assert_array_equal([r[1] for r in doc["rows"]], evaluate(PotentialSpec.real_sech(3), x))
    assert json.dumps(json.loads(out), indent=1) + "\n" == out


def test_output_file(tmp_path, capsys):
    path = tmp_path / "psi.csv"
    code, out, _ = run_main(capsys, "wavefunction", "--family", "realsech", "--N", "3", "--n", "1",
                            "--points", "21", "-o", str(path))
    assert code == 0 and out == ""
    cols, rows = cli.read_csv(path.read_text())
    assert cols == ["x", "re_psi", "im_psi", "abs_psi"]
    assert len(rows) == 21


def test_scatter_sources_agree(capsys):
    code, out, _ = run_main(capsys, "scatter", "--family", "scarf2", "--a", "1.3", "--b", "0.4",
                            "--k", "0.5,2", "--incidence", "both", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 8
    by = {(r[0], r[7], r[8]): r for r in rows}
    for k in (0.5, 2.0):
        for side in ("left", "right"):
            a, n = by[(k, "analytic", side)], by[(k, "numeric", side)]
            assert abs(complex(a[1], a[2]) - complex(n[1], n[2])) < 1e-6


def test_free_family(capsys):
    code, out, _ = run_main(capsys, "scatter", "--family", "free", "--k", "1.7", "--source", "numeric",
                            "--L", "5")
    assert code == 0
    _, rows = cli.read_csv(out)
    assert abs(float(rows[0][3])) < 1e-12
    assert abs(float(rows[0][6]) - 1) < 1e-12


def test_catalog_command(capsys):
    code, out, _ = run_main(capsys, "catalog", "--N", "3", "--m", "1")
    doc = json.loads(out)
    assert code == 0
    assert doc["count"] == doc["expected_count"] == 16 == len(doc["entries"])
    assert doc["distinct_potentials"] == 8


def test_verify_count(capsys):
    code, out, _ = run_main(capsys, "verify", "--suite", "count", "--N", "4", "--m", "2")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert doc["count"] == doc["expected"] == 36


def test_verify_failure_exit_code(capsys, monkeypatch):
    from reflectionless_lab import verify

    bad = verify.Check("forced", 1.0, 0.0, False)
    monkeypatch.setitem(verify.SUITES, "specfun", lambda **_: [bad])
    code, out, _ = run_main(capsys, "verify", "--suite", "specfun")
    assert code == 1
    assert json.loads(out)["n_failed"] == 1


@pytest.mark.parametrize("argv,kind", [
    (["potential", "--family", "scarf2", "--a", "1"], "UsageError"),
    (["potential", "--family", "isofamily", "--N", "3", "--lambda", "-0.5"], "DomainError"),
    (["wavefunction", "--family", "realsech", "--N", "3", "--n", "5"], None),
    (["scatter", "--family", "realsech", "--N", "3", "--k", "0"], "PoleError"),
    (["scatter", "--family", "realsech", "--N", "3", "--k", "1", "--L", "4", "--source", "numeric"],
     "DomainError"),
    (["scatter", "--family", "realsech", "--N", "3", "--k", "x"], "UsageError"),
    (["potential", "--family", "realsech", "--N", "3", "--points", "1"], "UsageError"),
    (["nonsense"], "UsageError"),
    (["catalog", "--N", "0"], "UsageError"),
])
def test_errors_exit_2_with_json(capsys, argv, kind):
    code, out, err = run_main(capsys, *argv)
    assert code == 2
    assert out == ""
    doc = json.loads(err)
    assert doc["schema_version"] == 1 and doc["message"]
    if kind:
        assert doc["error"] == kind


def test_figure_data(capsys):
    code, out, _ = run_main(capsys, "figure", "--fig", "1c")
    assert code == 0
    cols, rows = cli.read_csv(out)
    labels = {r[0] for r in rows}
    assert labels == {"pursey", "am", "partner"}
    partner = [float(r[3]) for r in rows if r[0] == "partner"]
    assert min(partner) == pytest.approx(-6.0, abs=1e-12)


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "reflectionless_lab", "verify", "--suite", "count",
                          "--N", "2", "--m", "1"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["count"] == 10
    res = subprocess.run([sys.executable, "-m", "reflectionless_lab", "catalog"],
                         capture_output=True, text=True)
    assert res.returncode == 2
    assert json.loads(res.stderr)["error"] == "UsageError"
