import json
import math
import subprocess
import sys

import pytest

GAP_POINT = '{"n":3,"coords":[[2.5,0],[1.25,0],[0.5,0]]}'
WORKED_POINT = '{"n":3,"coords":[[1.5,0],[0.75,0],[0.5,0]]}'


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "polydisc.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_membership_tilde_g_true():
    code, out, _ = run_cli("membership", "--set", "tilde-g", "--point", GAP_POINT)
    assert code == 0
    assert json.loads(out)["verdict"] is True


def test_membership_g_false_with_assert():
    code, out, _ = run_cli(
        "membership", "--set", "g", "--point", GAP_POINT, "--assert"
    )
    assert code == 1
    assert json.loads(out)["verdict"] is False


def test_membership_malformed_json_exit_2():
    code, _, err = run_cli("membership", "--set", "g", "--point", '{"n":3}')
    assert code == 2
    assert "coords" in err


def test_membership_point_from_file_and_stdin(tmp_path):
    pf = tmp_path / "point.json"
    pf.write_text(GAP_POINT)
    code, out, _ = run_cli("membership", "--set", "tilde-g", "--point", str(pf))
    assert code == 0 and json.loads(out)["verdict"] is True
    proc = subprocess.run(
        [sys.executable, "-m", "polydisc.cli", "membership", "--set", "tilde-g",
         "--point", "-"],
        input=GAP_POINT, capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] is True


def test_band_validation_exit_2():
    code, _, err = run_cli(
        "membership", "--set", "g", "--point", GAP_POINT, "--band", "0.1"
    )
    assert code == 2 and "band" in err


def test_membership_bad_condition_exit_2():
    code, _, err = run_cli(
        "membership", "--set", "tilde-g", "--point", GAP_POINT, "--cond", "C99"
    )
    assert code == 2


def test_distance_seven_digits():
    code, out, _ = run_cli("distance", "--point", WORKED_POINT, "--grid", "512")
    assert code == 0
    rep = json.loads(out)
    assert f"{rep['closed_form']:.7f}" == "1.0986123"
    assert rep["lempert_upper"] == pytest.approx(math.atanh(0.8), abs=1e-9)


def test_schwarz_all_conditions():
    code, out, _ = run_cli(
        "schwarz", "--point", WORKED_POINT, "--lambda0=-0.8,0", "--cond", "all"
    )
    assert code == 0
    rep = json.loads(out)
    assert len(rep["conditions"]) == 10
    assert rep["verdict"] is True


def test_interpolate_worked_family_eval():
    code, out, _ = run_cli(
        "interpolate", "--point", WORKED_POINT, "--worked-family", "--t", "0.5",
        "--eval=-0.8,0", "--eval", "0,0",
    )
    assert code == 0
    rep = json.loads(out)
    target = rep["evaluations"][0]["value"]["coords"]
    assert target[0][0] == pytest.approx(1.5, abs=1e-10)
    assert target[2][0] == pytest.approx(0.5, abs=1e-10)
    origin = rep["evaluations"][1]["value"]["coords"]
    assert max(abs(c[0]) + abs(c[1]) for c in origin) <= 1e-10


def test_interpolate_strict_build():
    point = '{"n":3,"coords":[[1.35,0],[0.675,0],[0.45,0]]}'
    code, out, _ = run_cli(
        "interpolate", "--point", point, "--lambda0=-0.8,0", "--eval=-0.8,0"
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["disc"]["kind"] == "matrix_mobius"
    val = rep["evaluations"][0]["value"]["coords"]
    assert val[0][0] == pytest.approx(1.35, abs=1e-9)


def test_witness_commands():
    code, out, _ = run_cli("witness", "--kind", "nonconvex", "--n", "4")
    assert code == 0 and json.loads(out)["midpoint_in_closure"] is False
    code, out, _ = run_cli("witness", "--kind", "noncircular", "--n", "3")
    assert code == 0 and json.loads(out)["rotated_in_closure"] is False
    code, out, _ = run_cli(
        "witness", "--kind", "separating",
        "--point", '{"n":3,"coords":[[4,0],[0,0],[0,0]]}',
    )
    rep = json.loads(out)
    assert code == 0 and rep["polynomial"]["value_at_target"] > 1.0


def test_oracle_sweep_clean():
    code, out, _ = run_cli(
        "oracle", "--dims", "2,3", "--samples", "600", "--assert"
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["failures"] == 0 and rep["checked"] >= 600


def test_oracle_sweep_parallel_matches_serial():
    base = ("oracle", "--dims", "2,3", "--samples", "300", "--seed", "11")
    _, out1, _ = run_cli(*base, "--jobs", "1")
    _, out2, _ = run_cli(*base, "--jobs", "2")
    assert json.loads(out1) == json.loads(out2)


def test_plot_slice_header_and_shape(tmp_path):
    out_file = tmp_path / "slice.csv"
    code, _, _ = run_cli(
        "plot-slice", "--point", WORKED_POINT, "--resolution", "11",
        "--output", str(out_file),
    )
    assert code == 0
    lines = out_file.read_text().strip().splitlines()
    assert lines[0] == "re,im,in_tilde_g,in_g"
    assert len(lines) == 1 + 11 * 11
    # the raster must contain both inside and outside samples
    cells = {tuple(line.split(",")[2:]) for line in lines[1:]}
    assert ("1", "1") in cells and ("0", "0") in cells


def test_regress_command():
    code, out, _ = run_cli("regress", "--samples", "120", "--assert")
    assert code == 0
    rep = json.loads(out)
    assert max(rep["identities"]["max_rel_err"].values()) < 1e-9
    assert rep["membership_equivalence"]["disagreements"] == 0
    assert rep["schwarz_equivalence"]["disagreements"] == 0


def test_determinism_byte_identical():
    args = ("distance", "--point", WORKED_POINT, "--grid", "256", "--seed", "7")
    _, out1, _ = run_cli(*args)
    _, out2, _ = run_cli(*args)
    assert out1 == out2


def test_report_round_trips_through_own_schema():
    from polydisc.membership import in_tilde_g
    from polydisc.mobius import CPoint

    code, out, _ = run_cli("membership", "--set", "tilde-g", "--point", GAP_POINT)
    rep = json.loads(out)
    point = CPoint.from_json(rep["point"])
    again = in_tilde_g(point).to_json()
    assert again == rep
