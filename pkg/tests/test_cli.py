import json
from fractions import Fraction as F

from octaquartic.cli import (
    EXIT_BAD_COEFFS,
    EXIT_DISAGREE,
    EXIT_OK,
    EXIT_USAGE,
    main,
    parse_coeffs,
    parse_rational,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_rational_forms():
    assert parse_rational("3") == 3
    assert parse_rational("-3/4") == F(-3, 4)
    assert parse_rational("0.25") == F(1, 4)  # exact decimal, not a binary float
    assert parse_rational("1.1") == F(11, 10)


def test_classify_decimal_coeffs(capsys):
    code, out, _ = run(capsys, "classify", "--coeffs", "0,1,-1,0.25")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["case_label"] == "double_sphere_multiplicity_two"
    assert payload["components"] == 1
    assert payload["radii"][0]["exact"] == "sqrt(1/2)"


def test_classify_not_a_quartic_exit_2(capsys):
    code, out, err = run(capsys, "classify", "--coeffs", "0,0,1,1")
    assert code == EXIT_BAD_COEFFS
    assert "vanish" in err


def test_usage_error_exit_1(capsys):
    code, _, _ = run(capsys, "classify", "--coeffs", "1,2,3")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "classify", "--coeffs", "a,b,c,d")
    assert code == EXIT_USAGE


def test_classify_byte_stable(capsys):
    code1, out1, _ = run(capsys, "classify", "--coeffs", "1,0,-1,3/4")
    code2, out2, _ = run(capsys, "classify", "--coeffs", "1,0,-1,3/4")
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["singular_orbits"][0]["rep_exact"] == ["sqrt(1/2)"] * 3


def test_verify_agree_exit_0(capsys):
    code, out, _ = run(capsys, "verify", "--coeffs", "1,0,-1,0.5", "--resolution", "64")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["agreement"] == "agree"
    assert payload["component_count"] == 2


def test_resolution_env_override(capsys, monkeypatch):
    monkeypatch.setenv("OCTAQ_RESOLUTION", "32")
    code, out, _ = run(capsys, "verify", "--coeffs", "0,1,0,-1")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["resolution"] == 64  # stability pass doubled from 32


def test_sweep_csv(capsys):
    code, out, _ = run(
        capsys, "sweep", "--family", "eps", "--eps1", "1", "--eps2=-1",
        "--beta", "1", "--k-range=-1:1:1/20",
    )
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    header = lines[0].split(",")
    assert header[:6] == ["family", "eps1", "eps2", "beta", "k", "d"]
    assert "case_label" in header
    assert len(lines) == 1 + 41
    label_col = header.index("case_label")
    k_col = header.index("k")
    rows = [l.split(",") for l in lines[1:]]
    at = {F(r[k_col]): r[label_col] for r in rows}
    assert at[F(3, 4)] == "eight_conic_points_octahedron_faces"
    assert at[F(4, 5)] == "kummer_like_12_conic_points"
    assert at[F(0)] == "octahedron_plus_origin"


def test_sweep_b0(capsys):
    code, out, _ = run(
        capsys, "sweep", "--family", "b0", "--eps2", "-1", "--d-range", "0:1:1/4",
    )
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 1 + 5


def test_sweep_missing_args_exit_1(capsys):
    code, _, err = run(capsys, "sweep", "--family", "eps")
    assert code == EXIT_USAGE


def test_mesh_obj_output(capsys, tmp_path):
    out_path = tmp_path / "sphere.obj"
    code, _, _ = run(
        capsys, "mesh", "--coeffs", "0,1,0,-1", "--resolution", "32",
        "--out", str(out_path),
    )
    assert code == EXIT_OK
    text = out_path.read_text()
    assert text.startswith("v ")
    assert "\nf " in text


def test_group_dump(capsys):
    code, out, _ = run(capsys, "group")
    assert code == EXIT_OK
    mats = json.loads(out)
    assert len(mats) == 48
    assert [[1, 0, 0], [0, 1, 0], [0, 0, 1]] in mats
    code2, out2, _ = run(capsys, "group")
    assert out2 == out
