"""Tests for the command-line interface and the state-file format."""

import json
import math

import numpy as np
import pytest

from ccnr.cli import CSV_HEADER, load_state_file, main, write_state_file
from ccnr.states import max_entangled, qubit_family


def _write_max_entangled_density(path):
    rho = max_entangled(2).projector()
    payload = {
        "kind": "density",
        "dims": [2, 2],
        "matrix": [[[z.real, z.imag] for z in row] for row in rho.matrix],
    }
    path.write_text(json.dumps(payload), encoding="utf-8")


def test_check_max_entangled(tmp_path, capsys):
    state_file = tmp_path / "bell.json"
    _write_max_entangled_density(state_file)
    assert main(["check", str(state_file), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["tau"] == pytest.approx(2.0, abs=1e-12)
    assert report["tau_violated"] is True
    assert report["ppt_floor"] == pytest.approx(-0.5, abs=1e-12)
    assert report["verdict"] == "entangled_certified"


def test_check_text_output(tmp_path, capsys):
    state_file = tmp_path / "bell.json"
    _write_max_entangled_density(state_file)
    assert main(["check", str(state_file)]) == 0
    out = capsys.readouterr().out
    assert "tau = 2" in out
    assert "verdict = entangled_certified" in out


def test_check_exit_code_zero_for_undecided(tmp_path, capsys):
    state_file = tmp_path / "mixed.json"
    payload = {
        "kind": "density",
        "dims": [2, 2],
        "matrix": [
            [[0.25 if i == j else 0.0, 0.0] for j in range(4)] for i in range(4)
        ],
    }
    state_file.write_text(json.dumps(payload), encoding="utf-8")
    assert main(["check", str(state_file), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["tau"] == pytest.approx(0.5, abs=1e-12)
    assert report["verdict"] == "undecided"


def test_check_malformed_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["check", str(bad)]) == 2
    assert "error" in capsys.readouterr().err


def test_check_missing_file(tmp_path, capsys):
    assert main(["check", str(tmp_path / "absent.json")]) == 2


def test_check_invariant_violation(tmp_path, capsys):
    state_file = tmp_path / "nonpsd.json"
    diag = [0.75, 0.75, -0.25, -0.25]
    payload = {
        "kind": "density",
        "dims": [2, 2],
        "matrix": [
            [[diag[i] if i == j else 0.0, 0.0] for j in range(4)] for i in range(4)
        ],
    }
    state_file.write_text(json.dumps(payload), encoding="utf-8")
    assert main(["check", str(state_file)]) == 3
    err = capsys.readouterr().err
    assert "positive_semidefinite" in err
    assert "residual" in err


def test_check_dims_override(tmp_path, capsys):
    state_file = tmp_path / "bell.json"
    rho = max_entangled(2).projector()
    payload = {
        "kind": "density",
        "dims": [4, 1],
        "matrix": [[[z.real, z.imag] for z in row] for row in rho.matrix],
    }
    state_file.write_text(json.dumps(payload), encoding="utf-8")
    assert main(["check", str(state_file), "--dims", "2,2", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["tau"] == pytest.approx(2.0, abs=1e-12)


def test_schmidt_command(tmp_path, capsys):
    state_file = tmp_path / "pure.json"
    psi = max_entangled(2)
    payload = {
        "kind": "pure",
        "dims": [2, 2],
        "matrix": [[z.real, z.imag] for z in psi.amplitudes],
    }
    state_file.write_text(json.dumps(payload), encoding="utf-8")
    assert main(["schmidt", str(state_file)]) == 0
    out = capsys.readouterr().out
    assert "schmidt_coefficients = 0.5 0.5" in out
    assert "gamma = 2" in out
    assert "robustness = 1" in out


def test_schmidt_product_state(tmp_path, capsys):
    state_file = tmp_path / "product.json"
    payload = {
        "kind": "pure",
        "dims": [2, 2],
        "matrix": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
    }
    state_file.write_text(json.dumps(payload), encoding="utf-8")
    assert main(["schmidt", str(state_file)]) == 0
    out = capsys.readouterr().out
    assert "schmidt_coefficients = 1" in out
    assert "gamma = 1" in out
    assert "robustness = 0" in out


def test_schmidt_rejects_density_file(tmp_path, capsys):
    state_file = tmp_path / "bell.json"
    _write_max_entangled_density(state_file)
    assert main(["schmidt", str(state_file)]) == 2


def test_oschmidt_command(tmp_path, capsys):
    state_file = tmp_path / "qubit.json"
    write_state_file(state_file, qubit_family(0.5))
    assert main(["oschmidt", str(state_file)]) == 0
    out = capsys.readouterr().out
    assert "tau = 1.20710678119" in out
    assert "tau_criterion = violated" in out


def test_oschmidt_rejects_pure_file(tmp_path):
    state_file = tmp_path / "pure.json"
    write_state_file(state_file, max_entangled(2))
    assert main(["oschmidt", str(state_file)]) == 2


@pytest.mark.parametrize(
    "argv,closed",
    [
        (["gen", "werner", "--d", "2", "--param", "-0.5"], 1.5),
        (["gen", "isotropic", "--d", "3", "--param", "0.8"], 2.4),
        (["gen", "bell", "--param", "0.6,0.2,0.1,0.1"], 1.2),
        (["gen", "qubit", "--param", "0.5"], (1 + math.sqrt(2)) / 2),
        (["gen", "qutrit", "--param", "4"], 19 / 21 + 2 * math.sqrt(7) / 21),
    ],
)
def test_gen_check_round_trip(tmp_path, capsys, argv, closed):
    out_file = tmp_path / "state.json"
    assert main(argv + ["--out", str(out_file)]) == 0
    capsys.readouterr()
    assert main(["check", str(out_file), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["tau"] == pytest.approx(closed, abs=1e-9)


def test_gen_random_is_seeded(tmp_path):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert main(["gen", "random", "--dims", "2,3", "--rank", "2", "--seed", "7",
                 "--out", str(first)]) == 0
    assert main(["gen", "random", "--dims", "2,3", "--rank", "2", "--seed", "7",
                 "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_gen_rejects_bad_parameters(tmp_path, capsys):
    assert main(["gen", "werner", "--d", "2", "--param", "3",
                 "--out", str(tmp_path / "x.json")]) == 2
    assert main(["gen", "bell", "--param", "0.5,0.5",
                 "--out", str(tmp_path / "y.json")]) == 2
    assert main(["gen", "werner", "--param", "0.5",
                 "--out", str(tmp_path / "z.json")]) == 2


def test_gen_file_round_trips_exactly(tmp_path):
    out_file = tmp_path / "werner.json"
    assert main(["gen", "werner", "--d", "3", "--param", "-0.25",
                 "--out", str(out_file)]) == 0
    kind, rho = load_state_file(out_file)
    assert kind == "density"
    from ccnr.realign import ccnr_tau
    from ccnr.states import werner_state

    assert ccnr_tau(rho) == pytest.approx(ccnr_tau(werner_state(3, -0.25)), abs=1e-12)


def test_sweep_csv_shape_and_values(tmp_path):
    out_file = tmp_path / "werner.csv"
    assert main(["sweep", "werner", "--d", "2", "--range=-1:1:0.5",
                 "--out", str(out_file)]) == 0
    lines = out_file.read_text(encoding="utf-8").splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 6
    first = lines[1].split(",")
    assert float(first[0]) == pytest.approx(-1.0)
    assert float(first[1]) == pytest.approx(2.0, abs=1e-9)
    assert float(first[2]) == pytest.approx(2.0)
    assert float(first[3]) == pytest.approx(2.0)
    assert first[6] == "entangled_certified"
    # numeric and closed tau agree on every row
    for line in lines[1:]:
        cells = line.split(",")
        assert float(cells[1]) == pytest.approx(float(cells[2]), abs=1e-9)


def test_sweep_qutrit_boundary_row(tmp_path):
    out_file = tmp_path / "qutrit.csv"
    assert main(["sweep", "qutrit", "--range", "2:5:0.5",
                 "--out", str(out_file)]) == 0
    rows = out_file.read_text(encoding="utf-8").splitlines()[1:]
    by_param = {row.split(",")[0]: row.split(",") for row in rows}
    assert by_param["3"][2] == "1"
    # gamma column is empty: no closed form for this family
    assert by_param["3"][3] == ""


def test_sweep_isotropic_separable_row(tmp_path):
    out_file = tmp_path / "iso.csv"
    assert main(["sweep", "isotropic", "--d", "3", "--range", "0:1:0.25",
                 "--out", str(out_file)]) == 0
    rows = {line.split(",")[0]: line.split(",") for line in
            out_file.read_text(encoding="utf-8").splitlines()[1:]}
    assert rows["0.25"][3] == "1"  # F <= 1/d: closed-form gamma certifies separability
    assert rows["0.25"][6] == "separable_certified"


def test_sweep_is_byte_deterministic(tmp_path):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    argv = ["sweep", "isotropic", "--d", "3", "--range", "0:1:0.1"]
    assert main(argv + ["--out", str(first)]) == 0
    assert main(argv + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert first.read_bytes().endswith(b"\n")
    assert b"\r" not in first.read_bytes()


def test_sweep_invalid_range(tmp_path, capsys):
    assert main(["sweep", "werner", "--d", "2", "--range", "1:0:0.5",
                 "--out", str(tmp_path / "x.csv")]) == 2
    assert main(["sweep", "werner", "--d", "2", "--range", "0:1:-0.1",
                 "--out", str(tmp_path / "y.csv")]) == 2
    assert main(["sweep", "werner", "--d", "2", "--range", "zero:1:0.1",
                 "--out", str(tmp_path / "z.csv")]) == 2


def test_sweep_unknown_family_rejected_by_parser(tmp_path, capsys):
    assert main(["sweep", "ghz", "--range", "0:1:0.5",
                 "--out", str(tmp_path / "x.csv")]) == 2


def test_state_file_serializer_round_trip(tmp_path):
    psi = max_entangled(3)
    path = tmp_path / "psi.json"
    write_state_file(path, psi)
    kind, loaded = load_state_file(path)
    assert kind == "pure"
    np.testing.assert_array_equal(loaded.amplitudes, psi.amplitudes)
