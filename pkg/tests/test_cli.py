import subprocess
import sys

import numpy as np
import pytest

from muxry.angle_transform import AngleVector, thetas_from_phis
from muxry.cli import FormatError, format_angles, format_circuit, main, parse_angles, parse_circuit
from muxry.synth import Circuit, CNot, RotY, emit_optimized


@pytest.fixture
def angles_file(tmp_path, rng):
    def make(m, values=None):
        if values is None:
            values = rng.uniform(-np.pi, np.pi, size=1 << m)
        path = tmp_path / f"angles_m{m}.txt"
        path.write_text(format_angles(AngleVector.control(values)))
        return path

    return make


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_gray_m3(capsys):
    code, out, _ = run(capsys, "gray", "-m", 3)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "2,1,2,0,2,1,2"
    assert lines[1:] == ["000", "100", "110", "010", "011", "111", "101", "001"]


def test_gray_small(capsys):
    assert run(capsys, "gray", "-m", 1)[1].splitlines() == ["0", "0", "1"]
    assert run(capsys, "gray", "-m", 2)[1].splitlines() == ["1,0,1", "00", "10", "11", "01"]


@pytest.mark.parametrize("m", ["0", "31", "x"])
def test_gray_bad_width(capsys, m):
    with pytest.raises(SystemExit) as exc:
        main(["gray", "-m", m])
    assert exc.value.code == 2
    assert "m" in capsys.readouterr().err


def gate_lines(text, kind):
    return [line for line in text.splitlines() if line.startswith(kind)]


def test_synth_default_m2(capsys, angles_file, tmp_path):
    src = angles_file(2)
    out = tmp_path / "c.txt"
    code, _, err = run(capsys, "synth", "--angles", src, "--out", out)
    assert code == 0
    assert "rotations=4 cnots=4" in err
    text = out.read_text()
    assert text.startswith("#")
    assert gate_lines(text, "CNOT") == ["CNOT 1 -> 2", "CNOT 0 -> 2", "CNOT 1 -> 2", "CNOT 0 -> 2"]
    phis = parse_angles(src.read_text())
    assert parse_circuit(text) == emit_optimized(thetas_from_phis(phis))


def test_synth_no_cancel(capsys, angles_file):
    code, out, err = run(capsys, "synth", "--angles", angles_file(2), "--order", "lazy", "--no-cancel")
    assert code == 0
    assert "rotations=4 cnots=8" in err
    assert len(gate_lines(out, "ROTY")) == 4 and len(gate_lines(out, "CNOT")) == 8


def test_synth_natural_cancel_keeps_extra_cnots(capsys, angles_file):
    _, out, _ = run(capsys, "synth", "--angles", angles_file(3), "--order", "natural")
    assert len(gate_lines(out, "CNOT")) > 8


def test_synth_m0(capsys, angles_file):
    _, out, _ = run(capsys, "synth", "--angles", angles_file(0, [0.125]))
    assert gate_lines(out, "ROTY") == ["ROTY 0.125 AT 0"]
    assert gate_lines(out, "CNOT") == []


def test_circuit_round_trip_exact(rng):
    th = AngleVector.subscript(rng.normal(size=32) * 1e3)
    c = emit_optimized(th)
    assert parse_circuit(format_circuit(c)) == c


def test_angles_round_trip_exact(rng):
    phis = AngleVector.control(rng.normal(size=16))
    assert parse_angles(format_angles(phis)) == phis


def test_angles_comments_and_blanks():
    text = "# header\n\nm 1\n  0.5\n# mid\n\n-0.25\n"
    np.testing.assert_array_equal(parse_angles(text).values, [0.5, -0.25])


@pytest.mark.parametrize(
    "text",
    ["", "m 2\n1\n2\n3\n", "m 1\n1\n2\n3\n", "n 1\n1\n2\n", "m 1\n1\nnan\n", "m 1\n1\nabc\n", "m -1\n"],
)
def test_angles_malformed(text):
    with pytest.raises(FormatError):
        parse_angles(text)


@pytest.mark.parametrize(
    "text",
    ["", "NB x\n", "NB 2\nCNOT 1 -> 1\n", "NB 2\nCNOT 0 -> 2\n", "NB 2\nROTY 1.0 ON 0\n", "NB 2\nHAD 0\n"],
)
def test_circuit_malformed(text):
    with pytest.raises(FormatError):
        parse_circuit(text)


def test_parse_circuit_comments():
    c = parse_circuit("# x\nNB 2\nROTY -0.5 AT 1\n# y\nCNOT 0 -> 1\n")
    assert c == Circuit(2, (RotY(-0.5, 1), CNot(0, 1)))


@pytest.mark.parametrize("m", [0, 1, 2, 3, 5])
@pytest.mark.parametrize("flags", [(), ("--no-cancel",), ("--order", "natural", "--no-cancel"), ("--order", "natural")])
def test_synth_then_verify(capsys, angles_file, tmp_path, m, flags):
    src = angles_file(m)
    out = tmp_path / "c.txt"
    assert run(capsys, "synth", "--angles", src, "--out", out, *flags)[0] == 0
    code, stdout, _ = run(capsys, "verify", "--angles", src, "--circuit", out)
    assert code == 0
    assert float(stdout.strip().split("=")[1]) <= 1e-10


def drop_first_cnot(path):
    lines = path.read_text().splitlines(keepends=True)
    i = next(k for k, line in enumerate(lines) if line.startswith("CNOT"))
    path.write_text("".join(lines[:i] + lines[i + 1:]))


def test_verify_detects_deleted_cnot(capsys, angles_file, tmp_path):
    src = angles_file(3)
    out = tmp_path / "c.txt"
    run(capsys, "synth", "--angles", src, "--out", out)
    drop_first_cnot(out)
    code, stdout, _ = run(capsys, "verify", "--angles", src, "--circuit", out)
    assert code == 1
    assert stdout.startswith("max_abs_diff=")


def test_verify_zero_angles_empty_circuit(capsys, angles_file, tmp_path):
    src = angles_file(2, [0.0] * 4)
    circ = tmp_path / "empty.txt"
    circ.write_text("NB 3\n")
    assert run(capsys, "verify", "--angles", src, "--circuit", circ)[0] == 0


def test_verify_width_mismatch(capsys, angles_file, tmp_path):
    circ = tmp_path / "c.txt"
    circ.write_text("NB 2\n")
    code, _, err = run(capsys, "verify", "--angles", angles_file(2), "--circuit", circ)
    assert code == 2 and "NB=2" in err


def test_verify_tol(capsys, angles_file, tmp_path):
    src = angles_file(1, [0.1, 0.2])
    circ = tmp_path / "c.txt"
    circ.write_text("NB 2\n")
    assert run(capsys, "verify", "--angles", src, "--circuit", circ)[0] == 1
    assert run(capsys, "verify", "--angles", src, "--circuit", circ, "--tol", "0.5")[0] == 0


def test_verify_spot_check_above_dense_guard(capsys, angles_file, tmp_path):
    src = angles_file(11)
    out = tmp_path / "c.txt"
    run(capsys, "synth", "--angles", src, "--out", out)
    assert run(capsys, "verify", "--angles", src, "--circuit", out)[0] == 0
    drop_first_cnot(out)
    assert run(capsys, "verify", "--angles", src, "--circuit", out)[0] == 1


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "synth", "--angles", tmp_path / "nope.txt")
    assert code == 2 and err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "muxry", "gray", "-m", "3"], capture_output=True, text=True, check=True
    )
    assert proc.stdout.splitlines()[0] == "2,1,2,0,2,1,2"
