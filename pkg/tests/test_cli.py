from __future__ import annotations

import pytest

from conftest import GOLAY_FILE, HAMMING_FILE
from lsext.cli import main


@pytest.fixture
def hamming_file(tmp_path):
    path = tmp_path / "hamming.code"
    path.write_text(HAMMING_FILE)
    return str(path)


@pytest.fixture
def golay_file(tmp_path):
    path = tmp_path / "golay.code"
    path.write_text(GOLAY_FILE)
    return str(path)


def test_analyze_output(hamming_file, capsys):
    assert main(["analyze", hamming_file]) == 0
    out = capsys.readouterr().out
    assert "code: [7,4,3]_2" in out
    assert "weight distribution: 0:1 3:7 4:7 7:1" in out
    assert "A_d: 7" in out
    assert "min-weight representatives: 7" in out
    assert "weight gap: 1" in out


def test_analyze_gap_undefined(tmp_path, capsys):
    path = tmp_path / "rep.code"
    path.write_text("2 1 3\n1 1 1\n")
    assert main(["analyze", str(path)]) == 0
    assert "weight gap: undefined" in capsys.readouterr().out


def test_extend_writes_out_file(hamming_file, tmp_path, capsys):
    out = tmp_path / "extended.code"
    assert main(["extend", hamming_file, "--l", "1", "--out", str(out)]) == 0
    stdout = capsys.readouterr().out
    assert "extended code: [8,4,4]_2" in stdout
    assert "solutions found: 1" in stdout
    assert "search: complete" in stdout
    assert out.read_text().startswith("2 4 8\n")


def test_extend_infeasible_exit_code(hamming_file, tmp_path, capsys):
    out = tmp_path / "extended.code"
    assert main(["extend", hamming_file, "--l", "1", "--out", str(out)]) == 0
    capsys.readouterr()
    assert main(["extend", str(out), "--l", "1"]) == 1
    assert "no (l=1, s=1)-extension exists" in capsys.readouterr().out


def test_extend_rejects_s_above_gap(hamming_file, capsys):
    assert main(["extend", hamming_file, "--l", "1", "--s", "2"]) == 3
    assert "weight gap" in capsys.readouterr().err


def test_extend_strategies_agree(hamming_file, capsys):
    outputs = []
    for strategy in ("exhaustive", "bnb"):
        assert main(["extend", hamming_file, "--l", "1", "--strategy", strategy]) == 0
        lines = capsys.readouterr().out.splitlines()
        outputs.append([ln for ln in lines if ln.startswith("chosen columns")])
    assert outputs[0] == outputs[1]


def test_extend_projective(hamming_file, capsys):
    assert main(["extend", hamming_file, "--l", "1", "--projective"]) == 0
    out = capsys.readouterr().out
    assert "masked: 7" in out
    assert "extended code: [8,4,4]_2" in out


def test_puncture_exit_codes(hamming_file, tmp_path, capsys):
    ext = tmp_path / "ext.code"
    main(["extend", hamming_file, "--l", "1", "--out", str(ext)])
    capsys.readouterr()
    assert main(["puncture", str(ext), "--l", "1", "--s", "1"]) == 1
    path = tmp_path / "pad.code"
    path.write_text("2 2 4\n1 1 1 0\n0 1 0 1\n")
    assert main(["puncture", str(path), "--l", "1", "--s", "1", "--out", str(tmp_path / "p.code")]) == 0
    out = capsys.readouterr().out
    assert "punctured code: [" in out


def test_chain_writes_report(golay_file, tmp_path, capsys):
    report = tmp_path / "chain.txt"
    code = main(["chain", golay_file, "--max-l", "2", "--report", str(report)])
    assert code == 0
    stdout = capsys.readouterr().out
    assert report.read_text() == stdout
    assert "step 1: extend (l=1, s=1) on [11,6,5] -> [12,6,6]" in stdout


def test_chain_exit_when_no_step_possible(hamming_file, tmp_path, capsys):
    ext = tmp_path / "ext.code"
    main(["extend", hamming_file, "--l", "1", "--out", str(ext)])
    capsys.readouterr()
    assert main(["chain", str(ext), "--max-l", "1"]) == 1


def test_chain_target_already_met(hamming_file, capsys):
    assert main(["chain", hamming_file, "--target-d", "3"]) == 0
    assert "target distance 3 reached" in capsys.readouterr().out


def test_incidence_fano(capsys):
    assert main(["incidence", "--q", "2", "--k", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "7 7"
    assert all(row.count("1") == 3 for row in lines[1:])


def test_dump_d_header(hamming_file, capsys):
    assert main(["dump-d", hamming_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "7 15"
    assert len(lines) == 8
    assert all(ch in "01" for ch in lines[1])


def test_input_errors_exit_3(tmp_path, capsys):
    missing = str(tmp_path / "missing.code")
    assert main(["analyze", missing]) == 3
    bad = tmp_path / "bad.code"
    bad.write_text("4 2 3\n1 0 2\n0 1 4\n")
    assert main(["analyze", str(bad)]) == 3
    assert "line 3" in capsys.readouterr().err


def test_usage_error_exits_3(hamming_file):
    with pytest.raises(SystemExit) as err:
        main(["extend", hamming_file])
    assert err.value.code == 3
    with pytest.raises(SystemExit) as err:
        main(["bogus"])
    assert err.value.code == 3


def test_enum_cap_env(hamming_file, capsys, monkeypatch):
    monkeypatch.setenv("LSEXT_ENUM_CAP", "5")
    assert main(["analyze", hamming_file]) == 3
    err = capsys.readouterr().err
    assert "cap 5" in err
    monkeypatch.setenv("LSEXT_ENUM_CAP", "1000")
    assert main(["analyze", hamming_file]) == 0


def test_incidence_cap_exceeded(capsys, monkeypatch):
    monkeypatch.setenv("LSEXT_ENUM_CAP", "5")
    assert main(["incidence", "--q", "2", "--k", "4"]) == 3


def test_outputs_are_deterministic(golay_file, capsys):
    runs = []
    for _ in range(2):
        assert main(["extend", golay_file, "--l", "1"]) == 0
        runs.append(capsys.readouterr().out)
    assert runs[0] == runs[1]
