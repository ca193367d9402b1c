import json
import subprocess
import sys

import pytest

from incpat.cli import main
from incpat.enumeration import count_avoiders, count_permutations
from incpat.oeis import parse_bfile


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "--m", "1,1,1", "--r", "3"], "5\n"),
        (["count", "--m", "2,1", "--r", "3"], "3\n"),
        (["count", "--m", "1,1", "--r", "5"], "2\n"),
        (["weight", "--m", "1,1,1", "--r", "3"], "5 1\n"),
        (["weight", "--m", "2,1", "--r", "3"], "3\n"),
        (["weight", "--m", "1,1", "--r", "2"], "1 1\n"),
        (["perm", "--r", "3", "--nmax", "4"], "1\n1\n2\n5\n17\n"),
        (["perm", "--r", "2", "--nmax", "5"], "1\n" * 6),
        (["perm", "--r", "9", "--nmax", "5"], "1\n1\n2\n6\n24\n120\n"),
        (["uniform", "--s", "2", "--r", "3", "--nmax", "2"], "1\n1\n6\n"),
    ],
)
def test_computation_commands(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_uniform_paths_agree(capsys):
    _, perm, _ = run(capsys, "perm", "--r", "3", "--nmax", "4")
    _, uni, _ = run(capsys, "uniform", "--s", "1", "--r", "3", "--nmax", "4")
    assert perm == uni
    _, uni3, _ = run(capsys, "uniform", "--s", "3", "--r", "3", "--nmax", "3")
    assert int(uni3.split()[-1]) == count_avoiders((3, 3, 3), 3)


def test_weighted_uniform(capsys):
    code, out, _ = run(capsys, "uniform", "--s", "1", "--r", "3", "--nmax", "3", "--weighted")
    assert code == 0
    assert out.splitlines() == ["1", "1", "2", "5 1"]


def test_bfile_output_reparses(capsys, tmp_path):
    path = tmp_path / "seq.txt"
    code, out, _ = run(capsys, "uniform", "--s", "2", "--r", "3", "--nmax", "6", "--format", "bfile", "--out", str(path))
    assert code == 0 and out == ""
    rec = parse_bfile(path.read_text())
    assert rec.offset == 0 and len(rec) == 7
    _, out, _ = run(capsys, "perm", "--r", "4", "--nmax", "10", "--format", "bfile")
    assert parse_bfile(out).values == tuple(count_permutations(n, 4) for n in range(11))


def test_structured_output(capsys):
    _, out, _ = run(capsys, "weight", "--m", "1,1,1", "--r", "3", "--format", "structured")
    rec = json.loads(out)
    assert rec["command"] == "weight" and rec["coefficients"] == [5, 1]
    assert rec["parameters"] == {"m": [1, 1, 1], "r": 3}
    _, out, _ = run(capsys, "perm", "--r", "3", "--nmax", "2", "--format", "structured")
    assert [json.loads(line)["value"] for line in out.splitlines()] == [1, 1, 2]


def test_bfile_rejects_polynomials(capsys):
    code, out, err = run(capsys, "uniform", "--s", "1", "--r", "3", "--nmax", "3", "--weighted", "--format", "bfile")
    assert code == 2 and out == "" and "bfile" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "series", "--r", "3", "--nvars", "3", "--degree", "6"],
        ["verify", "series", "--r", "3", "--nvars", "3", "--degree", "5", "--weighted"],
        ["verify", "egf", "--r", "3", "--nmax", "12"],
        ["verify", "cluster", "--r", "3", "--kmax", "8"],
    ],
)
def test_verify_commands_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.startswith("PASS")


def test_verify_failure_exit_code(capsys, monkeypatch):
    import incpat.enumeration as en

    real = en.p_poly
    monkeypatch.setattr(en, "p_poly", lambda k, r: real(k, r) + (1 if k == 5 else 0))
    code, out, _ = run(capsys, "verify", "cluster", "--r", "3", "--kmax", "6")
    assert code == 1 and out.startswith("FAIL")


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--m", "1,x", "--r", "3"],
        ["count", "--m", "1,-1", "--r", "3"],
        ["count", "--m", "1,1", "--r", "1"],
        ["perm", "--r", "3", "--nmax", "-1"],
        ["uniform", "--s", "0", "--r", "3", "--nmax", "2"],
        ["bogus"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert capsys.readouterr().err


def test_oeis_check(capsys, tmp_path):
    (tmp_path / "b049774.txt").write_text("0 1\n1 1\n2 2\n3 5\n4 17\n")
    code, out, _ = run(capsys, "oeis-check", "--id", "A049774", "--data-dir", str(tmp_path))
    assert code == 0 and "A049774: match" in out
    (tmp_path / "b177555.txt").write_text("1 1\n2 6\n3 68\n")
    code, out, _ = run(capsys, "oeis-check", "--id", "A177555", "--data-dir", str(tmp_path))
    assert code == 1 and "MISMATCH" in out


def test_oeis_check_unknown_id(capsys, tmp_path):
    code, _, err = run(capsys, "oeis-check", "--id", "A000001", "--data-dir", str(tmp_path))
    assert code == 2 and "unknown" in err


def test_oeis_check_missing_snapshot(capsys, tmp_path):
    code, out, _ = run(capsys, "oeis-check", "--id", "A049774", "--data-dir", str(tmp_path))
    assert code == 1 and "no snapshot" in out


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "incpat", "uniform", "--s", "2", "--r", "4", "--nmax", "8", "--format", "structured"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
