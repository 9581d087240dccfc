import json

import pytest

from flagpuzzle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_labels(capsys):
    code, out = run(capsys, "labels", "--d", "1")
    assert code == 0 and out.out.split() == ["0", "1", "10"]


def test_mul(capsys):
    code, out = run(capsys, "mul", "--theory", "KT", "--lambda", "0102", "--mu", "0201")
    assert code == 0
    assert "0210: u3/u2" in out.out


def test_mul_oracle_agrees(capsys):
    code, out = run(capsys, "mul", "--theory", "K", "--lambda", "0102", "--mu", "0201", "--oracle")
    assert code == 0 and "AGREE" in out.out


def test_mul_json(capsys):
    code, out = run(capsys, "mul", "--json", "--theory", "H", "--lambda", "01", "--mu", "01")
    data = json.loads(out.out)
    assert code == 0 and list(data["constants"]) == ["01"]


def test_restrict(capsys):
    code, out = run(capsys, "restrict", "--lambda", "0101", "--sigma", "3412")
    assert code == 0 and "1 - u3*u4/(u1*u2)" in out.out


def test_pieces(capsys):
    code, out = run(capsys, "pieces", "--d", "1", "--theory", "K")
    assert code == 0 and "∆10/10/10" in out.out


@pytest.mark.parametrize("argv", [["bogus"], ["mul", "--lambda", "01x", "--mu", "01"],
                                  ["mul", "--theory", "Q", "--lambda", "01", "--mu", "01"]])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_verify_failure_exit_code(capsys):
    code, out = run(capsys, "verify", "gram")
    assert code == 1 and "FAIL" in out.out


def test_verify_crystal(capsys):
    code, out = run(capsys, "verify", "crystal")
    assert code == 0 and "PASS" in out.out


def test_render(capsys):
    code, out = run(capsys, "render", "--lambda", "0201", "--mu", "0102", "--nu", "0210", "--theory", "KT")
    assert code == 0 and out.out.count("lambda=") == 2
