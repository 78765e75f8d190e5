import io
import json
import subprocess
import sys

import pytest

from puiseux_tree.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class TestValues:
    def test_dist_hp(self):
        assert call("dist", "hp", "--z1", "0;1", "--z2", "X^(-1/2);X^(-1/2)") == (0, "1/2\n", "")

    def test_dist_tree(self):
        code, out, _ = call("dist", "tree", "--p1", "X^(-1/2) ; -3/4", "--p2", "0 ; -2")
        assert code == 0 and out == "7/4\n"

    def test_project(self):
        code, out, _ = call("project", "--z", "X^(-1/2) + X^(-3/4) ; X^(-3/4)")
        assert out == "X^(-1/2) ; -3/4\n"

    def test_median(self):
        code, out, _ = call("median", "--p1", "0;0", "--p2", "X^(-1/2);-3/4", "--p3", "0;-2")
        assert out == "0 ; -1/2\n"

    def test_json_value(self):
        code, out, _ = call("dist", "hp", "--z1", "0;1", "--z2", "0;X", "--format", "json")
        assert json.loads(out) == {"command": "dist hp", "params": {"z1": "0;1", "z2": "0;X"}, "result": "1"}


class TestVerify:
    def test_obstruction_single(self):
        code, out, _ = call("verify", "obstruction", "--a", "0", "--max-n", "8")
        assert code == 0
        assert "n_star=2" in out
        assert out.endswith("summary: pass=1 fail=0 skip=0\n")

    def test_obstruction_skip_is_not_failure(self):
        code, out, _ = call("verify", "obstruction", "--a", "X^(-1/2) + X^(-3/4) + X^(-7/8)", "--max-n", "3")
        assert code == 0 and "skip=1" in out

    def test_cauchy_json(self):
        code, out, _ = call("verify", "cauchy", "--max-n", "5", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["checks"] == [{"name": "cauchy", "status": "pass", "witness": {"pairs": 15}}]
        assert doc["summary"] == {"pass": 1, "fail": 0, "skip": 0}

    def test_vertical_pair(self):
        code, out, _ = call("verify", "vertical", "--x", "0", "--x2", "X^(-1/2)", "--samples", "5")
        assert code == 0 and out.startswith("PASS")

    def test_axioms(self):
        code, out, _ = call("verify", "axioms", "--samples", "30")
        assert code == 0 and "pass=3" in out

    @pytest.mark.parametrize("target", ["branching", "crossratio"])
    def test_other_targets(self, target):
        code, _, _ = call("verify", target, "--max-n", "4", "--samples", "20")
        assert code == 0


class TestErrors:
    def test_nonpositive_height(self):
        code, out, err = call("dist", "hp", "--z1", "0;0", "--z2", "0;1")
        assert code == 1 and out == ""
        assert "series  :=" in err

    def test_missing_argument(self):
        assert call("dist", "hp", "--z1", "0;0")[0] == 1

    def test_syntax_error(self):
        code, _, err = call("project", "--z", "X^(1/0);1")
        assert code == 1 and "byte 5" in err

    def test_unknown_command(self):
        assert call("frobnicate")[0] == 1

    def test_vertical_needs_both_feet(self):
        assert call("verify", "vertical", "--x", "0")[0] == 1

    def test_same_feet(self):
        assert call("verify", "vertical", "--x", "X", "--x2", "X")[0] == 1

    def test_bad_window(self):
        assert call("verify", "crossratio", "--window", "1/0")[0] == 1


def test_failure_exit_code(monkeypatch):
    from puiseux_tree import counterexample
    from puiseux_tree.report import FAIL, VerificationReport

    monkeypatch.setattr(counterexample, "verify_cauchy",
                        lambda max_n: VerificationReport("cauchy", {}, FAIL, {"n": 0}))
    code, out, _ = call("verify", "cauchy")
    assert code == 2 and out.startswith("FAIL")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "puiseux_tree", "dist", "hp", "--z1", "0;1", "--z2", "0;X^3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "3\n"
