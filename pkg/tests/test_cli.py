import json
import subprocess
import sys
from fractions import Fraction

import pytest

from toriclogk import builtin_polytope
from toriclogk.cli import main
from toriclogk.serialize import parse_rational, polytope_to_obj, to_json

F = Fraction


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def bl2p2_file(tmp_path):
    path = tmp_path / "bl2p2.json"
    path.write_text(to_json(polytope_to_obj(builtin_polytope("bl2p2"), "bl2p2")))
    return str(path)


class TestCheck:
    def test_reports_geometry(self, capsys):
        payload = run_json(capsys, "check", "--builtin", "bl1p2")
        assert payload["dim"] == 2
        assert payload["reflexive"] is True
        assert payload["volume"] == 4
        assert payload["barycenter"] == ["1/12", "1/12"]
        assert len(payload["facets"]) == 4

    def test_file_input(self, capsys, bl2p2_file):
        payload = run_json(capsys, "check", "--input", bl2p2_file)
        assert payload["name"] == "bl2p2"
        assert payload["volume"] == "7/2"


class TestR:
    def test_centered(self, capsys):
        payload = run_json(capsys, "r", "--builtin", "p2")
        assert payload["R"] == 1

    def test_off_center(self, capsys, bl2p2_file):
        payload = run_json(capsys, "r", "--input", bl2p2_file)
        assert payload["R"] == "21/25"


class TestFutaki:
    def test_paper_direction(self, capsys):
        payload = run_json(
            capsys, "futaki", "--builtin", "bl1p2", "--lambda", "-1,-1", "--beta", "1/2"
        )
        assert parse_rational(payload["value"]) == F(2, 3) / 2 - 4 * F(1, 2)
        assert payload["W"] == 1
        assert payload["critical_beta"] == "6/7"

    def test_negative_lambda_without_equals(self, capsys):
        # "--lambda -1,-1" must survive argparse's option detection.
        payload = run_json(capsys, "futaki", "--builtin", "bl2p2", "--lambda", "-1,2")
        assert payload["W"] == 3


class TestClassify:
    def test_semistable_verdict_schema(self, capsys, bl2p2_file):
        payload = run_json(capsys, "classify", "--input", bl2p2_file, "--beta", "21/25")
        assert set(payload) == {"beta", "R", "verdict", "witness", "q_beta", "notes"}
        assert payload["verdict"] == "semistable"
        assert payload["witness"] == [1, 1]
        assert payload["q_beta"] == ["1/2", "1/2"]

    def test_stable_has_null_witness(self, capsys):
        payload = run_json(capsys, "classify", "--builtin", "bl1p2", "--beta", "1/2")
        assert payload["verdict"] == "stable"
        assert payload["witness"] is None


class TestSweep:
    def test_minimum_and_entries(self, capsys):
        payload = run_json(capsys, "sweep", "--builtin", "bl2p2")
        assert payload["R"] == "21/25"
        entries = {tuple(e["normal"]): e["critical_beta"] for e in payload["per_facet"]}
        assert entries[(1, 1)] == "21/25"
        assert entries[(-1, 0)] is None


class TestOracle:
    def test_identities_reported_ok(self, capsys):
        payload = run_json(
            capsys, "oracle", "--builtin", "bl1p2", "--lambda", "-1,-1", "--kmax", "6"
        )
        assert payload["fit"]["a0"] == "2/3"
        assert payload["fit"]["b0"] == 4
        assert payload["fit"]["a0_tilde"] == 6
        assert all(v == "OK" for v in payload["identities"].values())
        first = payload["table"][0]
        assert (first["k"], first["d"], first["w"]) == (1, 9, 2)


class TestP1Conic:
    def test_verdict_fields(self, capsys):
        payload = run_json(capsys, "p1conic", "--alphas", "1/2,1/2,1/2")
        assert payload["exists"] is True
        assert payload["curvature_sign"] == 1
        assert payload["stable_all"] is True
        assert payload["futaki_values"] == ["1/2", "1/2", "1/2"]

    def test_failing_pair(self, capsys):
        payload = run_json(capsys, "p1conic", "--alphas", "1/2,1/2")
        assert payload["exists"] is False
        assert payload["failed_conditions"] == ["(b,1)", "(b,2)"]


class TestErrors:
    def test_domain_error_exit_2_with_json(self, capsys):
        code, out, err = run_cli(capsys, "classify", "--builtin", "p2", "--beta", "3/2")
        assert code == 2
        assert out == ""
        error = json.loads(err)
        assert error["error"] == "BetaOutOfRange"

    def test_not_reflexive_exit_2(self, capsys, tmp_path):
        path = tmp_path / "seg.json"
        path.write_text('{"name": "seg", "dim": 1, "vertices": [[0], [1]]}')
        code, _, err = run_cli(capsys, "r", "--input", str(path))
        assert code == 2
        assert json.loads(err)["error"] == "NotReflexive"

    def test_zero_direction_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "futaki", "--builtin", "p2", "--lambda", "0,0")
        assert code == 2
        assert json.loads(err)["error"] == "ZeroDirection"

    def test_missing_file_exit_1(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "r", "--input", str(tmp_path / "missing.json"))
        assert code == 1
        assert "missing.json" in err

    def test_malformed_json_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{broken")
        code, _, err = run_cli(capsys, "check", "--input", str(path))
        assert code == 2
        assert json.loads(err)["error"] == "InvalidInput"


class TestTextFormat:
    def test_classify_text(self, capsys, monkeypatch):
        monkeypatch.setenv("TORICLOGK_COLOR", "never")
        code, out, _ = run_cli(
            capsys, "classify", "--builtin", "bl2p2", "--beta", "9/10", "--format", "text"
        )
        assert code == 0
        assert "unstable" in out
        assert "\x1b[" not in out  # no ANSI escapes when disabled

    def test_oracle_text_table(self, capsys, monkeypatch):
        monkeypatch.setenv("TORICLOGK_COLOR", "never")
        code, out, _ = run_cli(
            capsys, "oracle", "--builtin", "bl1p2", "--lambda", "-1,-1", "--format", "text"
        )
        assert code == 0
        assert "identities:" in out
        assert "OK" in out


class TestOutputFile:
    def test_report_written_to_path(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys, "sweep", "--builtin", "bl1p2", "--output", str(target)
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["R"] == "6/7"


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["sweep", "--builtin", "bl2p2"],
            ["classify", "--builtin", "bl2p2", "--beta", "21/25"],
        ],
    )
    def test_byte_identical_runs(self, argv):
        # Criterion-level check through the real interpreter boundary.
        runs = [
            subprocess.run(
                [sys.executable, "-m", "toriclogk", *argv],
                capture_output=True,
                check=True,
            ).stdout
            for _ in range(2)
        ]
        assert runs[0] == runs[1]
        assert runs[0]

    def test_in_process_runs_identical(self, capsys):
        first = run_cli(capsys, "sweep", "--builtin", "bl1p2")
        second = run_cli(capsys, "sweep", "--builtin", "bl1p2")
        assert first == second
