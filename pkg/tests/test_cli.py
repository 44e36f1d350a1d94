import io
import json

import pytest

from dyckperm.cli import main, render_ascii
from dyckperm.paths import parse_path

from .conftest import EXAMPLE14_TEXT

EXAMPLE14_PERM_TEXT = "8,13,6,12,11,14,7,10,2,9,4,5,1,3"

RENDER14 = (
    "       22\n"
    "      1/\\202\n"
    " 01111/  \\/\\1\n"
    "0/\\/\\/      \\0\n"
    "/            \\"
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnumerate:
    def test_wd_n1(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "wd", "--n", "1")
        assert code == 0
        assert out == "UD;0,0\n"

    def test_wd_n3_has_42_lines(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "wd", "--n", "3")
        assert code == 0
        assert len(out.splitlines()) == 42

    def test_perm_n3_text(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "perm", "--n", "3")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 42
        assert lines[0] == "1,4,3,6,2,5"

    def test_records_format(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "wd", "--n", "2",
                           "--format", "records")
        records = [json.loads(line) for line in out.splitlines()]
        assert code == 0
        assert records[0] == {"steps": "UUDD", "weights": [0, 0, 0, 0]}
        assert len(records) == 5

    def test_perm_records(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "perm", "--n", "1",
                           "--format", "records")
        assert json.loads(out) == {"perm": [1, 2]}

    def test_limit(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "wd", "--n", "3",
                           "--limit", "5")
        assert code == 0
        assert len(out.splitlines()) == 5

    def test_negative_n_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "--family", "wd", "--n", "-1"])
        assert exc.value.code == 2


class TestMap:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "map", EXAMPLE14_TEXT)
        assert code == 0
        assert out.strip() == EXAMPLE14_PERM_TEXT

    def test_minimal(self, capsys):
        code, out, _ = run(capsys, "map", "UD;0,0")
        assert (code, out.strip()) == (0, "1,2")

    def test_invalid_weighting(self, capsys):
        code, out, err = run(capsys, "map", "UUDD;0,1,2,0")
        assert code == 1
        assert "C1 violated at step 3" in err

    def test_trace(self, capsys):
        code, out, _ = run(capsys, "map", EXAMPLE14_TEXT, "--trace")
        lines = out.splitlines()
        assert lines[0] == EXAMPLE14_PERM_TEXT
        records = [json.loads(line) for line in lines[1:]]
        assert [r["position"] for r in records] == [1, 2, 4, 6, 7, 8, 11]
        assert [r["position"] for r in records if r["jumped"]] == [1, 2, 6, 8]
        assert [r["distance"] for r in records if not r["jumped"]] == [1, 3, 4]
        assert records[-1]["word"] == [8, 6, 11, 7, 2, 4, 1]

    def test_trace_on_reducible_input_uses_global_positions(self, capsys):
        code, out, _ = run(capsys, "map", "UDUD;0,0,0,0", "--trace")
        lines = out.splitlines()
        assert lines[0] == "3,4,1,2"
        records = [json.loads(line) for line in lines[1:]]
        assert [r["position"] for r in records] == [1, 3]

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("UD;0,0\n"))
        code, out, _ = run(capsys, "map", "-")
        assert (code, out.strip()) == (0, "1,2")


class TestInvert:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "invert", EXAMPLE14_PERM_TEXT)
        assert code == 0
        assert out.strip() == EXAMPLE14_TEXT

    def test_minimal(self, capsys):
        code, out, _ = run(capsys, "invert", "1,2")
        assert (code, out.strip()) == (0, "UD;0,0")

    def test_not_up_down(self, capsys):
        code, out, err = run(capsys, "invert", "2,1")
        assert code == 1
        assert "not in image" in err and "up-down" in err

    def test_pipe_coherence(self, capsys):
        for text in (EXAMPLE14_TEXT, "UD;0,0", "UDUD;0,0,0,0", "UUDD;0,1,1,0",
                     "UUDDUD;0,0,0,0,0,0"):
            code, out, _ = run(capsys, "map", text)
            assert code == 0
            code, out, _ = run(capsys, "invert", out.strip())
            assert code == 0
            assert out.strip() == text


class TestCount:
    def test_small_table(self, capsys):
        code, out, _ = run(capsys, "count", "--max-n", "3")
        assert code == 0
        assert out.splitlines() == [
            "0: 1 (ref 1)",
            "1: 1 (ref 1)",
            "2: 5 (ref 5)",
            "3: 42 (ref 42)",
        ]

    def test_zero(self, capsys):
        code, out, _ = run(capsys, "count", "--max-n", "0")
        assert (code, out.strip()) == (0, "0: 1 (ref 1)")


class TestVerify:
    def test_single_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "bijectivity", "--max-n", "2")
        record = json.loads(out)
        assert code == 0
        assert record["suite"] == "bijectivity"
        assert record["verdict"] == "pass"
        assert record["nRange"] == [0, 2]

    def test_all_suites_trivially(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "all", "--max-n", "1")
        records = [json.loads(line) for line in out.splitlines()]
        assert code == 0
        assert len(records) == 11
        assert all(r["verdict"] == "pass" for r in records)

    def test_floor_rule_documented_verdict(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "bijectivity",
                           "--max-n", "3", "--split-rule", "floor")
        record = json.loads(out)
        assert code == 1
        assert record["verdict"] == "fail"

    def test_unknown_suite_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "nonsense"])
        assert exc.value.code == 2


class TestRender:
    def test_worked_example_golden(self, capsys):
        code, out, _ = run(capsys, "render", EXAMPLE14_TEXT)
        assert code == 0
        assert out == RENDER14 + "\n"

    def test_minimal(self, capsys):
        code, out, _ = run(capsys, "render", "UD;0,0")
        assert (code, out) == (0, "00\n/\\\n")

    def test_invalid_input(self, capsys):
        code, out, err = run(capsys, "render", "UDD;0,0,0")
        assert code == 1
        assert "not a Dyck path" in err

    def test_render_function_direct(self):
        assert render_ascii(parse_path(EXAMPLE14_TEXT)) == RENDER14


class TestDeterminism:
    def test_byte_identical_output(self, capsys):
        _, first, _ = run(capsys, "enumerate", "--family", "wd", "--n", "3")
        _, second, _ = run(capsys, "enumerate", "--family", "wd", "--n", "3")
        assert first == second
