"""End-to-end runs of every subcommand through main(argv)."""

from __future__ import annotations

import json

import pytest

from tamedeg import compose_word, decide, parse_map_file, parse_word_file, scan, scan_rows
from tamedeg.cli import main
from tamedeg.parsing import format_map_file, format_polynomial
from tamedeg.automorphisms import build_example_map, example_word, format_word_file
from tamedeg.verify import BRACKET_XY, BRACKET_XZ, BRACKET_YZ


@pytest.fixture(autouse=True)
def serial_scans(monkeypatch):
    monkeypatch.setenv("TAME_MDEG_THREADS", "1")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDecide:
    def test_human_output(self, capsys):
        code, out, _ = run(capsys, "decide", "3", "5", "11")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "triple: (3, 5, 11)"
        assert lines[1] == "verdict: Tame"
        assert lines[2] == "reason: SemigroupMember"
        assert lines[3] == "representation: d3 = 2*d1 + 1*d2"
        assert lines[4].startswith("witness: ") and lines[4].endswith(" steps")

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "decide", "3", "5", "7", "--json")
        assert code == 0
        assert json.loads(out) == {
            "triple": [3, 5, 7],
            "verdict": "NotTame",
            "reason": "Theorem3Exclusion",
            "representation": None,
            "witness_len": None,
            "failed_hypotheses": [],
        }

    def test_witness_round_trips(self, capsys):
        code, out, _ = run(capsys, "decide", "3", "5", "11", "--witness")
        assert code == 0
        word_text = out[out.index("vars:"):]
        steps, names = parse_word_file(word_text)
        assert names == ("x", "y", "z")
        assert compose_word(steps).mdeg() == (3, 5, 11)

    def test_json_witness_field(self, capsys):
        code, out, _ = run(capsys, "decide", "10", "23", "25", "--json", "--witness")
        assert code == 0
        payload = json.loads(out)
        assert payload["witness_len"] == 5
        assert payload["witness"] == format_word_file(example_word(), ("x", "y", "z"))

    def test_input_is_normalized(self, capsys):
        code, out, _ = run(capsys, "decide", "25", "10", "23")
        assert code == 0
        assert "reason: KnownInstance" in out

    def test_invalid_degree_is_a_domain_error(self, capsys):
        code, _, err = run(capsys, "decide", "0", "5", "7")
        assert code == 1
        assert "positive" in err

    def test_missing_argument_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "decide", "3", "5")
        assert code == 2
        assert "usage" in err


class TestScan:
    def test_csv_matches_library_rows(self, capsys):
        code, out, _ = run(capsys, "scan", "--max", "5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "d1,d2,d3,verdict,reason,s,t,witness_len"
        assert len(lines) == 36
        expected = [
            ",".join("" if row[k] is None else str(row[k]) for k in
                     ("d1", "d2", "d3", "verdict", "reason", "s", "t", "witness_len"))
            for row in scan_rows(scan(5))
        ]
        assert lines[1:] == expected
        assert "3,5,5,Tame,SemigroupMember,0,1," in out

    def test_json_matches_library_rows(self, capsys):
        code, out, _ = run(capsys, "scan", "--max", "5", "--format", "json")
        assert code == 0
        assert json.loads(out) == scan_rows(scan(5))

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "rows.csv"
        code, out, _ = run(capsys, "scan", "--max", "4", "--out", str(path))
        assert code == 0
        assert out == ""
        content = path.read_text(encoding="utf-8")
        assert content.endswith("\n")
        assert content.splitlines()[0] == "d1,d2,d3,verdict,reason,s,t,witness_len"

    def test_repeat_runs_are_identical(self, capsys):
        first = run(capsys, "scan", "--max", "6")
        second = run(capsys, "scan", "--max", "6")
        assert first == second

    def test_max_too_small(self, capsys):
        code, _, err = run(capsys, "scan", "--max", "2")
        assert code == 1
        assert "max_degree" in err

    def test_bad_worker_env(self, capsys, monkeypatch):
        monkeypatch.setenv("TAME_MDEG_THREADS", "many")
        code, _, err = run(capsys, "scan", "--max", "5")
        assert code == 1
        assert "TAME_MDEG_THREADS" in err


class TestBracket:
    def test_coordinate_pair(self, capsys):
        code, out, _ = run(capsys, "bracket", "x", "y")
        assert code == 0
        assert out == "(1)·[x,y]\ndegree: 2\n"

    def test_dependent_pair_is_zero(self, capsys):
        code, out, _ = run(capsys, "bracket", "x", "x^2")
        assert code == 0
        assert out == "0\ndegree: -inf\n"

    def test_example_pair_from_files(self, capsys, tmp_path):
        pmap = build_example_map()
        f_path = tmp_path / "f1.txt"
        h_path = tmp_path / "f3.txt"
        f_path.write_text(format_polynomial(pmap.components[0]) + "\n", encoding="utf-8")
        h_path.write_text("# third component\n" + format_polynomial(pmap.components[2]) + "\n", encoding="utf-8")
        assert len(h_path.read_text(encoding="utf-8")) > 200
        code, out, _ = run(capsys, "bracket", str(f_path), str(h_path), "--file")
        assert code == 0
        expected = f"({BRACKET_XY})·[x,y] + ({BRACKET_XZ})·[x,z] + ({BRACKET_YZ})·[y,z]"
        assert out == expected + "\ndegree: 8\n"

    def test_long_inline_argument_rejected(self, capsys):
        long_poly = "x" + " + x" * 67
        code, _, err = run(capsys, "bracket", long_poly, "y")
        assert code == 2
        assert "pass a file" in err

    def test_json_coefficients(self, capsys):
        code, out, _ = run(capsys, "bracket", "x*y", "z", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["degree"] == 3
        assert payload["coefficients"] == {"[x,z]": "y", "[y,z]": "x"}

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "bracket", "x +* y", "y")
        assert code == 2
        assert "parse error" in err

    def test_custom_variables(self, capsys):
        code, out, _ = run(capsys, "bracket", "a*b", "b", "--vars", "a,b")
        assert code == 0
        assert out == "(b)·[a,b]\ndegree: 3\n"


class TestSuCheck:
    def test_json_golden(self, capsys):
        code, out, _ = run(capsys, "su-check", "x^2", "y^3", "v", "--json")
        assert code == 0
        assert json.loads(out) == {
            "p": 2,
            "q": 0,
            "r": 1,
            "bracket_degree": 5,
            "lhs_degree": 3,
            "rhs_bound": 3,
            "holds": True,
        }

    def test_human_output(self, capsys):
        code, out, _ = run(capsys, "su-check", "x^2", "y^3", "v")
        assert code == 0
        assert out.splitlines()[0] == "p: 2"
        assert "holds: True" in out

    def test_dependent_pair_is_a_domain_error(self, capsys):
        code, _, err = run(capsys, "su-check", "x", "x^2", "u+v")
        assert code == 1
        assert "not a weakened pair" in err


class TestReduce:
    def triangular_file(self, tmp_path):
        from tamedeg import ElementaryStep, Polynomial
        from fractions import Fraction
        z3 = Polynomial.monomial((0, 0, 3))
        z5 = Polynomial.monomial((0, 0, 5))
        x2y = Polynomial.monomial((2, 1, 0))
        word = [ElementaryStep(0, Fraction(1), z3), ElementaryStep(1, Fraction(1), z5),
                ElementaryStep(2, Fraction(1), x2y)]
        pmap = compose_word(word)
        path = tmp_path / "map.txt"
        path.write_text(format_map_file(pmap.components, ("x", "y", "z")), encoding="utf-8")
        return path

    def test_finds_the_top_reduction(self, capsys, tmp_path):
        path = self.triangular_file(tmp_path)
        code, out, _ = run(capsys, "reduce", str(path))
        assert code == 0
        assert json.loads(out) == {
            "found": True,
            "target": 3,
            "g": "u^2*v",
            "residual": "z",
            "residual_degree": 1,
        }

    def test_explicit_target(self, capsys, tmp_path):
        path = self.triangular_file(tmp_path)
        code, out, _ = run(capsys, "reduce", str(path), "--target", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["found"] is True
        assert payload["target"] == 3
        assert payload["g"] == "u^2*v"

    def test_unreducible_target(self, capsys, tmp_path):
        # the middle component's z^5 tail is not reachable from the
        # degree 3 and 11 components within the default cap
        path = self.triangular_file(tmp_path)
        code, out, _ = run(capsys, "reduce", str(path), "--target", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["found"] is False
        assert payload["target"] is None

    def test_nothing_found(self, capsys, tmp_path):
        path = tmp_path / "map.txt"
        path.write_text("vars: x, y, z\nx\ny\nz\n", encoding="utf-8")
        code, out, _ = run(capsys, "reduce", str(path))
        assert code == 0
        assert json.loads(out) == {
            "found": False, "target": None, "g": None,
            "residual": None, "residual_degree": None,
        }

    def test_target_out_of_range(self, capsys, tmp_path):
        path = self.triangular_file(tmp_path)
        code, _, err = run(capsys, "reduce", str(path), "--target", "4")
        assert code == 1
        assert "target" in err

    def test_cap_below_target_degree(self, capsys, tmp_path):
        path = self.triangular_file(tmp_path)
        code, _, err = run(capsys, "reduce", str(path), "--target", "3", "--cap", "2")
        assert code == 1

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "reduce", str(tmp_path / "absent.txt"))
        assert code == 1
        assert "error" in err


class TestSemigroup:
    def test_non_member(self, capsys):
        code, out, _ = run(capsys, "semigroup", "3", "5", "7")
        assert code == 0
        assert json.loads(out) == {"member": False, "s": None, "t": None, "frobenius": 7}

    def test_member(self, capsys):
        code, out, _ = run(capsys, "semigroup", "3", "5", "11")
        assert code == 0
        assert json.loads(out) == {"member": True, "s": 2, "t": 1, "frobenius": 7}

    def test_no_frobenius_without_coprimality(self, capsys):
        code, out, _ = run(capsys, "semigroup", "4", "6", "20")
        assert code == 0
        assert json.loads(out) == {"member": True, "s": 5, "t": 0, "frobenius": None}


class TestMdegAndCompose:
    WORD = "vars: x, y, z\nelem 1 1 z^3\nelem 2 1 z^5\nelem 3 1 x^2*y\n"

    def test_mdeg_human(self, capsys, tmp_path):
        steps, _ = parse_word_file(self.WORD)
        path = tmp_path / "map.txt"
        path.write_text(format_map_file(compose_word(steps).components, ("x", "y", "z")), encoding="utf-8")
        code, out, _ = run(capsys, "mdeg", str(path))
        assert code == 0
        assert out == "(3, 5, 11)\n"
        code, out, _ = run(capsys, "mdeg", str(path), "--json")
        assert code == 0
        assert json.loads(out) == {"mdeg": [3, 5, 11]}

    def test_compose_emits_a_parseable_map(self, capsys, tmp_path):
        path = tmp_path / "word.txt"
        path.write_text(self.WORD, encoding="utf-8")
        code, out, _ = run(capsys, "compose", str(path))
        assert code == 0
        assert out.endswith("# mdeg: (3, 5, 11)\n")
        polys, names = parse_map_file(out[:out.index("# mdeg")])
        steps, _ = parse_word_file(self.WORD)
        assert polys == list(compose_word(steps).components)
        assert names == ("x", "y", "z")

    def test_compose_json(self, capsys, tmp_path):
        path = tmp_path / "word.txt"
        path.write_text(self.WORD, encoding="utf-8")
        code, out, _ = run(capsys, "compose", str(path), "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["vars"] == ["x", "y", "z"]
        assert payload["mdeg"] == [3, 5, 11]
        assert len(payload["components"]) == 3

    def test_bad_word_file(self, capsys, tmp_path):
        path = tmp_path / "word.txt"
        path.write_text("vars: x, y, z\nelem 4 1 z\n", encoding="utf-8")
        code, _, err = run(capsys, "compose", str(path))
        assert code == 2
        assert "parse error" in err and "line 2" in err


class TestVerifyExample:
    def test_all_checks_pass(self, capsys):
        code, out, _ = run(capsys, "verify-example")
        assert code == 0
        lines = out.splitlines()
        assert lines[-1] == "12/12 checks passed"
        assert sum(1 for line in lines if line.startswith("PASS ")) == 12
        assert not any(line.startswith("FAIL") for line in lines)

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify-example", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert len(payload["checks"]) == 12
        assert all(c["passed"] for c in payload["checks"])


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 2

    def test_no_arguments(self, capsys):
        code, _, _ = run(capsys)
        assert code == 2
