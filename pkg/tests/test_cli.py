import json

import pytest

from pascalmod.cli import parse_and_dispatch


def run(capsys, *argv):
    code = parse_and_dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDigitsCommand:
    def test_paper_example(self, capsys):
        code, out, _ = run(capsys, "digits", "2932", "--base", "9")
        assert code == 0
        assert "4017" in out
        assert "digit sum: 12" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "digits", "2932", "--base", "9", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc == {"base": 9, "digits": [7, 1, 0, 4], "display": "4017", "digit_sum": 12}

    def test_input_base(self, capsys):
        code, out, _ = run(capsys, "digits", "5342", "--base", "10", "--input-base", "7")
        assert code == 0
        assert "1892" in out

    def test_invalid_base_is_usage_error(self, capsys):
        code, _, err = run(capsys, "digits", "5", "--base", "1")
        assert code == 1
        assert err


class TestAddCommand:
    def test_paper_example_with_trace(self, capsys):
        code, out, _ = run(capsys, "add", "253", "415", "--base", "7", "--input-base", "7", "--trace")
        assert code == 0
        assert "1001 (base 7)" in out
        assert "(10+10-2)/6" in out
        assert "= 3" in out

    def test_json_trace(self, capsys):
        code, out, _ = run(capsys, "add", "11", "9", "--base", "2", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["carry_count"] == 3
        assert doc["stopping_places"] == [2, 4]
        assert doc["sum"] == 20

    def test_overflow_rejected(self, capsys):
        code, _, err = run(capsys, "add", str(2**64 - 1), "1", "--base", "10")
        assert code == 1
        assert err


class TestValuationCommand:
    def test_factorial_all_methods(self, capsys):
        code, out, _ = run(capsys, "valuation", "factorial", "132", "--prime", "5", "--method", "all")
        assert code == 0
        assert out.count("= 32") == 3
        assert "agree" in out

    def test_factorial_json(self, capsys):
        code, out, _ = run(capsys, "valuation", "factorial", "365", "--prime", "7", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["values"] == {"brute": 60, "legendre": 60, "digits": 60}
        assert doc["agree"] is True

    def test_binomial(self, capsys):
        code, out, _ = run(capsys, "valuation", "binomial", "8", "5", "--prime", "2")
        assert code == 0
        assert "[carry count]" in out and "[Legendre difference]" in out

    def test_binomial_json(self, capsys):
        code, out, _ = run(capsys, "valuation", "binomial", "49", "1", "--prime", "7", "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["carry_count"] == doc["legendre_difference"] == 2

    def test_composite_prime_rejected(self, capsys):
        code, _, err = run(capsys, "valuation", "factorial", "10", "--prime", "6")
        assert code == 1
        assert err


class TestDivisibleCommand:
    def test_true_case(self, capsys):
        code, out, _ = run(capsys, "divisible", "4", "2", "--mod", "6")
        assert code == 0
        assert "true" in out

    def test_false_case(self, capsys):
        code, out, _ = run(capsys, "divisible", "4", "2", "--mod", "4")
        assert code == 0
        assert "false" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "divisible", "4", "2", "--mod", "6", "--json")
        doc = json.loads(out)
        assert doc["divisible"] is True
        assert {v["prime"] for v in doc["prime_powers"]} == {2, 3}


class TestTriangleCommand:
    def test_ascii_zero_as_dot(self, capsys):
        code, out, _ = run(capsys, "triangle", "--mod", "2", "--rows", "3")
        assert code == 0
        assert "1 . 1" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "triangle", "--mod", "3", "--rows", "4", "--format", "json")
        doc = json.loads(out)
        assert doc == {"modulus": 3, "rows": [[1], [1, 1], [1, 2, 1], [1, 0, 0, 1]]}

    def test_methods_agree_for_primes(self, capsys):
        outs = []
        for method in ("recurrence", "lucas"):
            code, out, _ = run(capsys, "triangle", "--mod", "5", "--rows", "12", "--format", "json", "--method", method)
            assert code == 0
            outs.append(out)
        assert outs[0] == outs[1]

    def test_kummer_method_gives_mask(self, capsys):
        code, out, _ = run(capsys, "triangle", "--mod", "2", "--rows", "3", "--format", "json", "--method", "kummer")
        doc = json.loads(out)
        assert doc["rows"] == [[1], [1, 1], [1, 0, 1]]

    def test_lucas_requires_prime(self, capsys):
        code, _, err = run(capsys, "triangle", "--mod", "6", "--rows", "3", "--method", "lucas")
        assert code == 1
        assert err


class TestRenderCommand:
    def test_pbm_to_stdout(self, capsys):
        code, out, _ = run(capsys, "render", "--mod", "2", "--rows", "2", "--format", "pbm")
        assert code == 0
        assert out == "P1\n2 2\n1 0\n1 1\n"

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "mask.pbm"
        code, _, _ = run(capsys, "render", "--mod", "2", "--rows", "2", "--out", str(target))
        assert code == 0
        assert target.read_bytes() == b"P1\n2 2\n1 0\n1 1\n"

    def test_out_file_error_has_path(self, capsys, tmp_path):
        code, _, err = run(capsys, "render", "--mod", "2", "--rows", "2", "--out", str(tmp_path / "no" / "mask.pbm"))
        assert code == 1
        assert "mask.pbm" in err

    def test_composite_modulus_uses_recurrence(self, capsys):
        code, out, _ = run(capsys, "render", "--mod", "6", "--rows", "4", "--format", "pbm")
        assert code == 0
        assert out.splitlines()[2:] == ["1 0 0 0", "1 1 0 0", "1 1 1 0", "1 1 1 1"]

    def test_pgm(self, capsys):
        code, out, _ = run(capsys, "render", "--mod", "3", "--rows", "3", "--format", "pgm")
        assert code == 0
        assert out.startswith("P2\n3 3\n255\n")


class TestStripesCommand:
    def test_output(self, capsys):
        code, out, _ = run(capsys, "stripes", "--place", "1", "--rows", "4")
        assert code == 0
        assert out.startswith("P1\n4 4\n")

    def test_place_zero_rejected(self, capsys):
        code, _, err = run(capsys, "stripes", "--place", "0", "--rows", "4")
        assert code == 1
        assert "impossible" in err


class TestVerifyCommand:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "16", "--rows", "12")
        assert code == 0
        assert "all properties passed" in out

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "8", "--rows", "8", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] is True
        assert len(doc["properties"]) >= 20


class TestDispatch:
    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 1
        assert err

    def test_unknown_flag(self, capsys):
        code, _, err = run(capsys, "digits", "5", "--base", "10", "--frob")
        assert code == 1
        assert err

    def test_help_exits_zero(self, capsys):
        assert parse_and_dispatch(["--help"]) == 0
        capsys.readouterr()
