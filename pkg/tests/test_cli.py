"""Command-line surface: worked examples, exit codes, schema conformance."""

import json
from importlib import resources

import jsonschema
import pytest

from tripower.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def load_schema(name):
    text = resources.files("tripower").joinpath(f"schemas/{name}.json").read_text()
    return json.loads(text)


def check_schema(payload, name):
    jsonschema.Draft202012Validator(load_schema(name)).validate(payload)


class TestTriangle:
    def test_u_rows_4(self, capsys):
        code, out, _ = invoke(capsys, "triangle", "u", "--rows", "4")
        assert code == 0
        assert out.splitlines()[-1] == "1 19 25 19 1"

    def test_csv(self, capsys):
        code, out, _ = invoke(capsys, "triangle", "pascal", "--rows", "2",
                              "--format", "csv")
        assert code == 0
        assert out == "1\n1,1\n1,2,1\n"

    def test_json_schema(self, capsys):
        code, out, _ = invoke(capsys, "triangle", "v3", "--rows", "5",
                              "--format", "json")
        assert code == 0
        payload = json.loads(out)
        check_schema(payload, "triangle")
        assert payload["kind"] == "v3"
        assert payload["entries"][4] == ["1", "85", "85", "85", "1"]

    def test_unknown_kind(self, capsys):
        code, _, err = invoke(capsys, "triangle", "nope", "--rows", "3")
        assert code == 1 and err

    def test_negative_rows(self, capsys):
        code, _, err = invoke(capsys, "triangle", "u", "--rows", "-1")
        assert code == 1 and err


class TestExpand:
    def test_worked_example(self, capsys):
        code, out, _ = invoke(capsys, "expand", "--x", "4", "--n", "3",
                              "--strategy", "v-row", "--terms")
        assert code == 0
        lines = out.splitlines()
        assert "value: 64" in lines
        assert "terms: 1,21,21,21" in lines

    def test_json_schema(self, capsys):
        code, out, _ = invoke(capsys, "expand", "--x", "3", "--n", "5",
                              "--strategy", "gen-binomial:2:1", "--terms",
                              "--format", "json")
        assert code == 0
        payload = json.loads(out)
        check_schema(payload, "expand")
        assert payload["value"] == "243"
        assert payload["strategy"] == "gen-binomial:2:1"

    def test_terms_omitted_by_default(self, capsys):
        _, out, _ = invoke(capsys, "expand", "--x", "3", "--n", "2",
                           "--strategy", "u-row", "--format", "json")
        assert "terms" not in json.loads(out)

    def test_domain_error(self, capsys):
        code, _, err = invoke(capsys, "expand", "--x", "0", "--n", "0",
                              "--strategy", "v-row")
        assert code == 1 and "v-row" in err

    def test_bad_strategy(self, capsys):
        code, _, err = invoke(capsys, "expand", "--x", "2", "--n", "3",
                              "--strategy", "warp")
        assert code == 1 and err


class TestDifftable:
    def test_text(self, capsys):
        code, out, _ = invoke(capsys, "difftable", "--n", "3", "--xmax", "10",
                              "--depth", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["x", "x^3", "D1", "D2", "D3"]
        assert lines[1].split() == ["0", "0", "1", "6", "6"]

    def test_json_schema(self, capsys):
        code, out, _ = invoke(capsys, "difftable", "--n", "2", "--xmax", "5",
                              "--depth", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        check_schema(payload, "difftable")
        assert payload["columns"][2] == ["2", "2", "2", "2"]

    def test_depth_too_deep(self, capsys):
        code, _, err = invoke(capsys, "difftable", "--n", "3", "--xmax", "2",
                              "--depth", "5")
        assert code == 1 and err


class TestAudit:
    def test_single_record_json(self, capsys):
        code, out, _ = invoke(capsys, "audit", "--id", "E3_14",
                              "--format", "json")
        assert code == 0
        payload = json.loads(out)
        check_schema(payload, "audit")
        (rec,) = payload["records"]
        assert rec["failures"][0] == {
            "point": {"x": "3", "n": "4"},
            "lhs": "80", "rhs": "79", "residual": "1",
        }

    def test_full_run_text(self, capsys):
        code, out, _ = invoke(capsys, "audit")
        assert code == 0
        assert out.splitlines()[0] == "== identity audit =="
        assert "verified claims failing: 0" in out

    def test_full_run_json_schema(self, capsys):
        code, out, _ = invoke(capsys, "audit", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        check_schema(payload, "audit")
        assert payload["counts"]["records"] == 58

    def test_unknown_id(self, capsys):
        code, _, err = invoke(capsys, "audit", "--id", "E0_0")
        assert code == 1 and "E0_0" in err

    def test_non_evaluable_id(self, capsys):
        code, _, err = invoke(capsys, "audit", "--id", "E4_1")
        assert code == 1 and err


class TestExp:
    def test_digits_15(self, capsys):
        code, out, _ = invoke(capsys, "exp", "--x", "1", "--digits", "15")
        assert code == 0
        assert "2.718281828459045" in out
        assert "terms" in out  # reports how many terms were needed

    def test_terms_json_schema(self, capsys):
        code, out, _ = invoke(capsys, "exp", "--x", "2", "--terms", "10",
                              "--format", "json")
        assert code == 0
        payload = json.loads(out)
        check_schema(payload, "exp")
        assert payload["terms_used"] == 10
        assert payload["decimal"]["digits"] == 12

    def test_digits_and_terms_conflict(self, capsys):
        code, _, err = invoke(capsys, "exp", "--x", "1", "--digits", "9",
                              "--terms", "9")
        assert code == 1 and err

    def test_negative_x(self, capsys):
        code, _, err = invoke(capsys, "exp", "--x", "-1")
        assert code == 1 and err


class TestOeis:
    def test_check_text(self, capsys):
        code, out, _ = invoke(capsys, "oeis", "check", "--id", "A287326")
        assert code == 0
        assert out.strip() == "A287326: ok (120 terms compared)"

    def test_check_json_schema(self, capsys):
        code, out, _ = invoke(capsys, "oeis", "check", "--id", "A000124",
                              "--format", "json")
        assert code == 0
        payload = json.loads(out)
        check_schema(payload, "oeis-check")
        assert payload["ok"] is True

    def test_check_mismatch_exits_2(self, capsys, tmp_path):
        (tmp_path / "b000012.txt").write_text("0 1\n1 2\n", encoding="ascii")
        code, out, _ = invoke(capsys, "oeis", "check", "--id", "A000012",
                              "--mode", "cached", "--cache-dir", str(tmp_path))
        assert code == 2
        assert "mismatch" in out

    def test_gen(self, capsys):
        code, out, _ = invoke(capsys, "oeis", "gen", "--id", "A000124",
                              "--count", "5")
        assert code == 0
        assert out == "0 1\n1 2\n2 4\n3 7\n4 11\n"

    def test_gen_json_schema(self, capsys):
        code, out, _ = invoke(capsys, "oeis", "gen", "--id", "A028896",
                              "--count", "4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        check_schema(payload, "oeis-sequence")
        assert payload["values"] == ["0", "6", "18", "36"]

    def test_fetch_offline_json_schema(self, capsys):
        code, out, _ = invoke(capsys, "oeis", "fetch", "--id", "A007318",
                              "--count", "6", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        check_schema(payload, "oeis-sequence")
        assert payload["source"] == "bundled"
        assert payload["values"] == ["1", "1", "1", "1", "2", "1"]

    def test_bad_id(self, capsys):
        code, _, err = invoke(capsys, "oeis", "check", "--id", "A1")
        assert code == 1 and err


class TestTopLevel:
    def test_no_command(self, capsys):
        code, _, err = invoke(capsys)
        assert code == 1

    def test_unknown_command(self, capsys):
        code, _, err = invoke(capsys, "frobnicate")
        assert code == 1

    @pytest.mark.parametrize(
        "argv",
        [
            ("triangle", "u", "--rows", "6", "--format", "json"),
            ("audit", "--format", "json"),
            ("exp", "--x", "3", "--terms", "12", "--format", "json"),
            ("difftable", "--n", "4", "--xmax", "8", "--depth", "4",
             "--format", "csv"),
            ("oeis", "gen", "--id", "A275709", "--count", "30"),
        ],
    )
    def test_byte_determinism(self, capsys, argv):
        code1, out1, _ = invoke(capsys, *argv)
        code2, out2, _ = invoke(capsys, *argv)
        assert (code1, out1) == (code2, out2)
        assert code1 == 0
