import io
import json
import re
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from gkresidue import LaurentPoly
from gkresidue.cli import main
from gkresidue.errors import ParseError, UnknownVariable
from gkresidue.systemfile import SystemFile, dumps, load, loads, parse_coeff

DATA = Path(__file__).parent / "data"
x, y = LaurentPoly.variables(2)


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def assert_no_floats(text):
    assert not re.search(r"\d\.\d|e[+-]\d", text)


class TestSystemFile:
    def test_load_two_triangles(self):
        sf = load(DATA / "two_triangles.json")
        assert sf.variables == ("x", "y")
        assert sf.polys[1] == 1 + x * y**2 + 2 * x**2 * y

    @pytest.mark.parametrize("name", ["two_triangles.json", "squares.json", "segment.json", "linear.json"])
    def test_round_trip(self, name):
        sf = load(DATA / name)
        assert loads(dumps(sf)) == sf

    def test_coefficients(self):
        assert parse_coeff("-3/6", "c") == Fraction(-1, 2)
        assert parse_coeff(4, "c") == 4
        for bad in (0.5, True, "1.5.2", "1/0", None):
            with pytest.raises(ParseError):
                parse_coeff(bad, "c")

    def test_json_error_location(self):
        with pytest.raises(ParseError) as info:
            loads('{"variables": ["x"],\n "system": [[}')
        assert "line 2" in str(info.value)

    def test_bad_exponent_length(self):
        with pytest.raises(ParseError):
            load(DATA / "bad_exponent.json")

    def test_structural_errors(self):
        for text in (
            "[]",
            '{"variables": [], "system": []}',
            '{"variables": ["x", "x"], "system": [[], []]}',
            '{"variables": ["x"], "system": [[]]}',
            '{"variables": ["x"], "system": [[{"coeff": "1"}]]}',
            '{"variables": ["x", "y"], "system": [[{"coeff": "1", "exponent": [1, 0]}]]}',
            '{"variables": ["x"], "system": [[{"coeff": "1", "exponent": [1]}, {"coeff": "-1", "exponent": [1]}]]}',
        ):
            with pytest.raises(ParseError):
                loads(text)

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            SystemFile(("x",), (LaurentPoly.variable(0, 1),)).index("z")


class TestCheck:
    def test_generic(self):
        assert run("check", DATA / "two_triangles.json") == (0, "GENERIC\n")

    def test_not_generic(self):
        code, out = run("check", DATA / "squares.json")
        assert code == 1 and out.startswith("NOT_GENERIC witness=[")

    def test_parse_error(self, capsys):
        code, _ = run("check", DATA / "bad_exponent.json")
        assert code == 2 and "ParseError" in capsys.readouterr().err

    def test_missing_file(self):
        assert run("check", DATA / "nope.json")[0] == 2


class TestCoefficients:
    def test_two_triangles(self):
        code, out = run("coefficients", DATA / "two_triangles.json")
        rows = json.loads(out)
        assert code == 0
        assert [r["vertex"] for r in rows] == [[0, 1], [1, 0], [1, 3], [3, 1], [3, 4], [4, 3]]
        assert [r["coefficient"] for r in rows] == [1, -1, -1, 1, 1, -1]
        assert rows[3]["summands"] == [[1, 0], [2, 1]] and rows[3]["det"] == "1"

    def test_segment(self):
        rows = json.loads(run("coefficients", DATA / "segment.json")[1])
        assert [r["coefficient"] for r in rows] == [1, -1]

    def test_reversed(self, tmp_path):
        sf = load(DATA / "two_triangles.json")
        rev = tmp_path / "rev.json"
        rev.write_text(dumps(SystemFile(sf.variables, sf.polys[::-1])))
        a = json.loads(run("coefficients", DATA / "two_triangles.json")[1])
        b = json.loads(run("coefficients", rev)[1])
        assert [r["coefficient"] for r in b] == [-r["coefficient"] for r in a]

    def test_not_generic(self):
        assert run("coefficients", DATA / "squares.json")[0] == 1


class TestMixedVolume:
    def test_two_triangles(self):
        code, out = run("mixed-volume", DATA / "two_triangles.json", "--verify")
        assert code == 0
        assert out.splitlines() == ["V = 3", "n!V = 6", "oracle V = 3", "AGREE"]

    def test_axis(self):
        code, out = run("mixed-volume", DATA / "axis_segments.json")
        assert out.splitlines() == ["V = 1/2", "n!V = 1"]


class TestSumCountResidue:
    def test_sum(self):
        code, out = run("sum", DATA / "two_triangles.json", "--q", '[{"coeff": "1", "exponent": [3, 0]}]')
        assert (code, out) == (0, "3\n")

    def test_sum_constant_is_count(self):
        assert run("sum", DATA / "two_triangles.json", "--q", '"1"')[1] == "6\n"
        assert run("count", DATA / "two_triangles.json") == (0, "6\n")

    def test_linear(self):
        assert run("sum", DATA / "linear.json", "--q", '[{"coeff": "1", "exponent": [1, 0]}]')[1] == "2\n"

    def test_trace(self):
        out = run("sum", DATA / "two_triangles.json", "--q", '[{"coeff": "1", "exponent": [6, 0]}]', "--trace")[1]
        lines = out.splitlines()
        assert "vertex [3, 1] c=1 residue=3/16" in lines
        assert "vertex [4, 3] c=-1 residue=-21/16" in lines
        assert lines[-1] == "3/2"
        assert_no_floats(out)

    def test_bad_q(self):
        assert run("sum", DATA / "two_triangles.json", "--q", "[{")[0] == 2
        assert run("sum", DATA / "two_triangles.json", "--q", '[{"coeff": "1", "exponent": [1]}]')[0] == 2

    def test_residue(self):
        code, out = run("residue", DATA / "two_triangles.json", "--vertex", "4,3", "--q", '[{"coeff": "1", "exponent": [3, 0]}]')
        assert (code, out) == (0, "-9/4\n")
        assert run("residue", DATA / "two_triangles.json", "--vertex", "(3,1)")[1] == "1\n"

    def test_residue_not_vertex(self):
        assert run("residue", DATA / "two_triangles.json", "--vertex", "2,2")[0] == 2

    def test_not_generic(self):
        assert run("count", DATA / "squares.json")[0] == 1


class TestEliminate:
    def test_two_triangles(self, tmp_path):
        dest = tmp_path / "elim.json"
        code, out = run("eliminate", DATA / "two_triangles.json", "--var", "x", "--out", dest)
        assert code == 0 and out == "x^6 - x^3 + 1/4\n"
        payload = json.loads(dest.read_text())
        assert payload == {"variable": "x", "degree": 6, "coefficients": ["1", "0", "0", "-1", "0", "0", "1/4"]}

    def test_y(self):
        out = run("eliminate", DATA / "two_triangles.json", "--var", "y")[1]
        assert json.loads(out[: out.rindex("}") + 1])["coefficients"] == ["1", "0", "0", "-2", "0", "0", "2"]
        assert out.splitlines()[-1] == "y^6 - 2*y^3 + 2"
        assert_no_floats(out)

    def test_linear(self):
        assert run("eliminate", DATA / "linear.json", "--var", "x")[1].splitlines()[-1] == "x - 2"

    def test_unknown_variable(self):
        assert run("eliminate", DATA / "two_triangles.json", "--var", "z")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gkresidue", "count", str(DATA / "two_triangles.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "6\n"
