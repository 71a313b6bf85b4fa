"""Command-line interface: output formats, exit codes, file output."""

import csv
import io
import json
import shutil
import subprocess
from fractions import Fraction

import pytest

from surdsym.cli import build_parser, main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestClassify:
    def test_markdown_worked_example(self, capsys):
        rc, out, err = run(capsys, "classify", "2", "-1", "-3")
        assert rc == 0 and err == ""
        assert out == (
            "| delta | m | n  | k  | gamma   | p | t  | t_up | t_down "
            "| symmetry | star |\n"
            "| ----- | - | -- | -- | ------- | - | -- | ---- | ------ "
            "| -------- | ---- |\n"
            "| 17    | 2 | -1 | -3 | [1,1,3] | 3 | 10 | 5    | 5      "
            "| super    | 0    |\n")

    def test_csv_round_trips(self, capsys):
        rc, out, _ = run(capsys, "classify", "2", "-1", "-3",
                         "--format", "csv")
        assert rc == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 1
        assert rows[0]["delta"] == "17" and rows[0]["gamma"] == "[1,1,3]"
        assert rows[0]["symmetry"] == "super" and rows[0]["star"] == "0"

    def test_json_round_trips(self, capsys):
        rc, out, _ = run(capsys, "classify", "2", "-1", "-3",
                         "--format", "json")
        assert rc == 0
        (rec,) = json.loads(out)
        assert rec["delta"] == 17 and rec["t"] == 10
        assert rec["gamma"] == "[1,1,3]"

    def test_square_form_uses_cf_columns(self, capsys):
        rc, out, _ = run(capsys, "classify", "1", "0", "3")
        assert rc == 0
        assert "| cf  | l |" in out
        assert "| 9     | 1 | 0 | 3 | [3] | 1 | 2 | 1    | 0      " in out

    def test_not_indefinite_is_an_error(self, capsys):
        rc, out, err = run(capsys, "classify", "1", "1", "1")
        assert rc == 1 and out == ""
        assert err == "error: form (1,1,1) is not indefinite (delta=-3)\n"


class TestSmallCommands:
    def test_period(self, capsys):
        rc, out, _ = run(capsys, "period", "2", "-1", "-3")
        assert rc == 0 and out == "preperiod []\nperiod [1,1,3]\n"

    def test_period_with_preperiod(self, capsys):
        rc, out, _ = run(capsys, "period", "1", "-1", "1")
        assert rc == 0 and out == "preperiod [0]\nperiod [1]\n"

    def test_period_zero_m_reroutes(self, capsys):
        rc, out, _ = run(capsys, "period", "0", "-2", "3")
        assert rc == 0 and out == "preperiod [-2,2]\nperiod []\n"

    def test_counts(self, capsys):
        rc, out, _ = run(capsys, "counts", "2", "-1", "-3")
        assert rc == 0 and out == "t=10 t_up=5 t_down=5\n"

    def test_modular_pure(self, capsys):
        rc, out, _ = run(capsys, "modular", "2", "4", "-7")
        assert rc == 0 and out == "((3,5,3,2,2))\n"

    def test_modular_with_head(self, capsys):
        rc, out, _ = run(capsys, "modular", "2", "-1", "-3")
        assert rc == 0 and out == "[2] ((5,3,2,2,3))\n"

    def test_reduce(self, capsys):
        rc, out, _ = run(capsys, "reduce", "2", "4", "-7")
        assert rc == 0
        assert out == "form (2,-2,1)\nword A^2\ninvolution identity\n"


class TestOrbit:
    def test_cycle_tour(self, capsys):
        rc, out, _ = run(capsys, "orbit", "5", "-3", "-13")
        assert rc == 0
        lines = out.strip().split("\n")
        assert len(lines) == 6
        assert lines[0].split("  ")[1] == "[2,1,4]"
        # every listed form lies on the H0 cycle of the input's class
        for ln in lines:
            m, n, k = map(int, ln.split("  ")[0].split())
            assert m > 0 > n

    def test_bounded_bfs(self, capsys):
        rc, out, _ = run(capsys, "orbit", "1", "-1", "-1",
                         "--all", "--bound", "4")
        assert rc == 0
        lines = out.strip().split("\n")
        assert "1 -1 -1  H0" in lines
        assert "-1 1 1  H0R" in lines
        assert all(len(ln.split("  ")) == 2 for ln in lines)
        assert len(lines) == len(set(lines)) > 4

    def test_all_requires_bound(self, capsys):
        rc, out, err = run(capsys, "orbit", "1", "-1", "-1", "--all")
        assert rc == 1 and err.startswith("error: --all requires --bound")

    def test_square_normal_form(self, capsys):
        rc, out, _ = run(capsys, "orbit", "2", "2", "-5")
        assert rc == 0 and out == "2 0 3  normal form\n"


class TestTable:
    def test_csv_delta_20(self, capsys):
        rc, out, _ = run(capsys, "table", "--delta-max", "20",
                         "--format", "csv")
        assert rc == 0
        lines = out.strip().split("\n")
        assert lines[0] == ("delta,m,n,k,gamma,p,t,t_up,t_down,"
                            "symmetry,star")
        assert lines[1] == "5,1,-1,-1,[1],1,2,1,1,super,0"
        rows = list(csv.DictReader(io.StringIO(out)))
        assert {int(r["delta"]) for r in rows} == {5, 8, 12, 13, 17, 20}
        starred = [r for r in rows if r["star"] == "1"]
        assert len(starred) == 1 and starred[0]["delta"] == "20"

    def test_gamma_cells_quote_commas(self, capsys):
        rc, out, _ = run(capsys, "table", "--delta-max", "12",
                         "--format", "csv")
        assert rc == 0 and '"[1,2]"' in out

    def test_zero_table_lists_squares(self, capsys):
        rc, out, _ = run(capsys, "table", "--delta-max", "16",
                         "--which", "zero", "--format", "csv")
        assert rc == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert {int(r["delta"]) for r in rows} == {1, 4, 9, 16}
        assert all(r["n"] == "0" for r in rows)
        assert rows[0]["cf"] == "[]"  # the (0,0,1) row

    def test_jobs_do_not_change_bytes(self, capsys):
        rc1, out1, _ = run(capsys, "table", "--delta-max", "150",
                           "--format", "csv", "--jobs", "1")
        rc2, out2, _ = run(capsys, "table", "--delta-max", "150",
                           "--format", "csv", "--jobs", "3")
        assert rc1 == rc2 == 0 and out1 == out2

    def test_bad_delta_max(self, capsys):
        rc, _, err = run(capsys, "table", "--delta-max", "0")
        assert rc == 1 and err.startswith("error:")

    def test_markdown_renders(self, capsys):
        rc, out, _ = run(capsys, "table", "--delta-max", "8")
        assert rc == 0
        assert out.startswith("| delta |")
        assert out.count("\n") == 4  # header, rule, two classes


class TestStats:
    def test_csv_shape_and_exact_fractions(self, capsys):
        rc, out, _ = run(capsys, "stats", "--delta-max", "60",
                         "--format", "csv")
        assert rc == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["delta"] for r in rows][:4] == ["1", "4", "5", "8"]
        for r in rows:
            fracs = [Fraction(r[f"frac_{s}"])
                     for s in ("super", "k", "mpn", "anti", "asymm")]
            counts = [int(r[f"count_{s}"])
                      for s in ("super", "k", "mpn", "anti", "asymm")]
            total = int(r["total"])
            assert sum(fracs) == 1
            assert sum(counts) == total
            assert fracs == [Fraction(c, total) for c in counts]
        nine = next(r for r in rows if r["delta"] == "9")
        assert nine["square"] == "1" and nine["frac_k"] == "2/3"

    def test_json_fractions_are_strings(self, capsys):
        rc, out, _ = run(capsys, "stats", "--delta-max", "9",
                         "--format", "json")
        assert rc == 0
        recs = json.loads(out)
        assert recs[-1]["frac_k"] == "2/3"


class TestOutAndEntry:
    def test_out_writes_file_and_silences_stdout(self, capsys, tmp_path):
        target = tmp_path / "table.csv"
        rc, out, _ = run(capsys, "table", "--delta-max", "20",
                         "--format", "csv", "--out", str(target))
        assert rc == 0 and out == ""
        text = target.read_text()
        assert text.startswith("delta,m,n,k,gamma")
        assert "5,1,-1,-1,[1],1,2,1,1,super,0" in text

    def test_parser_has_all_subcommands(self):
        parser = build_parser()
        sub = next(a for a in parser._actions
                   if isinstance(a, type(parser._subparsers._group_actions[0])))
        names = set(sub.choices)
        assert names == {"classify", "period", "counts", "reduce",
                         "modular", "orbit", "table", "stats"}

    @pytest.mark.skipif(shutil.which("surdsym") is None,
                        reason="console script not installed")
    def test_console_script(self):
        proc = subprocess.run(["surdsym", "counts", "2", "-1", "-3"],
                              capture_output=True, text=True, timeout=60)
        assert proc.returncode == 0
        assert proc.stdout == "t=10 t_up=5 t_down=5\n"
