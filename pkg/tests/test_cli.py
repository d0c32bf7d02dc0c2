"""CLI contract checks: exit codes, formats, round-trips."""

import json

from pathdom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpect:
    def test_path_value(self, capsys):
        code, out, _ = run(capsys, "expect", "--family", "path", "--n", "4")
        assert code == 0
        assert out.strip() == "2"

    def test_path_fraction(self, capsys):
        code, out, _ = run(capsys, "expect", "--family", "path", "--n", "3")
        assert code == 0
        assert out.strip() == "5/3"

    def test_json_rational_form(self, capsys):
        code, out, _ = run(
            capsys, "expect", "--family", "path", "--n", "4", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["value"] == "2/1"

    def test_closed_form_method(self, capsys):
        code, out, _ = run(
            capsys, "expect", "--family", "path", "--n", "9", "--method", "closed-form"
        )
        assert code == 0
        a = out.strip()
        code, out, _ = run(capsys, "expect", "--family", "path", "--n", "9")
        assert out.strip() == a

    def test_wheel_both_forms(self, capsys):
        _, corrected, _ = run(capsys, "expect", "--family", "wheel", "--spokes", "4")
        _, printed, _ = run(
            capsys, "expect", "--family", "wheel", "--spokes", "4", "--as-printed"
        )
        assert corrected.strip() == "9/5"
        assert printed.strip() == "1"

    def test_caro_wei(self, capsys):
        code, out, _ = run(
            capsys, "expect", "--family", "path", "--n", "3", "--caro-wei"
        )
        assert code == 0
        assert out.strip() == "4/3"

    def test_brute_method_on_explicit_graph(self, capsys):
        code, out, _ = run(
            capsys,
            "expect", "--family", "explicit", "--n", "3", "--edges", "1-2,2-3",
            "--method", "brute",
        )
        assert code == 0
        assert out.strip() == "5/3"

    def test_missing_parameter_is_invalid_input(self, capsys):
        code, _, err = run(capsys, "expect", "--family", "path")
        assert code == 1
        assert "error" in err


class TestExtremal:
    def test_all_methods_agree(self, capsys):
        code, out, _ = run(
            capsys,
            "extremal", "--n", "8", "--bound", "worst", "--method", "all",
            "--format", "csv",
        )
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[0] == "n,bound_kind,extremal_size,count,method"
        counts = {row.split(",")[3] for row in rows[1:]}
        assert counts == {"30464"}
        assert len(rows) == 4  # brute, recurrence, egf

    def test_best_formula(self, capsys):
        code, out, _ = run(
            capsys, "extremal", "--n", "10", "--bound", "best", "--method", "formula"
        )
        assert code == 0
        assert "1377792" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(
            capsys,
            "extremal", "--n", "6", "--bound", "worst", "--method", "brute",
            "--witnesses", "3", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc == {
            "n": 6,
            "bound_kind": "worst",
            "extremal_size": 3,
            "count": "640",
            "method": "brute_force",
            "witnesses": doc["witnesses"],
        }
        assert int(doc["count"]) == 640
        assert len(doc["witnesses"]) == 3

    def test_cap_refusal_exit_code(self, capsys):
        code, _, err = run(capsys, "extremal", "--n", "12", "--bound", "worst")
        assert code == 3
        assert "--force" in err

    def test_method_kind_mismatch(self, capsys):
        code, _, err = run(
            capsys, "extremal", "--n", "6", "--bound", "best", "--method", "egf"
        )
        assert code == 1


class TestSeries:
    def test_csv_table(self, capsys):
        code, out, _ = run(capsys, "series", "--order", "7")
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[0] == "n,odd_config,worst_case"
        assert rows[1] == "0,1,1"
        assert rows[4] == "3,4,4"
        assert rows[8] == "7,1632,1632"


class TestSimulate:
    def test_text(self, capsys):
        code, out, _ = run(
            capsys, "simulate", "--family", "path", "--n", "3", "--order", "2,1,3"
        )
        assert code == 0
        assert "gamma: 1" in out
        assert "chosen: 2" in out

    def test_json(self, capsys):
        code, out, _ = run(
            capsys,
            "simulate", "--family", "path", "--n", "6",
            "--order", "1,3,5,2,4,6", "--format", "json",
        )
        doc = json.loads(out)
        assert doc["gamma"] == 3
        assert doc["chosen"] == [1, 3, 5]

    def test_bad_order(self, capsys):
        code, _, err = run(
            capsys, "simulate", "--family", "path", "--n", "3", "--order", "1,1,3"
        )
        assert code == 1


class TestSample:
    def test_csv_and_sidecar(self, capsys, tmp_path):
        out_path = tmp_path / "hist.csv"
        code, _, _ = run(
            capsys,
            "sample", "--n", "30", "--samples", "2000", "--seed", "9",
            "--output", str(out_path),
        )
        assert code == 0
        rows = out_path.read_text().strip().splitlines()
        assert rows[0] == "gamma,count"
        total = sum(int(r.split(",")[1]) for r in rows[1:])
        assert total == 2000
        meta = json.loads((tmp_path / "hist.csv.json").read_text())
        assert meta["n"] == 30
        assert meta["samples"] == 2000
        assert meta["seed"] == 9
        assert {"mean", "variance", "min", "max"} <= set(meta)

    def test_stdout_csv_with_meta_on_stderr(self, capsys):
        code, out, err = run(capsys, "sample", "--n", "10", "--samples", "64", "--seed", "1")
        assert code == 0
        assert out.startswith("gamma,count")
        assert json.loads(err)["samples"] == 64

    def test_plot_data_normalized(self, capsys):
        code, out, _ = run(
            capsys,
            "sample", "--n", "60", "--samples", "512", "--seed", "2",
            "--normalization", "per_vertex", "--plot-data",
        )
        assert code == 0
        for line in out.strip().splitlines():
            x, w = map(float, line.split())
            assert 1 / 3 <= x <= 1 / 2
            assert 0 <= w <= 1

    def test_budget_exit_code(self, capsys):
        code, _, err = run(
            capsys, "sample", "--n", "100000", "--samples", "100000", "--seed", "0"
        )
        assert code == 3


class TestVerify:
    def test_quick_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--depth", "quick")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 10
        assert all(line.startswith("PASS") for line in lines)


class TestUsageErrors:
    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 1
        assert "usage" in err

    def test_unknown_flag(self, capsys):
        code, _, err = run(capsys, "series", "--frds", "1")
        assert code == 1

    def test_help_exits_zero(self, capsys):
        code, _, _ = run(capsys, "--help")
        assert code == 0
