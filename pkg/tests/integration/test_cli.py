"""
Integration tests for the jack-lab command line.

These tests drive ``main`` end to end and are marked with @pytest.mark.integration.
Run with: pytest -m integration
"""

import csv
import io
import json

import pytest

from jacklab.cli import EXIT_USAGE, main


def json_rows(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.mark.integration
class TestTableCommands:
    """Table commands printing json, csv and text."""

    def test_ch_single_diagram(self, capsys):
        """Test Ch_(2)((2)) = 2A as a Laurent object."""
        assert main(["ch", "--pi", "2", "--lambda", "2"]) == 0
        assert json.loads(capsys.readouterr().out) == {"1": "2"}

    def test_ch_all_diagrams(self, capsys):
        """Test one Laurent object per diagram of size n."""
        assert main(["ch", "--pi", "1", "--n", "3"]) == 0
        values = json.loads(capsys.readouterr().out)
        assert set(values) == {"3", "2,1", "1,1,1"}
        assert all(value == {"0": "3"} for value in values.values())

    def test_ch_rows(self, capsys):
        """Test that csv keeps one row per diagram with the A-top coefficient."""
        assert main(["ch", "--pi", "2", "--lambda", "2", "--format", "csv"]) == 0
        (row,) = csv_rows(capsys.readouterr().out)
        assert row["lam"] == "2"
        assert row["a_top"] == "2"

    def test_g(self, capsys):
        """Test the expansion of Ch_3 Ch_2 as {μ: δ-coefficients}."""
        assert main(["g", "--pi", "3", "--sigma", "2"]) == 0
        table = json.loads(capsys.readouterr().out)
        assert set(table) == {"3", "3,2", "2,1", "4"}
        assert table["3"] == ["0", "6"]

    def test_g_rows(self, capsys):
        """Test the csv rows of g with their degree bounds."""
        assert main(["g", "--pi", "3", "--sigma", "2", "--format", "csv"]) == 0
        rows = {row["mu"]: row for row in csv_rows(capsys.readouterr().out)}
        assert json.loads(rows["3"]["coefficients"]) == ["0", "6"]
        assert rows["3"]["degree_bound"] == "1"

    def test_c_csv(self, capsys):
        """Test c for n = 2 as csv, in β by default."""
        assert main(["c", "--n", "2", "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "pi,sigma,lam,beta,alpha"
        rows = {(r["pi"], r["sigma"], r["lam"]): r for r in csv_rows(out)}
        assert json.loads(rows[("2", "2", "2")]["beta"]) == ["0", "1"]
        assert all(not row["alpha"] for row in rows.values())

    def test_c_default_is_beta(self, capsys):
        """Test that c prints β-coefficients unless --alpha is given."""
        assert main(["c", "--n", "2"]) == 0
        rows = {(r["pi"], r["sigma"], r["lam"]): r for r in json_rows(capsys.readouterr().out)}
        assert rows[("2", "2", "2")]["beta"] == ["0", "1"]
        assert all(row["alpha"] is None for row in rows.values())

    def test_c_alpha(self, capsys):
        """Test c as rational functions of α."""
        assert main(["c", "--n", "2", "--alpha"]) == 0
        rows = json_rows(capsys.readouterr().out)
        assert all(row["beta"] is None and row["alpha"] for row in rows)

    def test_h(self, capsys):
        """Test that h for n = 2 converts to β."""
        assert main(["h", "--n", "2"]) == 0
        rows = {(r["pi"], r["sigma"], r["lam"]): r for r in json_rows(capsys.readouterr().out)}
        assert rows[("2", "2", "2")]["beta"] == ["0", "1"]

    def test_jack(self, capsys):
        """Test J_(2) = p1² + α p2 as {λ: {μ: θ}}."""
        assert main(["jack", "--n", "2"]) == 0
        expansions = json.loads(capsys.readouterr().out)
        assert set(expansions) == {"2", "1,1"}
        assert expansions["2"]["1,1"] == "1"
        assert set(expansions["2"]) == {"1,1", "2"}

    def test_jack_rows(self, capsys):
        """Test one csv row per power-sum coefficient."""
        assert main(["jack", "--n", "2", "--format", "csv"]) == 0
        rows = csv_rows(capsys.readouterr().out)
        assert {"lam": "2", "mu": "1,1", "theta": "1"} in rows

    def test_embed(self, capsys):
        """Test the embedding counts of G_(2) into the row (2)."""
        assert main(["embed", "--pi", "2", "--lambda", "2"]) == 0
        (row,) = json_rows(capsys.readouterr().out)
        assert row["embeddings"] == row["negative_conjugate"] == row["hat_p"] == 2

    def test_eta(self, capsys):
        """Test η on the torus gluing of a hexagon."""
        assert main(["eta", "--lambda", "3", "--delta", "[[1,3^],[2,1^],[3,2^]]"]) == 0
        (row,) = json_rows(capsys.readouterr().out)
        assert row["bipartite"] and row["orientable"]
        assert row["eta"] == 0
        assert not row["unhandled"]

    def test_eta_all_unicellular(self, capsys):
        """Test that every listed matching glues into one face."""
        assert main(["eta", "--lambda", "3", "--format", "pretty"]) == 0
        assert "matching" in capsys.readouterr().out

    @pytest.mark.slow
    def test_handshake_worked_example(self, capsys):
        """Test the 72 outcomes of the worked example."""
        assert main(["handshake", "--pi", "3,2", "--sigma", "3,3", "--mu", "3,3"]) == 0
        (row,) = json_rows(capsys.readouterr().out)
        assert row["count"] == 72
        assert row["holds"]

    def test_handshake_small(self, capsys):
        """Test the hands-shaking count for two transpositions."""
        assert main(["handshake", "--pi", "2", "--sigma", "2", "--mu", "2"]) == 0
        (row,) = json_rows(capsys.readouterr().out)
        assert row["count"] == 2

    def test_out_file(self, tmp_path, capsys):
        """Test writing output to a file."""
        target = tmp_path / "c.csv"
        assert main(["c", "--n", "1", "-f", "csv", "-o", str(target)]) == 0
        assert capsys.readouterr().out == ""
        assert target.read_text(encoding="utf-8").startswith("pi,sigma,lam")


@pytest.mark.integration
class TestVerifyCommand:
    """The verify subcommand."""

    def test_list(self, capsys):
        """Test the suite catalogue."""
        assert main(["verify", "--list"]) == 0
        names = [row["name"] for row in json_rows(capsys.readouterr().out)]
        assert "jack-axioms" in names
        assert "appendix" in names

    def test_run_suite(self, capsys, sequential_workers):
        """Test a passing suite at a small bound."""
        assert main(["verify", "--suite", "jack-axioms", "--n", "1"]) == 0
        reports = json_rows(capsys.readouterr().out)
        assert reports
        assert all(r["status"] == "verified" for r in reports)
        assert all("wall_time" not in r for r in reports)

    def test_timing(self, capsys, sequential_workers):
        """Test that --timing adds wall times."""
        assert main(["verify", "--suite", "jack-axioms", "--n", "1", "--timing"]) == 0
        assert all("wall_time" in r for r in json_rows(capsys.readouterr().out))

    def test_csv_reports(self, capsys, sequential_workers):
        """Test that --format csv prints one report row per check without wall times."""
        assert main(["verify", "--suite", "jack-axioms", "--n", "1", "--format", "csv"]) == 0
        rows = csv_rows(capsys.readouterr().out)
        assert rows
        assert "wall_time" not in rows[0]
        assert all(row["status"] == "verified" and row["suite"] == "jack-axioms" for row in rows)


@pytest.mark.integration
class TestUsageErrors:
    """Exit status 2 on bad arguments."""

    def test_unknown_suite(self, capsys):
        """Test that an unknown suite name is rejected."""
        assert main(["verify", "--suite", "nope"]) == EXIT_USAGE

    def test_limit(self, capsys):
        """Test that n above the configured limit is rejected."""
        assert main(["c", "--n", "99"]) == EXIT_USAGE
        assert "JACKLAB_CLI_N_LIMIT" in capsys.readouterr().err

    def test_bad_partition(self, capsys):
        """Test that a non-partition is rejected by the parser."""
        assert main(["ch", "--pi", "a,b", "--lambda", "2"]) == EXIT_USAGE

    def test_matching_size(self, capsys):
        """Test that --delta must fit the faces."""
        assert main(["eta", "--lambda", "3", "--delta", "[[1,2],[1^,2^]]"]) == EXIT_USAGE

    def test_matching_label_out_of_range(self, capsys):
        """Test that a label beyond the matching size is a usage error."""
        assert main(["eta", "--lambda", "1", "--delta", "[[1,3]]"]) == EXIT_USAGE

    def test_missing_command(self, capsys):
        """Test that a subcommand is required."""
        assert main([]) == EXIT_USAGE

    def test_version(self, capsys):
        """Test --version."""
        assert main(["--version"]) == 0
        assert "jack-lab" in capsys.readouterr().out
