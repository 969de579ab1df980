import json

import pytest
from click.testing import CliRunner

from unicov.cli.output import EXIT_FAILURES, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE
from unicov.main import cli


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _invoke(runner, tmp_path, *args):
    out = tmp_path / "out.json"
    result = runner.invoke(cli, [*args, "--output", str(out)])
    payload = json.loads(out.read_text()) if out.exists() else None
    return result, payload


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "unicov" in result.output


def test_compute_cov(runner, tmp_path):
    result, payload = _invoke(runner, tmp_path, "compute", "cov", "--group", "Z12", "--set", "[1,2,3]")
    assert result.exit_code == EXIT_OK
    assert payload["value"] == "4"
    assert payload["status"] == "optimal"
    assert len(payload["witness"]) == 4


def test_compute_u_n(runner, tmp_path):
    result, payload = _invoke(runner, tmp_path, "compute", "u_n", "--group", "Z4", "--set", "[0,1]", "--n", "2")
    assert result.exit_code == EXIT_OK
    assert payload["value"] == "3/4"


def test_compute_un_of_full_group(runner, tmp_path):
    result, payload = _invoke(runner, tmp_path, "compute", "un", "--group", "Z3", "--set", "[0,1,2]")
    assert result.exit_code == EXIT_OK
    assert payload["status"] == "infinite"


def test_compute_cov_of_empty_set_is_inconclusive(runner, tmp_path):
    result, payload = _invoke(runner, tmp_path, "compute", "cov", "--group", "Z5", "--set", "[]")
    assert result.exit_code == EXIT_INCONCLUSIVE
    assert payload["status"] == "infeasible"


@pytest.mark.parametrize(
    "args",
    [
        ["compute", "cov", "--group", "Q5", "--set", "[0]"],
        ["compute", "cov", "--group", "Z5", "--set", "[9]"],
        ["compute", "cov", "--group", "Z5", "--set", "nope"],
        ["compute", "spectrum", "--group", "Z5", "--set", "[0]", "--eps", "2"],
    ],
)
def test_compute_usage_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == EXIT_USAGE


def test_compute_csv_is_rejected(runner):
    result = runner.invoke(cli, ["compute", "cov", "--group", "Z5", "--set", "[0]", "--format", "csv"])
    assert result.exit_code == EXIT_USAGE


def test_construct_qr(runner, tmp_path):
    result, payload = _invoke(runner, tmp_path, "construct", "qr", "--p", "7")
    assert result.exit_code == EXIT_OK
    assert payload["elements"] == [1, 2, 4]
    assert payload["verification"]["holds"] is True


def test_construct_subspace_union(runner, tmp_path):
    result, payload = _invoke(runner, tmp_path, "construct", "subspace-union", "--n", "4", "--k", "2")
    assert result.exit_code == EXIT_OK
    assert payload["size"] == 7


def test_construct_missing_parameter(runner):
    assert runner.invoke(cli, ["construct", "qr"]).exit_code == EXIT_USAGE


def test_verify_empty_campaign(runner, tmp_path):
    result, payload = _invoke(runner, tmp_path, "verify", "--suite", "core", "--trials", "0")
    assert result.exit_code == EXIT_OK
    assert payload["totals"]["attempted"] == 0


def test_verify_unknown_suite(runner):
    assert runner.invoke(cli, ["verify", "--suite", "V99"]).exit_code == EXIT_USAGE


def test_table_csv(runner, tmp_path):
    out = tmp_path / "table.csv"
    result = runner.invoke(cli, ["table", "--p", "7", "--family", "qr", "--output", str(out)])
    assert result.exit_code == EXIT_OK
    header, *lines = out.read_text().splitlines()
    assert header.split(",")[:4] == ["p", "family", "row-label", "operation"]
    assert len(lines) == 16


def test_table_rejects_composite(runner):
    assert runner.invoke(cli, ["table", "--p", "8"]).exit_code == EXIT_USAGE


def test_replay_round_trip(runner, tmp_path):
    report = tmp_path / "campaign.json"
    runner.invoke(cli, ["verify", "--suite", "core", "--trials", "1", "--output", str(report)])
    result, payload = _invoke(runner, tmp_path, "replay", str(report))
    assert result.exit_code in (EXIT_OK, EXIT_FAILURES)
    assert payload["replayed"] == payload["reproduced"]


@pytest.mark.parametrize("invariant", ["cov", "un", "u_n", "cov-mult", "un-mult", "ek", "wiener", "spectrum"])
def test_every_invariant_on_quadratic_residues(runner, tmp_path, invariant):
    result, payload = _invoke(runner, tmp_path, "compute", invariant, "--group", "Z7", "--set", "[1,2,4]")
    assert result.exit_code == EXIT_OK, result.output
    assert payload["invariant"] == invariant
    assert payload["elements"] == [1, 2, 4]


def test_table_accepts_comma_separated_families(runner, tmp_path):
    out = tmp_path / "table.json"
    result = runner.invoke(
        cli, ["table", "--p", "5,7", "--families", "qr,interval", "--format", "json", "--out", str(out)]
    )
    assert result.exit_code == EXIT_OK
    payload = json.loads(out.read_text())
    assert payload["families"] == ["qr", "interval"]
    assert {(row["p"], row["family"]) for row in payload["rows"]} == {
        (5, "qr"),
        (5, "interval"),
        (7, "qr"),
        (7, "interval"),
    }
