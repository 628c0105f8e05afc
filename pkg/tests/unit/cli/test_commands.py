"""Unit tests for specpol.cli.commands"""

import io
import json

import pytest

import specpol.cli.commands as commands
from specpol.cli.commands import (
    EXIT_CONFIG,
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_UNEXPECTED,
    CommandResult,
    CommandRunner,
    run,
)
from specpol.config import RunConfig
from specpol.errors import SolverError

pytestmark = pytest.mark.unit


def run_command(subcommand, renderer, **settings):
    sink = io.StringIO()
    status = CommandRunner(RunConfig(**settings), renderer=renderer).run(subcommand, sink)
    return status, sink.getvalue()


class TestCommandResult:
    def test_document(self):
        result = CommandResult("spec2", ["re", "im"], [(1.0, 0.0)], {"note": "x"})
        assert result.document("demo") == {
            "command": "spec2",
            "label": "demo",
            "columns": ["re", "im"],
            "rows": [{"re": 1.0, "im": 0.0}],
            "note": "x",
        }


class TestSpec2:
    def test_identity_symbol_is_exact(self, renderer, identity_config):
        status, out = run_command("spec2", renderer, config_path=identity_config)
        assert status == EXIT_OK
        assert out.splitlines() == ["1.00000000,0.00000000"] * 14

    def test_several_truncations_carry_n(self, renderer, perturbed_config):
        status, out = run_command("spec2", renderer, config_path=perturbed_config)
        lines = out.splitlines()
        assert status == EXIT_OK
        assert len(lines) == 2 * 9 + 2 * 17
        assert {line.split(",")[0] for line in lines} == {"4", "8"}

    def test_json_document(self, renderer, identity_config):
        status, out = run_command("spec2", renderer, config_path=identity_config, format="json")
        document = json.loads(out)
        assert status == EXIT_OK
        assert document["command"] == "spec2"
        assert document["label"] == "identity"
        assert document["rows"][0] == {"re": 1.0, "im": 0.0}

    def test_n_override(self, renderer, perturbed_config):
        status, out = run_command("spec2", renderer, config_path=perturbed_config, n_override=2)
        assert status == EXIT_OK
        assert len(out.splitlines()) == 10


class TestSubcommands:
    def test_enclose_respects_width(self, renderer, perturbed_config):
        status, out = run_command("enclose", renderer, config_path=perturbed_config)
        assert status == EXIT_OK
        for line in out.splitlines():
            _, lo, hi, _, _ = (float(x) for x in line.split(","))
            assert hi - lo <= 0.1 + 1e-8

    def test_table(self, renderer, perturbed_config):
        status, out = run_command("table", renderer, config_path=perturbed_config, format="json")
        document = json.loads(out)
        assert status == EXIT_OK
        assert len(document["rows"]) == 4
        assert document["columns"] == ["n", "lo", "hi", "re_minus_lambda"]
        assert document["lambdas"][0] == pytest.approx(-0.61803399)
        assert [row["n"] for row in document["rows"]] == [4, 8, 4, 8]

    def test_table_csv_has_one_block_per_eigenvalue(self, renderer, perturbed_config):
        status, out = run_command("table", renderer, config_path=perturbed_config)
        rows = [line.split(",") for line in out.splitlines()]
        assert status == EXIT_OK
        assert [len(r) for r in rows] == [4] * 4
        assert [r[0] for r in rows] == ["4", "8", "4", "8"]

    def test_szego(self, renderer, perturbed_config):
        status, out = run_command("szego", renderer, config_path=perturbed_config)
        rows = [line.split(",") for line in out.splitlines()]
        assert status == EXIT_OK
        assert [r[0] for r in rows] == ["4", "8"]
        assert all(float(r[-1]) == pytest.approx(0.0, abs=1e-8) for r in rows)

    def test_galerkin(self, renderer, perturbed_config):
        status, out = run_command("galerkin", renderer, config_path=perturbed_config, format="json")
        document = json.loads(out)
        assert status == EXIT_OK
        assert len(document["rows"]) == 9 + 17
        assert {row["polluting"] for row in document["rows"]} <= {0, 1}
        assert [s["spurious_enclosures"] for s in document["summary"]] == [0, 0]

    def test_sigma_grid(self, renderer, perturbed_config):
        status, out = run_command(
            "sigma-grid", renderer, config_path=perturbed_config, format="json"
        )
        document = json.loads(out)
        assert status == EXIT_OK
        assert len(document["rows"]) == 2 * 15
        grid = document["grids"][0]
        assert (grid["nx"], grid["ny"]) == (5, 3)
        assert len(grid["argmin"]) == 2

    def test_limits(self, renderer, perturbed_config):
        status, out = run_command("limits", renderer, config_path=perturbed_config, format="json")
        document = json.loads(out)
        assert status == EXIT_OK
        assert document["columns"][-2:] == ["dist_1", "dist_2"]
        assert document["target"] == {"center": 0.0, "radius": 1.0}

    def test_check_h(self, renderer, perturbed_config):
        status, out = run_command("check-h", renderer, config_path=perturbed_config)
        assert status == EXIT_OK
        assert len(out.splitlines()) == 4

    def test_scan(self, renderer, perturbed_config):
        status, out = run_command("scan", renderer, config_path=perturbed_config, format="json")
        document = json.loads(out)
        assert status == EXIT_OK
        assert len(document["rows"]) == 2 * 21
        assert [s["n"] for s in document["scans"]] == [4, 8]


class TestExitCodes:
    def test_table_without_eigenvalues(self, renderer, console_buffer, identity_config):
        status, out = run_command("table", renderer, config_path=identity_config)
        assert status == EXIT_CONFIG
        assert out == ""
        assert "lambdas" in console_buffer.getvalue()

    def test_check_h_without_rank_one(self, renderer, identity_config):
        status, _ = run_command("check-h", renderer, config_path=identity_config)
        assert status == EXIT_CONFIG

    def test_missing_file(self, renderer, tmp_path):
        status, _ = run_command("spec2", renderer, config_path=tmp_path / "missing.yaml")
        assert status == EXIT_CONFIG

    def test_no_experiment(self, renderer):
        assert run_command("spec2", renderer)[0] == EXIT_CONFIG

    def test_negative_n(self, renderer, identity_config):
        status, _ = run_command("spec2", renderer, config_path=identity_config, n_override=-1)
        assert status == EXIT_CONFIG

    def test_unknown_subcommand(self, renderer, identity_config):
        assert run_command("plot", renderer, config_path=identity_config)[0] == EXIT_CONFIG

    def test_invalid_yaml_lists_diagnostics(self, renderer, console_buffer, write_experiment):
        path = write_experiment(
            """
            operator:
              symbol:
                intervals: [["0", "pi"]]
            n_list: [3, 1]
            """
        )
        status, _ = run_command("spec2", renderer, config_path=path)
        assert status == EXIT_CONFIG
        assert "line 4: n_list" in console_buffer.getvalue()

    def test_numerical_failure(self, renderer, identity_config, monkeypatch):
        def fail(m, refine=True):
            raise SolverError("did not converge", label=m.label, d=m.d, n=m.n)

        monkeypatch.setattr(commands, "second_order_spectrum", fail)
        assert run_command("spec2", renderer, config_path=identity_config)[0] == EXIT_NUMERICAL

    def test_unexpected_failure(self, renderer, identity_config, monkeypatch, capsys):
        def fail(m, refine=True):
            raise RuntimeError("boom")

        monkeypatch.setattr(commands, "second_order_spectrum", fail)
        assert run_command("spec2", renderer, config_path=identity_config)[0] == EXIT_UNEXPECTED
        assert "RuntimeError" in capsys.readouterr().err


class TestOutput:
    def test_out_file_uses_lf(self, renderer, identity_config, tmp_path):
        out = tmp_path / "results" / "points.csv"
        status = CommandRunner(
            RunConfig(config_path=identity_config, out=out), renderer=renderer
        ).run("spec2")
        assert status == EXIT_OK
        data = out.read_bytes()
        assert b"\r" not in data
        assert data.endswith(b"\n")

    def test_failed_run_writes_nothing(self, renderer, identity_config, tmp_path):
        out = tmp_path / "table.csv"
        CommandRunner(RunConfig(config_path=identity_config, out=out), renderer=renderer).run(
            "table"
        )
        assert not out.exists()

    def test_stdout_by_default(self, renderer, identity_config, capsys):
        CommandRunner(RunConfig(config_path=identity_config), renderer=renderer).run("spec2")
        assert capsys.readouterr().out.count("\n") == 14

    def test_quiet_skips_summary(self, renderer, console_buffer, identity_config):
        run_command("spec2", renderer, config_path=identity_config, quiet=True)
        assert console_buffer.getvalue() == ""

    def test_summary_table(self, renderer, console_buffer, identity_config):
        run_command("spec2", renderer, config_path=identity_config)
        assert "identity: spec2" in console_buffer.getvalue()


class TestRun:
    def test_logs_events(self, identity_config, tmp_path):
        log = tmp_path / "run.jsonl"
        config = RunConfig(config_path=identity_config, quiet=True, log_file=log)
        assert run("spec2", config, sink=io.StringIO()) == EXIT_OK

        events = [json.loads(line)["event"] for line in log.read_text().splitlines()]
        assert events == ["run_start", "spectrum", "rows_written", "run_end"]

    def test_logs_errors(self, identity_config, tmp_path):
        log = tmp_path / "run.jsonl"
        config = RunConfig(config_path=identity_config, quiet=True, log_file=log)
        assert run("table", config, sink=io.StringIO()) == EXIT_CONFIG

        records = [json.loads(line) for line in log.read_text().splitlines()]
        assert records[-2]["event"] == "run_error"
        assert records[-2]["data"]["kind"] == "config"
        assert records[-1]["data"]["status"] == EXIT_CONFIG
