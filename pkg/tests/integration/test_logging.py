"""Integration tests for RunLogger wired into real command runs."""

import io
import json

import pytest

from specpol.cli import run
from specpol.config import RunConfig

pytestmark = pytest.mark.integration


def logged_records(tmp_path, subcommand, **settings):
    log_path = tmp_path / "logs" / "run.jsonl"
    config = RunConfig(preset="table1", quiet=True, log_file=log_path, **settings)
    status = run(subcommand, config, sink=io.StringIO())
    return status, [json.loads(line) for line in log_path.read_text().splitlines()]


class TestRunLogFile:
    def test_creates_parent_directory(self, tmp_path):
        logged_records(tmp_path, "spec2", n_override=10)
        assert (tmp_path / "logs" / "run.jsonl").exists()

    def test_every_line_is_an_event(self, tmp_path):
        _, records = logged_records(tmp_path, "spec2", n_override=10)
        for record in records:
            assert {"timestamp", "event", "data"} <= set(record)

    def test_run_start_describes_experiment(self, tmp_path):
        _, records = logged_records(tmp_path, "table", n_override=12)
        start = records[0]
        assert start["event"] == "run_start"
        assert start["data"] == {
            "subcommand": "table",
            "label": "table1",
            "n_list": [12],
            "format": "csv",
        }

    def test_spectrum_event_carries_state(self, tmp_path):
        _, records = logged_records(tmp_path, "spec2", n_override=20)
        (spectrum,) = [r for r in records if r["event"] == "spectrum"]
        # the table presets widen the window to -2n..2n
        assert spectrum["data"]["n"] == 20
        assert spectrum["data"]["window"] == 40
        assert spectrum["data"]["d"] == 81
        assert spectrum["data"]["points"] == 162
        assert spectrum["data"]["perturbed"] is True
        assert spectrum["state"]["label"] == "table1"
        assert spectrum["state"]["extent"]["re_max"] > 1.5
        assert spectrum["state"]["moments"]["d"] == 81

    def test_rows_written_counts_rows(self, tmp_path):
        _, records = logged_records(tmp_path, "table", n_override=12)
        (written,) = [r for r in records if r["event"] == "rows_written"]
        assert written["data"] == {"count": 2, "path": "-"}

    def test_run_end_is_last(self, tmp_path):
        status, records = logged_records(tmp_path, "spec2", n_override=4)
        assert records[-1] == {
            "timestamp": records[-1]["timestamp"],
            "event": "run_end",
            "data": {"status": status},
        }


class TestConsoleLogging:
    def test_text_lines_go_to_stderr(self, capsys):
        config = RunConfig(preset="table1", n_override=4, quiet=True, log_console=True)
        run("spec2", config, sink=io.StringIO())
        captured = capsys.readouterr()
        assert "RUN_START" in captured.err
        assert "RUN_END | status=0" in captured.err
        assert captured.out == ""
