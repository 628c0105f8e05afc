"""Unit tests for specpol.logging.logger"""

import json

import pytest

from specpol.logging.logger import RunLogger

pytestmark = pytest.mark.unit


class TestRunLogger:
    def test_writes_json_lines(self, tmp_path):
        path = tmp_path / "run.jsonl"
        with RunLogger(log_file=path) as logger:
            logger.log("run_start", {"subcommand": "spec2"})
            logger.log("run_end", {"status": 0})

        lines = path.read_text(encoding="utf-8").splitlines()
        assert [json.loads(line)["event"] for line in lines] == ["run_start", "run_end"]

    def test_creates_parent_directories(self, tmp_path):
        path = tmp_path / "logs" / "nested" / "run.jsonl"
        with RunLogger(log_file=path) as logger:
            logger.log("run_start", {})
        assert path.exists()

    def test_console_goes_to_stderr(self, capsys):
        logger = RunLogger(log_console=True)
        logger.log("rows_written", {"count": 3})
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "ROWS_WRITTEN" in captured.err

    def test_silent_without_targets(self, capsys):
        RunLogger().log("run_start", {})
        captured = capsys.readouterr()
        assert captured.out == "" and captured.err == ""

    def test_close_is_idempotent(self, tmp_path):
        logger = RunLogger(log_file=tmp_path / "run.jsonl")
        logger.close()
        logger.close()
