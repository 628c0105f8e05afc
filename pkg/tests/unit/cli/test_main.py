"""Unit tests for specpol.__main__"""

from pathlib import Path

import pytest

from specpol.__main__ import build_parser, main, resolve_log_file

pytestmark = pytest.mark.unit


class TestParser:
    def test_defaults(self):
        args = build_parser().parse_args(["spec2", "--preset", "table1"])
        assert args.subcommand == "spec2"
        assert args.preset == "table1"
        assert args.config is None
        assert args.log_file is None
        assert not args.quiet

    def test_config_and_preset_are_exclusive(self, capsys):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["spec2", "--preset", "table1", "--config", "x.yaml"])

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["plot"])

    def test_bare_log_file_flag(self):
        args = build_parser().parse_args(["table", "--preset", "table2", "--log-file"])
        assert args.log_file == "auto"


class TestResolveLogFile:
    def test_none(self):
        assert resolve_log_file(None, "spec2") is None

    def test_explicit(self):
        assert resolve_log_file("run.jsonl", "spec2") == Path("run.jsonl")

    def test_auto(self):
        path = resolve_log_file("auto", "table")
        assert path.parent == Path("logs")
        assert path.name.startswith("table_")
        assert path.suffix == ".jsonl"


class TestMain:
    def test_writes_out_file(self, identity_config, tmp_path):
        out = tmp_path / "spec2.csv"
        status = main(["spec2", "--config", str(identity_config), "--out", str(out), "--quiet"])
        assert status == 0
        assert out.read_text().splitlines()[0] == "1.00000000,0.00000000"

    def test_config_error_exit_code(self, tmp_path):
        assert main(["spec2", "--config", str(tmp_path / "none.yaml"), "--quiet"]) == 2
