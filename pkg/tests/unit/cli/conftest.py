"""Fixtures for command line tests."""

import io
import textwrap

import pytest
from rich.console import Console

from specpol.ui import ResultRenderer, SummaryTheme

IDENTITY_EXPERIMENT = """
label: identity
operator:
  symbol:
    intervals: [["-pi", "pi"]]
n_list: [3]
"""

PERTURBED_EXPERIMENT = """
label: small
operator:
  symbol:
    intervals: [["0", "pi"]]
  rank_one:
    a: 1.0
    psi: constant
n_list: [4, 8]
grid:
  re: [-1.5, 2.5]
  im: [0.0, 1.0]
  resolution: [5, 3]
scan:
  re: [-1.5, 2.5]
  points: 21
"""


@pytest.fixture
def console_buffer():
    return io.StringIO()


@pytest.fixture
def renderer(console_buffer):
    console = Console(
        file=console_buffer, theme=SummaryTheme.get_rich_theme(), width=120, color_system=None
    )
    return ResultRenderer(console=console)


@pytest.fixture
def write_experiment(tmp_path):
    def write(text, name="experiment.yaml"):
        path = tmp_path / name
        path.write_text(textwrap.dedent(text).lstrip(), encoding="utf-8")
        return path

    return write


@pytest.fixture
def identity_config(write_experiment):
    return write_experiment(IDENTITY_EXPERIMENT, "identity.yaml")


@pytest.fixture
def perturbed_config(write_experiment):
    return write_experiment(PERTURBED_EXPERIMENT, "small.yaml")
