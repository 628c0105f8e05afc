"""Subcommands of the specpol command line."""

import math
import sys
import time
import traceback
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

import numpy as np

from ..analysis import (
    condition_H_residuals,
    convergence_table,
    limiting_set_scan,
    operator_moments,
    pollution_report,
    real_axis_scan,
    szego_stats,
)
from ..config import RunConfig
from ..engine import (
    SecondOrderSpectrum,
    enclosures,
    second_order_spectrum,
    sigma,
    sigma_descent,
    sigma_grid,
)
from ..errors import ConfigError, Diagnostic, NoZeroFoundError, NumericalError, SpecpolError
from ..experiments import ExperimentConfig, load_preset
from ..logging import RunLogger, serialize_moments, serialize_spectrum
from ..logging.events import ROWS_WRITTEN, RUN_END, RUN_ERROR, RUN_START, SPECTRUM
from ..operators import RankOneTerm
from ..ui import ResultRenderer
from .writers import format_row, write_csv, write_json

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

SUBCOMMANDS = (
    "spec2",
    "enclose",
    "table",
    "szego",
    "galerkin",
    "sigma-grid",
    "limits",
    "check-h",
    "scan",
)

Row = Tuple[Any, ...]


@dataclass
class CommandResult:
    """Rows produced by a subcommand, plus extra fields for the JSON document."""

    command: str
    columns: List[str]
    rows: List[Row] = field(default_factory=list)
    extra: Dict[str, Any] = field(default_factory=dict)

    def document(self, label: str) -> Dict[str, Any]:
        doc = {
            "command": self.command,
            "label": label,
            "columns": self.columns,
            "rows": [dict(zip(self.columns, row)) for row in self.rows],
        }
        doc.update(self.extra)
        return doc


class CommandRunner:
    """
    Runs one subcommand for one experiment.

    Results are computed completely before anything is written, so a failing
    run never leaves a partial output file.
    """

    def __init__(
        self,
        run_config: RunConfig,
        logger: Optional[RunLogger] = None,
        renderer: Optional[ResultRenderer] = None,
    ):
        self.run_config = run_config
        self.logger = logger
        self.renderer = renderer or ResultRenderer()
        self.handlers: Dict[str, Callable[[ExperimentConfig], CommandResult]] = {
            "spec2": self.spec2,
            "enclose": self.enclose,
            "table": self.table,
            "szego": self.szego,
            "galerkin": self.galerkin,
            "sigma-grid": self.sigma_grid,
            "limits": self.limits,
            "check-h": self.check_h,
            "scan": self.scan,
        }

    def _log(self, event: str, data: Dict[str, Any], state: Optional[Dict] = None) -> None:
        if self.logger:
            self.logger.log(event, data, state)

    def load_experiment(self) -> ExperimentConfig:
        """Load the experiment named by the run config and apply the n override."""
        rc = self.run_config
        if rc.config_path is not None:
            experiment = ExperimentConfig.load(rc.config_path)
        elif rc.preset is not None:
            experiment = load_preset(rc.preset)
        else:
            raise ConfigError(
                [Diagnostic("--config", "an experiment file or --preset is required")]
            )

        if rc.n_override is not None:
            if rc.n_override < 0:
                raise ConfigError([Diagnostic("--n", f"must be non-negative, got {rc.n_override}")])
            experiment = experiment.with_n(rc.n_override)
        return experiment

    def run(self, subcommand: str, sink: Optional[TextIO] = None) -> int:
        """
        Run a subcommand and write its rows.

        Args:
            subcommand: One of SUBCOMMANDS
            sink: Output stream; defaults to the run config's out path or stdout

        Returns:
            Exit code: 0 success, 2 configuration error, 3 numerical failure, 1 otherwise
        """
        if subcommand not in self.handlers:
            self.renderer.show_error(
                f"Unknown subcommand {subcommand!r}; choose from {', '.join(SUBCOMMANDS)}"
            )
            return EXIT_CONFIG

        status = EXIT_UNEXPECTED
        try:
            experiment = self.load_experiment()
            output_format = self.run_config.format or experiment.output_format
            self._log(
                RUN_START,
                {
                    "subcommand": subcommand,
                    "label": experiment.label,
                    "n_list": experiment.n_list,
                    "format": output_format,
                },
            )
            if not self.run_config.quiet:
                self.renderer.show_header(subcommand, experiment.label, experiment.n_list)

            result = self.handlers[subcommand](experiment)
            count = self._emit(result, experiment, output_format, sink)
            self._log(ROWS_WRITTEN, {"count": count, "path": str(self.run_config.out or "-")})

            if not self.run_config.quiet:
                self.renderer.render_table(
                    f"{experiment.label}: {subcommand}",
                    result.columns,
                    [format_row(row, experiment.precision) for row in result.rows],
                )
            status = EXIT_OK

        except ConfigError as e:
            self.renderer.show_error("Invalid experiment configuration", e.diagnostics)
            self._log(RUN_ERROR, {"kind": "config", "message": str(e)})
            status = EXIT_CONFIG
        except NumericalError as e:
            self.renderer.show_error(f"Numerical failure: {e}")
            self._log(
                RUN_ERROR,
                {"kind": type(e).__name__, "message": str(e), "n": e.n, "label": e.label},
            )
            status = EXIT_NUMERICAL
        except (FileNotFoundError, SpecpolError, ValueError) as e:
            self.renderer.show_error(str(e))
            self._log(RUN_ERROR, {"kind": type(e).__name__, "message": str(e)})
            status = EXIT_CONFIG
        except Exception as e:
            self.renderer.show_error(f"Unexpected error: {e}")
            traceback.print_exc()
            self._log(RUN_ERROR, {"kind": type(e).__name__, "message": str(e)})
            status = EXIT_UNEXPECTED
        finally:
            self._log(RUN_END, {"status": status})
        return status

    def _emit(
        self,
        result: CommandResult,
        experiment: ExperimentConfig,
        output_format: str,
        sink: Optional[TextIO],
    ) -> int:
        if sink is not None:
            return self._write(result, experiment, output_format, sink)
        if self.run_config.out is not None:
            path = Path(self.run_config.out)
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="\n") as handle:
                return self._write(result, experiment, output_format, handle)
        return self._write(result, experiment, output_format, sys.stdout)

    def _write(
        self, result: CommandResult, experiment: ExperimentConfig, output_format: str, sink: TextIO
    ) -> int:
        if output_format == "json":
            write_json(result.document(experiment.label), sink, experiment.precision)
            return len(result.rows)
        if output_format == "csv":
            return write_csv(result.rows, sink, experiment.precision)
        raise ConfigError([Diagnostic("--format", f"must be csv or json, got {output_format!r}")])

    def _spectra(
        self, experiment: ExperimentConfig, pert: Optional[RankOneTerm]
    ) -> Dict[int, SecondOrderSpectrum]:
        """Spec2 for every n of the experiment, logging each solve."""
        spectra = {}
        for n in experiment.n_list:
            start = time.perf_counter()
            m = operator_moments(
                experiment.symbol, pert, n, experiment.label, experiment.window_scale
            )
            s = second_order_spectrum(m)
            state = None
            if self.logger:
                state = {**serialize_spectrum(s), "moments": serialize_moments(m)}
            self._log(
                SPECTRUM,
                {
                    "n": n,
                    "window": m.n,
                    "d": s.d,
                    "points": len(s),
                    "seconds": round(time.perf_counter() - start, 3),
                    "label": experiment.label,
                    "perturbed": pert is not None,
                },
                state,
            )
            spectra[n] = s
        return spectra

    @staticmethod
    def _lambdas(experiment: ExperimentConfig, command: str) -> List[float]:
        lambdas = sorted(experiment.resolved_lambdas())
        if not lambdas:
            raise ConfigError(
                [
                    experiment.diagnostic(
                        "lambdas",
                        f"{command} needs isolated eigenvalues; "
                        "add operator.rank_one or list lambdas explicitly",
                    )
                ]
            )
        return lambdas

    def spec2(self, experiment: ExperimentConfig) -> CommandResult:
        several = len(experiment.n_list) > 1
        result = CommandResult("spec2", ["n", "re", "im"] if several else ["re", "im"])
        for n, s in self._spectra(experiment, experiment.rank_one).items():
            for z in s.points:
                point = (z.real, z.imag)
                result.rows.append((n, *point) if several else point)
        return result

    def enclose(self, experiment: ExperimentConfig) -> CommandResult:
        result = CommandResult("enclose", ["n", "lo", "hi", "re", "im"])
        result.extra["max_half_width"] = experiment.max_half_width
        for n, s in self._spectra(experiment, experiment.rank_one).items():
            for e in enclosures(s, experiment.max_half_width):
                result.rows.append((n, e.lo, e.hi, e.source.real, e.source.imag))
        return result

    def table(self, experiment: ExperimentConfig) -> CommandResult:
        lambdas = self._lambdas(experiment, "table")
        spectra = self._spectra(experiment, experiment.rank_one)
        result = CommandResult("table", ["n", "lo", "hi", "re_minus_lambda"])
        # one block of len(n_list) rows per eigenvalue, in the order of extra["lambdas"]
        result.extra["lambdas"] = lambdas
        for lam in lambdas:
            rows = convergence_table(
                experiment.symbol, experiment.rank_one, lam, experiment.n_list, spectra
            )
            result.rows.extend((r.n, r.lo, r.hi, r.re_minus_lambda) for r in rows)
        return result

    def szego(self, experiment: ExperimentConfig) -> CommandResult:
        result = CommandResult(
            "szego",
            [
                "n",
                "epsilon",
                "frac_near_minus1",
                "frac_near_plus1",
                "expected_minus",
                "expected_plus",
                "mean",
            ],
        )
        for n, s in self._spectra(experiment, None).items():
            st = szego_stats(experiment.symbol, n, experiment.epsilon, spectrum=s)
            result.rows.append(
                (
                    n,
                    st.epsilon,
                    st.frac_near_minus1,
                    st.frac_near_plus1,
                    st.expected_minus,
                    st.expected_plus,
                    st.mean.real,
                )
            )
            result.extra["expected_mean"] = st.expected_mean
        return result

    def galerkin(self, experiment: ExperimentConfig) -> CommandResult:
        spectra = self._spectra(experiment, experiment.rank_one)
        report = pollution_report(
            experiment.symbol,
            experiment.rank_one,
            experiment.n_list,
            gap_delta=experiment.gap_delta,
            max_half_width=experiment.max_half_width,
            spectra=spectra,
            window_scale=experiment.window_scale,
        )
        result = CommandResult("galerkin", ["n", "eigenvalue", "polluting"])
        summary = []
        for row in report:
            polluting = set(row.polluting)
            result.rows.extend((row.n, x, int(x in polluting)) for x in row.eigenvalues)
            summary.append(
                {
                    "n": row.n,
                    "galerkin_in_gap": len(row.galerkin_in_gap),
                    "polluting": row.polluting_count,
                    "enclosures_in_gap": len(row.enclosures_in_gap),
                    "spurious_enclosures": len(row.spurious_enclosures),
                }
            )
        result.extra["summary"] = summary
        return result

    def sigma_grid(self, experiment: ExperimentConfig) -> CommandResult:
        several = len(experiment.n_list) > 1
        columns = ["n", "re", "im", "sigma"] if several else ["re", "im", "sigma"]
        result = CommandResult("sigma-grid", columns)
        grids = []
        for n in experiment.n_list:
            m = operator_moments(
                experiment.symbol,
                experiment.rank_one,
                n,
                experiment.label,
                experiment.window_scale,
            )
            grid = sigma_grid(m, experiment.grid_rect, experiment.grid_resolution)
            for z, value in zip(grid.nodes().ravel(), grid.values.ravel()):
                row = (z.real, z.imag, value)
                result.rows.append((n, *row) if several else row)

            start = grid.argmin()
            entry: Dict[str, Any] = {
                "n": n,
                "nx": grid.nx,
                "ny": grid.ny,
                "argmin": start,
                "argmin_sigma": float(grid.values.min()),
                "zero": None,
                "zero_sigma": None,
            }
            try:
                zero = sigma_descent(m, start, experiment.descent)
                entry["zero"], entry["zero_sigma"] = zero, sigma(m, zero)
            except NoZeroFoundError as e:
                entry["descent_error"] = str(e)
            grids.append(entry)
        result.extra["grids"] = grids
        return result

    def limits(self, experiment: ExperimentConfig) -> CommandResult:
        lambdas = sorted(experiment.resolved_lambdas())
        spectra = self._spectra(experiment, experiment.rank_one)
        sample = limiting_set_scan(
            experiment.symbol,
            experiment.rank_one,
            experiment.n_list,
            lambdas,
            spectra,
            window_scale=experiment.window_scale,
        )
        columns = ["n", "circle_distance", "offaxis_base", "offaxis_perturbed"]
        columns += [f"dist_{i + 1}" for i in range(len(lambdas))]
        result = CommandResult("limits", columns)
        for n in experiment.n_list:
            result.rows.append(
                (
                    n,
                    sample.circle_distance.get(n, math.nan),
                    sample.offaxis_base.get(n, math.nan),
                    sample.offaxis_perturbed.get(n, math.nan),
                    *[sample.eigen_distances[float(lam)][n] for lam in lambdas],
                )
            )
        result.extra["lambdas"] = lambdas
        if sample.target is not None:
            result.extra["target"] = {"center": sample.target[0], "radius": sample.target[1]}
        return result

    def check_h(self, experiment: ExperimentConfig) -> CommandResult:
        if experiment.rank_one is None:
            raise ConfigError(
                [experiment.diagnostic("operator.rank_one", "check-h needs a rank-one term")]
            )
        result = CommandResult("check-h", ["lambda", "n", "r1", "r2", "sigma"])
        for lam in self._lambdas(experiment, "check-h"):
            rows = condition_H_residuals(
                experiment.symbol,
                experiment.rank_one,
                lam,
                experiment.n_list,
                window_scale=experiment.window_scale,
            )
            result.rows.extend((r.lam, r.n, r.r1, r.r2, r.sigma) for r in rows)
        return result

    def scan(self, experiment: ExperimentConfig) -> CommandResult:
        several = len(experiment.n_list) > 1
        result = CommandResult("scan", ["n", "re", "sigma"] if several else ["re", "sigma"])
        points = np.linspace(*experiment.scan_range, experiment.scan_points)
        scans = []
        for n in experiment.n_list:
            found = real_axis_scan(
                experiment.symbol, experiment.rank_one, n, points, experiment.window_scale
            )
            for x, value in zip(found.lambdas, found.values):
                result.rows.append((n, x, value) if several else (x, value))
            scans.append(
                {
                    "n": n,
                    "minima": found.minima,
                    "estimates": [list(pair) for pair in found.estimates],
                }
            )
        result.extra["scans"] = scans
        return result


def run(subcommand: str, config: RunConfig, sink: Optional[TextIO] = None) -> int:
    """
    Run a subcommand as configured.

    Args:
        subcommand: One of SUBCOMMANDS
        config: Runtime settings (experiment path, output, logging)
        sink: Output stream overriding config.out

    Returns:
        Process exit code
    """
    logger = None
    if config.log_file or config.log_console:
        logger = RunLogger(log_file=config.log_file, log_console=config.log_console)
    try:
        return CommandRunner(config, logger=logger).run(subcommand, sink)
    finally:
        if logger:
            logger.close()
