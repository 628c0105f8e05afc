"""Experiments on the model operators: pollution, convergence, clustering and limits."""

from .convergence import ConvergenceRow, convergence_table
from .galerkin import PollutionRow, essential_gap, galerkin_spectrum, pollution_report
from .hypothesis import HResidualRow, condition_H_residuals
from .limits import LimitingSetSample, circle_samples, limiting_set_scan, one_sided_distance
from .scan import ScanResult, real_axis_scan
from .sweep import check_n_list, operator_moments, spectrum_sweep
from .szego import ClusterStats, joukowski, szego_stats

__all__ = [
    "ClusterStats",
    "ConvergenceRow",
    "HResidualRow",
    "LimitingSetSample",
    "PollutionRow",
    "ScanResult",
    "check_n_list",
    "circle_samples",
    "condition_H_residuals",
    "convergence_table",
    "essential_gap",
    "galerkin_spectrum",
    "joukowski",
    "limiting_set_scan",
    "one_sided_distance",
    "operator_moments",
    "pollution_report",
    "real_axis_scan",
    "spectrum_sweep",
    "szego_stats",
]
