"""Compact summaries of numerical objects for event logs."""

from typing import Any, Dict

import numpy as np

from ..engine import SecondOrderSpectrum
from ..operators import MomentMatrices


def serialize_moments(m: MomentMatrices) -> Dict[str, Any]:
    """d, n, label and norms of a pair of moment matrices."""
    return {
        "label": m.label,
        "n": m.n,
        "d": m.d,
        "norm_a": float(np.linalg.norm(m.A, 2)) if m.d else 0.0,
        "norm_b": float(np.linalg.norm(m.B, 2)) if m.d else 0.0,
        "trace_a": float(np.trace(m.A).real),
    }


def serialize_spectrum(s: SecondOrderSpectrum) -> Dict[str, Any]:
    """Size and extent of a second order spectrum."""
    state: Dict[str, Any] = {"label": s.label, "n": s.n, "d": s.d, "points": len(s)}
    if len(s):
        state["extent"] = {
            "re_min": float(s.points.real.min()),
            "re_max": float(s.points.real.max()),
            "im_max": float(np.abs(s.points.imag).max()),
        }
        state["mean"] = s.mean.real
    return state
