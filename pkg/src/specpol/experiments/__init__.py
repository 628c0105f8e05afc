"""Experiment configurations and bundled presets."""

from .loader import ExperimentConfig, available_presets, load_preset

__all__ = ["ExperimentConfig", "available_presets", "load_preset"]
