"""Closed-form predictions, the run/sweep pipeline and the `comax` CLI"""

from .predictions import PREDICTION_TABLE, Prediction, generic_predictions, predict
from .report import InvariantReport, SweepCell, SweepReport
from .runner import RunConfig, observe, run, sweep

__all__ = [
    "InvariantReport",
    "PREDICTION_TABLE",
    "Prediction",
    "RunConfig",
    "SweepCell",
    "SweepReport",
    "generic_predictions",
    "observe",
    "predict",
    "run",
    "sweep",
]
