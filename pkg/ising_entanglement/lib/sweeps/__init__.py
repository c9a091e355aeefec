from ising_entanglement.lib.sweeps.sweep import (
    AngleOptimum,
    Axis,
    Coupling,
    SweepResult,
    SweepSpec,
    argmax,
    default_workers,
    evaluate_grid,
    optimal_angle,
    resolve_grid,
    run_sweep,
)
from ising_entanglement.lib.sweeps.presets import PRESET_IDS, FigurePreset, figure_preset

__all__ = [
    "PRESET_IDS",
    "AngleOptimum",
    "Axis",
    "Coupling",
    "FigurePreset",
    "SweepResult",
    "SweepSpec",
    "argmax",
    "default_workers",
    "evaluate_grid",
    "figure_preset",
    "optimal_angle",
    "resolve_grid",
    "run_sweep",
]
