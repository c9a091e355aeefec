"""
presets.py

Named sweep definitions for the standard concurrence curves and (theta1,
theta2) contour maps, plus a ratio-1.5 curve set and a non-uniform contour.

1-D presets sweep B = B1 over [0.01 J, 4 J] and bind B2 to B1 through a ratio;
each panel has up to three curves, labelled solid, long_dashed and
short_dashed. 2-D presets map (theta1, theta2) over [0, pi]^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ising_entanglement.lib.errors import PresetError
from ising_entanglement.lib.model import ModelParams
from ising_entanglement.lib.sweeps.sweep import Axis, Coupling, SweepSpec

B_START = 0.01
B_STOP = 4.0
CURVE_POINTS = 401
CONTOUR_POINTS = 201

LINE_STYLES = ("solid", "long_dashed", "short_dashed")
EQUAL_ANGLES = ((0.01, 0.01), (0.1, 0.1), (0.5, 0.5))
SHIFTED_ANGLES = ((0.01, 0.011), (0.1, 0.11), (0.5, 0.51))
THETA1_ONLY = (0.01, 0.1, 0.5)


@dataclass(frozen=True)
class FigurePreset:
    id: str
    description: str
    curves: tuple[SweepSpec, ...]

    @property
    def is_contour(self) -> bool:
        return self.curves[0].axis2 is not None


def _b_axis(count: int) -> Axis:
    return Axis(param="B1", start=B_START, stop=B_STOP, count=count, label="B")


def _ratio(value: float) -> Coupling:
    return Coupling(target="B2", expr="ratio", source="B1", value=value)


def _b_curves(
    angles: tuple[tuple[float, float | None], ...],
    ratio: float,
    T: float,
    count: int,
    offset: float | None = None,
) -> tuple[SweepSpec, ...]:
    """Three B-sweeps, one per angle pair (multiples of pi).

    With offset set, theta2 is bound to theta1 + offset*pi instead of taken
    from the pair.
    """
    curves = []
    for style, (t1, t2) in zip(LINE_STYLES, angles):
        couplings = [_ratio(ratio)]
        if offset is not None:
            couplings.append(
                Coupling(target="theta2", expr="offset", source="theta1", value=offset * np.pi)
            )
            base = ModelParams(J=1.0, theta1=t1 * np.pi, T=T)
        else:
            base = ModelParams(J=1.0, theta1=t1 * np.pi, theta2=(t2 or t1) * np.pi, T=T)
        curves.append(
            SweepSpec(base=base, axis1=_b_axis(count), couplings=tuple(couplings), label=style)
        )
    return tuple(curves)


def _contour(B1: float, ratio: float, T: float, count: int) -> tuple[SweepSpec, ...]:
    spec = SweepSpec(
        base=ModelParams(J=1.0, B1=B1, T=T),
        axis1=Axis(param="theta1", start=0.0, stop=np.pi, count=count),
        axis2=Axis(param="theta2", start=0.0, stop=np.pi, count=count),
        couplings=(_ratio(ratio),),
        label="contour",
    )
    return (spec,)


def _fig2_panels(T: float, count: int) -> dict[str, tuple[SweepSpec, ...]]:
    thetas = tuple((t, None) for t in THETA1_ONLY)
    return {
        "a": _b_curves(thetas, 1.0005, T, count, offset=0.01),
        "b": _b_curves(thetas, 1.0005, T, count, offset=0.1),
        "c": _b_curves(thetas, 1.05, T, count, offset=0.01),
        "d": _b_curves(thetas, 1.05, T, count, offset=0.1),
    }


def _build(preset_id: str, count: int | None) -> FigurePreset:
    n1 = count or CURVE_POINTS
    n2 = count or CONTOUR_POINTS
    match preset_id:
        case "fig1a":
            return FigurePreset(preset_id, "T=0, B2=B1, theta1=theta2", _b_curves(EQUAL_ANGLES, 1.0, 0.0, n1))
        case "fig1b":
            return FigurePreset(preset_id, "T=0, B2=1.0005 B1, theta1=theta2", _b_curves(EQUAL_ANGLES, 1.0005, 0.0, n1))
        case "fig1c":
            return FigurePreset(preset_id, "T=0, B2=B1, theta2 slightly off theta1", _b_curves(SHIFTED_ANGLES, 1.0, 0.0, n1))
        case "fig1d":
            return FigurePreset(preset_id, "T=0, B2=1.05 B1, theta1=theta2", _b_curves(EQUAL_ANGLES, 1.05, 0.0, n1))
        case "fig2a" | "fig2b" | "fig2c" | "fig2d":
            panel = _fig2_panels(0.0, n1)[preset_id[-1]]
            return FigurePreset(preset_id, "T=0, unequal magnitudes and directions", panel)
        case "fig3a":
            return FigurePreset(preset_id, "T=0.01, B2=B1, theta1=theta2", _b_curves(EQUAL_ANGLES, 1.0, 0.01, n1))
        case "fig3b":
            return FigurePreset(preset_id, "T=0.01, B2=1.05 B1, theta1=theta2", _b_curves(EQUAL_ANGLES, 1.05, 0.01, n1))
        case "fig4a" | "fig4b" | "fig4c" | "fig4d":
            panel = _fig2_panels(0.1, n1)[preset_id[-1]]
            return FigurePreset(preset_id, "T=0.1, unequal magnitudes and directions", panel)
        case "fig5a":
            return FigurePreset(preset_id, "T=0, B1=B2=2.1", _contour(2.1, 1.0, 0.0, n2))
        case "fig5b":
            return FigurePreset(preset_id, "T=0, B1=2.1, B2=3 B1", _contour(2.1, 3.0, 0.0, n2))
        case "fig6a":
            return FigurePreset(preset_id, "T=1, B1=B2=2.1", _contour(2.1, 1.0, 1.0, n2))
        case "fig6b":
            return FigurePreset(preset_id, "T=1, B1=2.1, B2=3 B1", _contour(2.1, 3.0, 1.0, n2))
        case "ratio1p5":
            return FigurePreset(preset_id, "T=0, B2=1.5 B1, theta1=theta2", _b_curves(EQUAL_ANGLES, 1.5, 0.0, n1))
        case "nonuniform_contour":
            return FigurePreset(preset_id, "T=0, B1=1, B2=1.5", _contour(1.0, 1.5, 0.0, n2))
    raise PresetError(preset_id, PRESET_IDS)


PRESET_IDS = [
    *(f"fig1{p}" for p in "abcd"),
    *(f"fig2{p}" for p in "abcd"),
    "fig3a",
    "fig3b",
    *(f"fig4{p}" for p in "abcd"),
    "fig5a",
    "fig5b",
    "fig6a",
    "fig6b",
    "ratio1p5",
    "nonuniform_contour",
]


def figure_preset(preset_id: str, count: int | None = None) -> FigurePreset:
    """Sweep definitions for one preset.

    Args:
        preset_id: one of PRESET_IDS.
        count: grid points per axis, overriding the 401 (curves) / 201 (contours) defaults.

    Raises:
        PresetError: unknown id.
    """
    return _build(preset_id, count)
