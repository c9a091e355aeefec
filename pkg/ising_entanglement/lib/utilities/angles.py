"""
Angle literals and folding.

Angles are given either in radians (1.5708) or as multiples of pi ("0.5pi",
"pi", "-0.25pi"). Both spellings of the same angle resolve to the same float
because the pi form is always evaluated as float(coefficient) * np.pi.
"""

from __future__ import annotations

import math
import numbers
import re

import numpy as np

_PI_LITERAL = re.compile(r"^\s*([+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi\s*$")


def parse_angle(value: float | str) -> float:
    """Parse a radian number or a "<float>pi" string into radians."""
    if isinstance(value, bool):
        raise ValueError(f"not an angle: {value!r}")
    if isinstance(value, numbers.Real):
        angle = float(value)
    else:
        match = _PI_LITERAL.match(str(value))
        if match is not None:
            coefficient = match.group(1)
            angle = (1.0 if coefficient is None else float(coefficient)) * np.pi
        else:
            try:
                angle = float(str(value))
            except ValueError:
                raise ValueError(f"not an angle: {value!r}") from None
    if not math.isfinite(angle):
        raise ValueError(f"angle must be finite, got {value!r}")
    return angle


def fold_angle(theta: float) -> float:
    """Map any finite angle onto [0, pi] using theta -> -theta and 2pi periodicity.

    Reflecting the x-component of one field is a local unitary (conjugation by
    that qubit's sigma_z), so folding never changes a concurrence.
    """
    if 0.0 <= theta <= np.pi:
        return theta
    reduced = math.fmod(theta, 2.0 * np.pi)
    if reduced < 0.0:
        reduced += 2.0 * np.pi
    if reduced > np.pi:
        reduced = 2.0 * np.pi - reduced
    return reduced


def format_angle(theta: float) -> str:
    """Human-readable multiple of pi, used in exported spec comments."""
    return f"{theta / np.pi:.6g}pi"
