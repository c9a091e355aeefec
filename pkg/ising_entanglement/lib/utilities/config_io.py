"""
Reading and writing sweep specifications and run summaries.

Sweep specs are JSON or YAML documents shaped like

    base: {J, B1, B2, theta1, theta2, T}
    axis1: {param, start, stop, count, label?}
    axis2: {...}                       # optional
    couplings: [{target, expr: ratio|offset, source, value}]
    measure: concurrence | eof         # optional
    label: str                         # optional

A sweep run also writes a sidecar JSON next to its output holding the argmax
and the resolved spec; the sidecar itself is accepted as a spec document, so
feeding it back reproduces the run.

Provided functions:
- load_document(path) -> plain dict from .json/.yml/.yaml
- load_sweep_spec(path) -> SweepSpec
- write_sidecar(path, result) -> path of the sidecar written
- export_preset(preset, directory) -> YAML spec per curve
- curve_filename(preset_id, label, suffix) -> filesystem-safe output name
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, cast

from ruamel.yaml import YAML
from ruamel.yaml.comments import CommentedMap

from ising_entanglement.lib.sweeps.presets import FigurePreset
from ising_entanglement.lib.sweeps.sweep import SweepResult, SweepSpec, argmax, resolve_grid
from ising_entanglement.lib.utilities.angles import format_angle

YAML_SUFFIXES = (".yml", ".yaml")
SIDECAR_SUFFIX = ".meta.json"

# ---------------------------- YAML helpers ----------------------------

# Round-trip mode keeps comments a user put in a spec file; documents are
# converted to plain containers before pydantic sees them.
_yaml: Any = YAML(typ="rt")
_yaml.default_flow_style = False


def _plain(node: Any) -> Any:
    if isinstance(node, dict):
        return {str(k): _plain(v) for k, v in node.items()}
    if isinstance(node, list):
        return [_plain(v) for v in node]
    return node


def _read_yaml(path: Path) -> Dict[str, Any]:
    with path.open("r", encoding="utf-8") as f:
        loaded: Any = _yaml.load(f)
        return cast(Dict[str, Any], _plain(loaded) or {})


def _write_yaml(path: Path, data: Dict[str, Any], comment: str | None = None) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    cm = CommentedMap()
    for k, v in data.items():
        cm[k] = v
    if comment:
        cm.yaml_set_start_comment(comment)
    with path.open("w", encoding="utf-8") as f:
        _yaml.dump(cm, f)


# ---------------------------- Key slug helpers ----------------------------

SLUG_ESCAPE_PREFIX = "~"


def key_to_slug(key: str) -> str:
    """Convert an arbitrary key string into a filesystem-safe slug.

    - Alphanumeric characters and '-','_' are left as-is.
    - All other characters are encoded as '~HH' where HH is the hex code of the
      character's ordinal.
    """

    pieces: List[str] = []
    for ch in key:
        if ch.isalnum() or ch in "-_":
            pieces.append(ch)
        else:
            pieces.append(f"{SLUG_ESCAPE_PREFIX}{ord(ch):02X}")
    return "".join(pieces)


def curve_filename(preset_id: str, label: str | None, suffix: str) -> str:
    return f"{preset_id}_{key_to_slug(label or 'curve')}{suffix}"


# ---------------------------- Specs ----------------------------


def load_document(path: str | Path) -> Dict[str, Any]:
    """Parse a JSON or YAML file into plain dicts and lists.

    Raises:
        OSError: unreadable file.
        ValueError: malformed JSON/YAML, or a top level that is not a mapping.
    """
    path = Path(path)
    if path.suffix.lower() in YAML_SUFFIXES:
        try:
            data: Any = _read_yaml(path)
        except OSError:
            raise
        except Exception as exc:  # ruamel raises several unrelated types
            raise ValueError(f"{path}: invalid YAML: {exc}") from exc
    else:
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError(f"{path}: top level must be a mapping")
    return data


def load_sweep_spec(path: str | Path) -> SweepSpec:
    """Load and validate a sweep spec, unwrapping a sidecar document if given one.

    Raises:
        pydantic.ValidationError: the document does not describe a valid sweep.
    """
    data = load_document(path)
    if "spec" in data and "argmax" in data:
        data = data["spec"]
    return SweepSpec.model_validate(data)


def sidecar_path(output: Path) -> Path:
    return output.with_name(output.stem + SIDECAR_SUFFIX)


def write_sidecar(output: Path, result: SweepResult) -> Path:
    """Write <output stem>.meta.json with the argmax and the resolved spec."""
    coordinates, value = argmax(result)
    payload = {
        "output": output.name,
        "preset_id": result.preset_id,
        "argmax": {"coordinates": coordinates, "value": value},
        "meta": result.meta,
        "spec": result.spec.model_dump(mode="json"),
    }
    path = sidecar_path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return path


def _curve_comment(preset: FigurePreset, spec: SweepSpec) -> str:
    text = f"{preset.id}: {preset.description}"
    if not any(axis.param.startswith("theta") for axis in spec.axes):
        grid = resolve_grid(spec)
        text += f"; theta1={format_angle(grid['theta1'][0])}, theta2={format_angle(grid['theta2'][0])}"
    return text


def export_preset(preset: FigurePreset, directory: str | Path) -> List[Path]:
    """Write each curve of a preset as a standalone YAML sweep spec."""
    written: List[Path] = []
    for spec in preset.curves:
        path = Path(directory) / curve_filename(preset.id, spec.label, ".yml")
        _write_yaml(path, spec.model_dump(mode="json"), comment=_curve_comment(preset, spec))
        written.append(path)
    return written
