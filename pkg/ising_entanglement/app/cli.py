"""
Command-line front end.

    ising-ent point --B1 1 --B2 1 --theta1 0.5pi --theta2 0.5pi --T 0
    ising-ent preset fig1a -o out/
    ising-ent sweep spec.json -o out/curve.csv
    ising-ent presets [--export DIR]

Exit status: 0 success, 2 invalid input, 3 file system error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Literal, Self

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from ising_entanglement import __version__
from ising_entanglement.lib.entanglement import concurrence
from ising_entanglement.lib.errors import ParameterError, SweepPointError
from ising_entanglement.lib.model import ModelParams, field_components, ground_energy
from ising_entanglement.lib.savers import format_value, saver_for
from ising_entanglement.lib.sweeps import PRESET_IDS, SweepSpec, figure_preset, run_sweep
from ising_entanglement.lib.thermal import density_matrix, free_energy
from ising_entanglement.lib.utilities.config_io import (
    curve_filename,
    export_preset,
    load_sweep_spec,
    write_sidecar,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3


class RunConfig(BaseModel):
    """One CLI invocation; exactly the payload of its mode is set."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    mode: Literal["point", "preset", "sweep"]
    params: ModelParams | None = None
    preset_id: str | None = None
    sweep: SweepSpec | None = None
    output_path: Path | None = None
    format: Literal["csv", "json"] = "csv"
    workers: int | None = None
    count: int | None = None

    @model_validator(mode="after")
    def _check_payload(self) -> Self:
        payloads = {"point": self.params, "preset": self.preset_id, "sweep": self.sweep}
        present = [mode for mode, value in payloads.items() if value is not None]
        if present != [self.mode]:
            raise ValueError(f"{self.mode} mode requires exactly its own payload, got {present}")
        if self.mode == "sweep" and self.output_path is None:
            raise ValueError("sweep mode requires an output path")
        return self


def _json_path(loc: tuple[int | str, ...]) -> str:
    return "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in loc)


def _describe(exc: ValidationError) -> str:
    first = exc.errors()[0]
    return f"{_json_path(first['loc'])}: {first['msg']}"


def point_record(p: ModelParams) -> dict[str, Any]:
    state = density_matrix(p)
    result = concurrence(state)
    record: dict[str, Any] = {
        **p.model_dump(),
        **dict(zip(("Bx1", "Bz1", "Bx2", "Bz2"), field_components(p))),
        "concurrence": result.concurrence,
        "eof": result.eof,
        "lambdas": [float(x) for x in result.lambdas],
        "ground_energy": ground_energy(p),
        "kind": state.kind.value,
        "degeneracy": state.degeneracy,
    }
    if p.T > 0.0:
        record["free_energy"] = free_energy(p)
    return record


def _record_csv(record: dict[str, Any]) -> str:
    flat: dict[str, Any] = {}
    for key, value in record.items():
        if key == "lambdas":
            flat.update({f"lambda{i + 1}": x for i, x in enumerate(value)})
        else:
            flat[key] = value
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(flat)
    writer.writerow(format_value(v) if isinstance(v, float) else v for v in flat.values())
    return buffer.getvalue()


def cmd_point(config: RunConfig) -> int:
    assert config.params is not None
    record = point_record(config.params)
    text = (
        json.dumps(record) + "\n" if config.format == "json" else _record_csv(record)
    )
    if config.output_path is None:
        sys.stdout.write(text)
    else:
        config.output_path.parent.mkdir(parents=True, exist_ok=True)
        config.output_path.write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_preset(config: RunConfig) -> int:
    assert config.preset_id is not None
    preset = figure_preset(config.preset_id, count=config.count)
    saver = saver_for(config.format)
    directory = config.output_path or Path(".")
    for spec in preset.curves:
        result = run_sweep(spec, workers=config.workers, preset_id=preset.id)
        path = saver.save(result, directory / curve_filename(preset.id, spec.label, saver.suffix))
        write_sidecar(path, result)
        print(path)
    return EXIT_OK


def cmd_sweep(config: RunConfig) -> int:
    assert config.sweep is not None and config.output_path is not None
    result = run_sweep(config.sweep, workers=config.workers)
    path = saver_for(config.format).save(result, config.output_path)
    write_sidecar(path, result)
    print(path)
    return EXIT_OK


def cmd_presets(export: Path | None) -> int:
    for preset_id in PRESET_IDS:
        preset = figure_preset(preset_id)
        labels = ",".join(spec.label or "" for spec in preset.curves)
        print(f"{preset_id}\t{preset.description}\t{labels}")
        if export is not None:
            export_preset(preset, export)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        "ising-ent", description="Entanglement of the two-qubit Ising model in inhomogeneous fields."
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--verbose", action="store_true", help="Enable info logging")
    sub = parser.add_subparsers(dest="command", required=True)

    point = sub.add_parser("point", help="Evaluate a single parameter point")
    point.add_argument("--J", type=float, default=1.0)
    point.add_argument("--B1", type=float, default=0.0)
    point.add_argument("--B2", type=float, default=0.0)
    point.add_argument("--theta1", default="0", help="radians or e.g. 0.5pi")
    point.add_argument("--theta2", default="0", help="radians or e.g. 0.5pi")
    point.add_argument("--T", type=float, default=0.0, help="temperature in units of J/k_B")
    point.add_argument("-o", "--output", type=Path, help="write the record here instead of stdout")
    point.add_argument("--format", choices=["json", "csv"], default="json")

    preset = sub.add_parser("preset", help="Write the data of a figure preset, one file per curve")
    preset.add_argument("preset_id", metavar="id")
    preset.add_argument("-o", "--output", type=Path, default=Path("."), help="output directory")
    preset.add_argument("--format", choices=["csv", "json"], default="csv")
    preset.add_argument("--count", type=int, help="grid points per axis")
    preset.add_argument("--workers", type=int, help="worker processes (default $ISING_ENT_WORKERS or 1)")

    sweep = sub.add_parser("sweep", help="Run a sweep described by a JSON or YAML file")
    sweep.add_argument("spec", type=Path)
    sweep.add_argument("-o", "--output", type=Path, required=True, help="output file")
    sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    sweep.add_argument("--workers", type=int, help="worker processes (default $ISING_ENT_WORKERS or 1)")

    presets = sub.add_parser("presets", help="List preset ids")
    presets.add_argument("--export", type=Path, help="also write each curve as a YAML sweep spec")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    common: dict[str, Any] = {"mode": args.command, "output_path": args.output, "format": args.format}
    match args.command:
        case "point":
            params = ModelParams(
                J=args.J, B1=args.B1, B2=args.B2, theta1=args.theta1, theta2=args.theta2, T=args.T
            )
            return RunConfig(**common, params=params)
        case "preset":
            return RunConfig(**common, preset_id=args.preset_id, workers=args.workers, count=args.count)
        case _:
            return RunConfig(**common, sweep=load_sweep_spec(args.spec), workers=args.workers)


def run(args: argparse.Namespace) -> int:
    if args.command == "presets":
        return cmd_presets(args.export)
    config = _config(args)
    logger.debug("run config: %s", config)
    match config.mode:
        case "point":
            return cmd_point(config)
        case "preset":
            return cmd_preset(config)
        case _:
            return cmd_sweep(config)


def main(argv: list[str] | None = None) -> None:
    args = _parser().parse_args(argv)
    level = logging.DEBUG if args.debug else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        code = run(args)
    except ValidationError as exc:
        print(f"error: {_describe(exc)}", file=sys.stderr)
        code = EXIT_USAGE
    except SweepPointError as exc:
        if not isinstance(exc.cause, ParameterError):
            raise
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    raise SystemExit(code)


if __name__ == "__main__":
    main()
