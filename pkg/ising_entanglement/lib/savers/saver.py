"""
saver.py

Savers write a SweepResult to disk. CSV output is byte-stable: UTF-8, LF line
endings, a header row and every number printed with 12 significant digits
and no locale.
"""

from __future__ import annotations

import csv
import json
import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

from ising_entanglement.lib.sweeps.sweep import SweepResult

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12


def format_value(x: float) -> str:
    # + 0.0 turns -0.0 into 0.0
    return f"{x + 0.0:.{SIGNIFICANT_DIGITS}g}"


class GenericSaver(ABC):
    """
    Abstract base class for all savers.

    Subclasses write one SweepResult to one file and return the path written.
    """

    suffix: str = ""

    @abstractmethod
    def save(self, result: SweepResult, path: Path) -> Path:
        """
        Save the provided result.

        Args:
            result: evaluated sweep
            path: destination file; parent directories are created

        Raises:
            OSError: if the file cannot be written
        """
        pass


class CsvSaver(GenericSaver):
    """One row per grid point: axis coordinates then the measured value."""

    suffix = ".csv"

    def save(self, result: SweepResult, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(result.columns)
            for row in result.rows():
                writer.writerow([format_value(x) for x in row])
        logger.info("wrote %d rows to %s", result.values.size, path)
        return path


class JsonSaver(GenericSaver):
    """Axes, the value grid (nested lists, axis1 major) and run metadata."""

    suffix = ".json"

    def save(self, result: SweepResult, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload: dict[str, Any] = {
            "preset_id": result.preset_id,
            "measure": result.spec.measure,
            "axes": {
                a.column: axis.tolist() for a, axis in zip(result.spec.axes, result.axes)
            },
            "values": result.values.tolist(),
            "meta": result.meta,
        }
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        logger.info("wrote %s", path)
        return path


SAVERS: dict[str, type[GenericSaver]] = {"csv": CsvSaver, "json": JsonSaver}


def saver_for(fmt: str) -> GenericSaver:
    return SAVERS[fmt]()
