"""
sweep.py

1-D and 2-D parameter sweeps of the concurrence (or entanglement of formation).

Grid points are independent, so a sweep flattens its grid, evaluates it in
contiguous chunks (optionally in worker processes) and copies each chunk
into a preallocated slot. Per-point results do not depend on chunking, so
the output is identical for any worker count.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Iterator, Literal, Self

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ising_entanglement.lib.entanglement import ConcurrenceResult, concurrence
from ising_entanglement.lib.errors import LinalgError, ParameterError, SweepPointError
from ising_entanglement.lib.model import ANGLE_IDS, ModelParams, hamiltonian_matrix
from ising_entanglement.lib.thermal import gibbs_matrices
from ising_entanglement.lib.utilities.angles import parse_angle

logger = logging.getLogger(__name__)

SweepParam = Literal["B1", "B2", "theta1", "theta2", "T"]
Measure = Literal["concurrence", "eof"]

WORKERS_ENV = "ISING_ENT_WORKERS"
MIN_CHUNK = 2048


class Axis(BaseModel):
    """A linearly spaced grid axis, endpoints included."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    param: SweepParam
    start: float
    stop: float
    count: int = Field(ge=2)
    label: str | None = None

    @model_validator(mode="before")
    @classmethod
    def _parse_angles(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("param") in ANGLE_IDS:
            data = dict(data)
            for key in ("start", "stop"):
                if key in data:
                    data[key] = parse_angle(data[key])
        return data

    @model_validator(mode="after")
    def _check_range(self) -> Self:
        if not self.start < self.stop:
            raise ValueError("start must be smaller than stop")
        if self.param not in ANGLE_IDS and self.start < 0.0:
            raise ValueError(f"{self.param} cannot be negative")
        return self

    @property
    def column(self) -> str:
        return self.label or self.param

    def values(self) -> NDArray[np.float64]:
        return np.linspace(self.start, self.stop, self.count)


class Coupling(BaseModel):
    """target = value * source ("ratio") or target = source + value ("offset")."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    target: SweepParam
    expr: Literal["ratio", "offset"]
    source: SweepParam
    value: float

    @field_validator("value", mode="before")
    @classmethod
    def _parse_value(cls, value: Any) -> Any:
        return parse_angle(value) if isinstance(value, str) else value

    @model_validator(mode="after")
    def _check_refs(self) -> Self:
        if self.target == self.source:
            raise ValueError("a coupling cannot bind a parameter to itself")
        return self

    def apply(self, source: NDArray[np.float64]) -> NDArray[np.float64]:
        return source * self.value if self.expr == "ratio" else source + self.value


class SweepSpec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    base: ModelParams = Field(default_factory=ModelParams)
    axis1: Axis
    axis2: Axis | None = None
    couplings: tuple[Coupling, ...] = ()
    measure: Measure = "concurrence"
    label: str | None = None

    @model_validator(mode="after")
    def _check_bindings(self) -> Self:
        swept = [a.param for a in self.axes]
        if len(set(swept)) != len(swept):
            raise ValueError("axis1 and axis2 sweep the same parameter")
        targets = [c.target for c in self.couplings]
        if len(set(targets)) != len(targets):
            raise ValueError("a parameter is the target of more than one coupling")
        for c in self.couplings:
            if c.target in swept:
                raise ValueError(f"coupling target {c.target} is also a swept axis")
        return self

    @property
    def axes(self) -> tuple[Axis, ...]:
        return (self.axis1,) if self.axis2 is None else (self.axis1, self.axis2)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(a.count for a in self.axes)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape))


@dataclass(frozen=True)
class SweepResult:
    """Grid axes and one value per point, values shaped like the grid (axis1 major)."""

    spec: SweepSpec
    axes: tuple[NDArray[np.float64], ...]
    values: NDArray[np.float64]
    preset_id: str | None = None
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def columns(self) -> list[str]:
        return [a.column for a in self.spec.axes] + [self.spec.measure]

    def rows(self) -> Iterator[tuple[float, ...]]:
        """(axis coordinates..., value) in row-major order."""
        for index in np.ndindex(*self.values.shape):
            coords = tuple(float(axis[i]) for axis, i in zip(self.axes, index))
            yield (*coords, float(self.values[index]))

    def coordinates(self, flat_index: int) -> dict[str, float]:
        index = np.unravel_index(flat_index, self.values.shape)
        return {
            a.param: float(axis[i]) for a, axis, i in zip(self.spec.axes, self.axes, index)
        }


@dataclass(frozen=True)
class AngleOptimum:
    T: float
    theta: float
    concurrence: float


def resolve_grid(spec: SweepSpec) -> dict[str, NDArray[np.float64]]:
    """Flattened per-point model parameters, couplings applied in order."""
    mesh = np.meshgrid(*(a.values() for a in spec.axes), indexing="ij")
    base = spec.base.model_dump()
    grid = {name: np.full(spec.size, float(value)) for name, value in base.items()}
    for axis, values in zip(spec.axes, mesh):
        grid[axis.param] = values.ravel()
    for coupling in spec.couplings:
        grid[coupling.target] = coupling.apply(grid[coupling.source])
    return grid


def _check_grid(grid: dict[str, NDArray[np.float64]]) -> None:
    for name in ("B1", "B2", "T"):
        bad = np.flatnonzero(grid[name] < 0.0)
        if bad.size:
            point = {k: float(v[bad[0]]) for k, v in grid.items()}
            raise SweepPointError(point, ParameterError(name, "cannot be negative"))


def evaluate_grid(
    J: NDArray[np.float64],
    B1: NDArray[np.float64],
    B2: NDArray[np.float64],
    theta1: NDArray[np.float64],
    theta2: NDArray[np.float64],
    T: NDArray[np.float64],
) -> ConcurrenceResult:
    """Concurrence at every point: T == 0 points use the ground mixture, T > 0 the Gibbs state."""
    rho, _, _ = gibbs_matrices(hamiltonian_matrix(J, B1, B2, theta1, theta2), T)
    return concurrence(rho)


def _evaluate_chunk(
    columns: tuple[NDArray[np.float64], ...], measure: Measure
) -> NDArray[np.float64]:
    result = evaluate_grid(*columns)
    return np.asarray(result.concurrence if measure == "concurrence" else result.eof)


def default_workers() -> int:
    return max(1, int(os.environ.get(WORKERS_ENV, "1")))


def run_sweep(
    spec: SweepSpec, workers: int | None = None, preset_id: str | None = None
) -> SweepResult:
    """Evaluate spec on its full grid.

    Raises:
        SweepPointError: a grid point has invalid parameters or failed to evaluate.
    """
    workers = default_workers() if workers is None else max(1, workers)
    grid = resolve_grid(spec)
    _check_grid(grid)
    names = ("J", "B1", "B2", "theta1", "theta2", "T")
    n = spec.size
    chunk = max(MIN_CHUNK, -(-n // workers))
    bounds = [(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]
    logger.info("sweep %s: %d points, %d chunks, %d workers", spec.label or "", n, len(bounds), workers)

    out = np.empty(n)
    jobs = [tuple(grid[k][lo:hi] for k in names) for lo, hi in bounds]

    def record(lo: int, hi: int, compute: Callable[[], NDArray[np.float64]]) -> None:
        try:
            out[lo:hi] = compute()
        except LinalgError as exc:
            flat = lo + (exc.index or 0)
            raise SweepPointError({k: float(grid[k][flat]) for k in names}, exc) from exc
        logger.debug("chunk [%d, %d) done", lo, hi)

    if workers == 1 or len(bounds) == 1:
        for (lo, hi), columns in zip(bounds, jobs):
            record(lo, hi, partial(_evaluate_chunk, columns, spec.measure))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_evaluate_chunk, columns, spec.measure) for columns in jobs]
            for (lo, hi), future in zip(bounds, futures):
                record(lo, hi, future.result)

    axes = tuple(a.values() for a in spec.axes)
    return SweepResult(
        spec=spec,
        axes=axes,
        values=out.reshape(spec.shape),
        preset_id=preset_id,
        meta={"resolved_base": spec.base.model_dump(mode="json")},
    )


def argmax(result: SweepResult) -> tuple[dict[str, float], float]:
    """Largest value and its coordinates; the first one in row-major order on ties."""
    flat = int(np.argmax(result.values))
    return result.coordinates(flat), float(result.values.flat[flat])


def optimal_angle(
    B: float,
    temperatures: list[float],
    count: int = 181,
    J: float = 1.0,
    workers: int | None = None,
) -> list[AngleOptimum]:
    """Best common field angle theta1 = theta2 in [0, pi/2] at uniform field B, per temperature."""
    optima: list[AngleOptimum] = []
    for T in temperatures:
        spec = SweepSpec(
            base=ModelParams(J=J, B1=B, B2=B, T=T),
            axis1=Axis(param="theta1", start=0.0, stop=0.5 * np.pi, count=count, label="theta"),
            couplings=(Coupling(target="theta2", expr="offset", source="theta1", value=0.0),),
            label=f"optimal_angle_T{T:g}",
        )
        coords, value = argmax(run_sweep(spec, workers=workers))
        optima.append(AngleOptimum(T=T, theta=coords["theta1"], concurrence=value))
    return optima
