"""Rectangular (gamma, delta) grids of bound values, with CSV/JSON emission.

A grid is evaluated from a single named bound source on axes spanning
``[0, q-1] x [0, 1 - 1/q]``.  Cells falling outside the source's domain
are emitted as rate 0 with ``feasible=false`` (raw ``nan``) so the files
stay rectangular; plotting tools then render the flat zero floor.

Rates and coordinates are printed with 12 significant digits.  Emission
is idempotent: parsing an emitted file and emitting again reproduces the
file byte for byte.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from .bounds import (
    SRC_COMBINED_OUTER,
    SRC_DELETION_ONLY,
    SRC_INNER,
    SRC_INSERTION_ONLY,
    SRC_INTERPOLATED_OUTER,
    SRC_LINEAR_OUTER,
    SRC_SPOKE,
    BoundValue,
    check_alphabet,
    deletion_only_piecewise_bound,
    inner_bound,
    insertion_only_bound,
    snap_floor,
    spoke_bound,
)
from .errors import DomainError
from .geometry import linear_outer_bound
from .optimizer import combined_outer_bound, interpolated_outer_bound

CSV_HEADER = "gamma,delta,rate,feasible,source"

PointEvaluator = Callable[[int, float, float], BoundValue]


def _eval_insertion_only(q: int, gamma: float, delta: float) -> BoundValue:
    if delta != 0.0:
        raise DomainError("insertion-only bound is defined on the delta = 0 cut")
    return insertion_only_bound(q, gamma)


def _eval_deletion_only(q: int, gamma: float, delta: float) -> BoundValue:
    if gamma != 0.0:
        raise DomainError("deletion-only bound is defined on the gamma = 0 cut")
    return deletion_only_piecewise_bound(q, delta)


def _eval_spoke(q: int, gamma: float, delta: float) -> BoundValue:
    d, frac = snap_floor(delta * q)
    if frac != 0.0:
        raise DomainError(f"spoke bound needs delta = d/q, got {delta}")
    if d >= q:
        raise DomainError(f"delta = {delta} leaves no symbols")
    return spoke_bound(q, d, gamma / (1.0 - d / q))


def _eval_inner(q: int, gamma: float, delta: float) -> BoundValue:
    return inner_bound(q, gamma, delta)


BOUND_EVALUATORS: dict[str, PointEvaluator] = {
    SRC_INNER: _eval_inner,
    SRC_INSERTION_ONLY: _eval_insertion_only,
    SRC_DELETION_ONLY: _eval_deletion_only,
    SRC_SPOKE: _eval_spoke,
    SRC_LINEAR_OUTER: linear_outer_bound,
    SRC_INTERPOLATED_OUTER: interpolated_outer_bound,
    SRC_COMBINED_OUTER: combined_outer_bound,
}

BOUND_SOURCES = tuple(BOUND_EVALUATORS)


def point_evaluator(source: str) -> PointEvaluator:
    """Look up a bound evaluator by its source tag."""
    try:
        return BOUND_EVALUATORS[source]
    except KeyError:
        raise DomainError(
            f"unknown bound source {source!r}; choose from {', '.join(BOUND_SOURCES)}"
        ) from None


@dataclass(frozen=True)
class SurfaceGrid:
    """Bound values over a rectangular grid; rows run over delta, then gamma."""

    q: int
    gamma_axis: tuple[float, ...]
    delta_axis: tuple[float, ...]
    values: tuple[tuple[BoundValue, ...], ...]

    def __post_init__(self) -> None:
        check_alphabet(self.q)
        if len(self.values) != len(self.delta_axis):
            raise DomainError("grid row count does not match the delta axis")
        for row in self.values:
            if len(row) != len(self.gamma_axis):
                raise DomainError("grid column count does not match the gamma axis")
            for cell in row:
                if not 0.0 <= cell.rate <= 1.0:
                    raise DomainError(f"rate {cell.rate} outside [0, 1]")

    def rates(self) -> np.ndarray:
        """Rates as a (len(delta_axis), len(gamma_axis)) array."""
        return np.array([[cell.rate for cell in row] for row in self.values])


def evaluate_surface(q: int, source: str, resolution: int) -> SurfaceGrid:
    """Evaluate one bound on a ``resolution x resolution`` grid."""
    q = check_alphabet(q)
    if resolution < 2:
        raise DomainError(f"resolution must be >= 2 per axis, got {resolution}")
    evaluate = point_evaluator(source)
    gamma_axis = tuple(np.linspace(0.0, q - 1.0, resolution))
    delta_axis = tuple(np.linspace(0.0, 1.0 - 1.0 / q, resolution))
    rows = []
    for delta in delta_axis:
        row = []
        for gamma in gamma_axis:
            try:
                row.append(evaluate(q, gamma, delta))
            except DomainError:
                row.append(BoundValue(rate=0.0, feasible=False, source=source, raw=math.nan))
        rows.append(tuple(row))
    return SurfaceGrid(q=q, gamma_axis=gamma_axis, delta_axis=delta_axis, values=tuple(rows))


def _fmt_rate(x: float) -> str:
    return f"{x:.12g}"


def _fmt_coord(x: float) -> str:
    # shortest exact representation, so parsed grids keep the axes bit-exact
    return repr(float(x))


def surface_to_csv(grid: SurfaceGrid) -> str:
    lines = [CSV_HEADER]
    for delta, row in zip(grid.delta_axis, grid.values):
        for gamma, cell in zip(grid.gamma_axis, row):
            feas = "true" if cell.feasible else "false"
            lines.append(
                f"{_fmt_coord(gamma)},{_fmt_coord(delta)},"
                f"{_fmt_rate(cell.rate)},{feas},{cell.source}"
            )
    return "\n".join(lines) + "\n"


def surface_to_json_obj(grid: SurfaceGrid) -> dict:
    values = []
    for delta, row in zip(grid.delta_axis, grid.values):
        for gamma, cell in zip(grid.gamma_axis, row):
            values.append(
                {
                    "gamma": float(gamma),
                    "delta": float(delta),
                    "rate": float(_fmt_rate(cell.rate)),
                    "feasible": cell.feasible,
                    "source": cell.source,
                }
            )
    return {
        "q": grid.q,
        "gamma_axis": [float(g) for g in grid.gamma_axis],
        "delta_axis": [float(d) for d in grid.delta_axis],
        "values": values,
    }


def _grid_from_cells(
    q: int, cells: list[tuple[float, float, BoundValue]]
) -> SurfaceGrid:
    gamma_axis = tuple(dict.fromkeys(g for g, _, _ in cells))
    delta_axis = tuple(dict.fromkeys(d for _, d, _ in cells))
    lookup = {(g, d): v for g, d, v in cells}
    rows = tuple(
        tuple(lookup[(g, d)] for g in gamma_axis) for d in delta_axis
    )
    return SurfaceGrid(q=q, gamma_axis=gamma_axis, delta_axis=delta_axis, values=rows)


def load_surface_csv(path: str | Path, q: int) -> SurfaceGrid:
    """Rebuild a grid from an emitted CSV file.

    The CSV schema does not carry the unclamped raw value, so parsed
    cells get ``raw = rate`` when feasible and ``nan`` otherwise.
    """
    text = Path(path).read_text()
    lines = [line for line in text.splitlines() if line]
    if not lines or lines[0] != CSV_HEADER:
        raise DomainError(f"{path} does not start with the expected header {CSV_HEADER!r}")
    cells = []
    for line in lines[1:]:
        gamma_s, delta_s, rate_s, feas_s, source = line.split(",", 4)
        rate = float(rate_s)
        feasible = feas_s == "true"
        cells.append(
            (
                float(gamma_s),
                float(delta_s),
                BoundValue(
                    rate=rate,
                    feasible=feasible,
                    source=source,
                    raw=rate if feasible else math.nan,
                ),
            )
        )
    return _grid_from_cells(q, cells)


def load_surface_json(path: str | Path) -> SurfaceGrid:
    """Rebuild a grid from an emitted JSON file."""
    obj = json.loads(Path(path).read_text())
    cells = [
        (
            float(v["gamma"]),
            float(v["delta"]),
            BoundValue(
                rate=float(v["rate"]),
                feasible=bool(v["feasible"]),
                source=str(v["source"]),
                raw=float(v["rate"]) if v["feasible"] else math.nan,
            ),
        )
        for v in obj["values"]
    ]
    return _grid_from_cells(int(obj["q"]), cells)


def emit_surface(
    q: int,
    bound_source: str,
    grid_resolution: int,
    output_format: str,
    out_path: str | Path,
) -> SurfaceGrid:
    """Evaluate a bound surface and write it to ``out_path``.

    ``output_format`` is ``"csv"`` (columns gamma,delta,rate,feasible,source
    with a header row, row-major over delta then gamma) or ``"json"``.
    """
    if output_format not in ("csv", "json"):
        raise DomainError(f"output format must be csv or json, got {output_format!r}")
    grid = evaluate_surface(q, bound_source, grid_resolution)
    path = Path(out_path)
    if output_format == "csv":
        path.write_text(surface_to_csv(grid))
    else:
        path.write_text(json.dumps(surface_to_json_obj(grid), indent=1) + "\n")
    return grid
