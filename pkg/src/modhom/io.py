"""CSV / JSON serialization with exact round-trip.

Numbers are written with 17 significant digits, which reconstructs IEEE
doubles bit-exactly; grids are serialized as (start, step, count) so a
re-parsed map carries the identical sampling axes, not per-point floats.
CSV carries axis metadata in '#'-prefixed comment lines above the header.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, Optional

import numpy as np

from .errors import InvalidInputError
from .maps import MapKind, SpectralMap
from .model import AxisKind, Grid1D, Grid2D


def fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _grid_comment(tag: str, grid: Grid1D) -> str:
    return (f"# {tag}: kind={grid.kind.value} start={fmt(grid.start)} "
            f"step={fmt(grid.step)} count={grid.count}")


def _grid_dict(grid: Grid1D) -> dict:
    return {"kind": grid.kind.value, "start": grid.start,
            "step": grid.step, "count": grid.count}


def _grid_from_dict(d: dict) -> Grid1D:
    return Grid1D(float(d["start"]), float(d["step"]), int(d["count"]),
                  AxisKind(d["kind"]))


def write_map_csv(path, smap: SpectralMap, metadata: Optional[Dict[str, str]] = None):
    """Matrix-layout CSV: rows follow the x axis, columns the y axis."""
    lines = ["# modhom spectral map", f"# kind: {smap.kind.value}",
             _grid_comment("x", smap.grid.x), _grid_comment("y", smap.grid.y)]
    for key in sorted(metadata or {}):
        lines.append(f"# meta: {key}={metadata[key]}")
    ys = smap.grid.y.points()
    lines.append(",".join([f"{smap.grid.x.kind.value}\\{smap.grid.y.kind.value}"]
                          + [fmt(y) for y in ys]))
    xs = smap.grid.x.points()
    for i, x in enumerate(xs):
        lines.append(",".join([fmt(x)] + [fmt(v) for v in smap.values[i]]))
    Path(path).write_text("\n".join(lines) + "\n")


def read_map_csv(path) -> SpectralMap:
    kind = None
    axes = {}
    rows = []
    for line in Path(path).read_text().splitlines():
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("kind:"):
                kind = MapKind(body.split(":", 1)[1].strip())
            elif body.startswith(("x:", "y:")):
                tag, rest = body.split(":", 1)
                fields = dict(item.split("=") for item in rest.split())
                axes[tag] = _grid_from_dict(fields)
            continue
        rows.append(line)
    if kind is None or "x" not in axes or "y" not in axes:
        raise InvalidInputError(f"{path} is not a modhom map CSV")
    data = [[float(tok) for tok in row.split(",")[1:]] for row in rows[1:]]
    return SpectralMap(Grid2D(axes["x"], axes["y"]), np.array(data), kind)


def write_map_json(path, smap: SpectralMap, metadata: Optional[Dict[str, str]] = None):
    doc = {
        "kind": smap.kind.value,
        "grid": {"x": _grid_dict(smap.grid.x), "y": _grid_dict(smap.grid.y)},
        "values": smap.values.tolist(),
        "metadata": metadata or {},
    }
    Path(path).write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")


def read_map_json(path) -> SpectralMap:
    doc = json.loads(Path(path).read_text())
    grid = Grid2D(_grid_from_dict(doc["grid"]["x"]), _grid_from_dict(doc["grid"]["y"]))
    return SpectralMap(grid, np.array(doc["values"], dtype=float), MapKind(doc["kind"]))


def write_table_csv(path, axis_name: str, axis_values, columns: Dict[str, np.ndarray],
                    metadata: Optional[Dict[str, str]] = None,
                    axis_grid: Optional[Grid1D] = None):
    """Column-layout CSV for 1-D results (interferograms, spectra)."""
    lines = ["# modhom table"]
    if axis_grid is not None:
        lines.append(_grid_comment("x", axis_grid))
    for key in sorted(metadata or {}):
        lines.append(f"# meta: {key}={metadata[key]}")
    names = list(columns)
    lines.append(",".join([axis_name] + names))
    for i, x in enumerate(np.asarray(axis_values)):
        lines.append(",".join([fmt(x)] + [fmt(columns[n][i]) for n in names]))
    Path(path).write_text("\n".join(lines) + "\n")


def read_table_csv(path):
    """Returns (axis_name, axis_values, columns dict)."""
    header = None
    rows = []
    for line in Path(path).read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        if header is None:
            header = line.split(",")
        else:
            rows.append([float(tok) for tok in line.split(",")])
    if header is None:
        raise InvalidInputError(f"{path} has no table header")
    data = np.array(rows)
    columns = {name: data[:, j + 1] for j, name in enumerate(header[1:])}
    return header[0], data[:, 0], columns


def write_table_json(path, axis_name: str, axis_values, columns: Dict[str, np.ndarray],
                     metadata: Optional[Dict[str, str]] = None,
                     axis_grid: Optional[Grid1D] = None):
    doc = {
        "grid": _grid_dict(axis_grid) if axis_grid is not None else None,
        "values": {axis_name: np.asarray(axis_values).tolist(),
                   **{k: np.asarray(v).tolist() for k, v in columns.items()}},
        "metadata": metadata or {},
    }
    Path(path).write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
