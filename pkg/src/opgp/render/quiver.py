"""
Quiver plots of exported grids as SVG.

Output depends only on the table and the options: coordinates are printed
with fixed precision and rows are drawn in file order.
"""

import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from jinja2 import Environment, PackageLoader

from .. import constants
from ..exceptions import MalformedGridError, UnsupportedDimensionError

logger = logging.getLogger(__name__)

_env = Environment(loader=PackageLoader("opgp", "resources/templates"), keep_trailing_newline=True)


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def read_grid_csv(path: Union[str, Path]) -> Tuple[List[str], np.ndarray]:
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except FileNotFoundError:
        raise MalformedGridError(f"Grid file not found: {path}")
    if not lines or not lines[0].strip():
        raise MalformedGridError(f"Grid file '{path}' has no header.")
    header = [h.strip() for h in lines[0].split(",")]
    body = [line for line in lines[1:] if line.strip()]
    if not body:
        return header, np.zeros((0, len(header)))
    try:
        values = np.loadtxt(body, delimiter=",", ndmin=2)
    except ValueError as e:
        raise MalformedGridError(f"Grid file '{path}' has a non-numeric row: {e}")
    if values.shape[1] != len(header):
        raise MalformedGridError(f"Grid file '{path}' rows have {values.shape[1]} columns, the header {len(header)}.")
    return header, values


def _split_header(header: Sequence[str]) -> Tuple[List[int], List[int]]:
    xs = [i for i, h in enumerate(header) if h.startswith("x")]
    fs = [i for i, h in enumerate(header) if h.startswith("f")]
    if not xs or [header[i] for i in xs] != [f"x{k + 1}" for k in range(len(xs))]:
        raise MalformedGridError(f"Header {list(header)} does not start with coordinate columns x1, x2, ...")
    if len(fs) != len(xs):
        raise UnsupportedDimensionError(f"Quiver plots need as many components as coordinates, got {len(fs)} and {len(xs)}.")
    return xs, fs


def _plane(d: int, project: str) -> Tuple[int, int]:
    """The two coordinates kept after dropping the `project` axis."""
    if d == 2:
        return 0, 1
    if project not in constants.SVG_PROJECTION_AXES:
        raise UnsupportedDimensionError(f"Projection axis must be one of {constants.SVG_PROJECTION_AXES}, got '{project}'.")
    drop = constants.SVG_PROJECTION_AXES.index(project)
    kept = [i for i in range(3) if i != drop]
    return kept[0], kept[1]


def quiver_svg(
        header: Sequence[str],
        values: np.ndarray,
        scale: float = constants.SVG_DEFAULT_SCALE,
        project: str = "z",
        highlight: Sequence[Sequence[float]] = (),
) -> str:
    xs, fs = _split_header(header)
    d = len(xs)
    if d not in (2, 3):
        raise UnsupportedDimensionError(f"Quiver plots support 2 or 3 coordinates, got {d}.")
    if any(len(p) != d for p in highlight):
        raise MalformedGridError(f"Highlighted points must have {d} coordinates.")
    i, j = _plane(d, project)
    names = constants.SVG_PROJECTION_AXES
    coords = values[:, [xs[i], xs[j]]] if len(values) else np.zeros((0, 2))
    arrows = values[:, [fs[i], fs[j]]] * scale if len(values) else np.zeros((0, 2))
    marks = np.array([[p[i], p[j]] for p in highlight]) if len(highlight) else np.zeros((0, 2))

    extent = np.vstack([coords, coords + arrows, marks])
    if len(extent):
        lo, hi = extent.min(axis=0), extent.max(axis=0)
    else:
        lo, hi = np.array([-1.0, -1.0]), np.array([1.0, 1.0])
    span = np.where(hi - lo > 0, hi - lo, 1.0)
    size, margin = constants.SVG_CANVAS, constants.SVG_MARGIN
    inner = size - 2 * margin
    # one scale for both axes keeps circles round
    unit = inner / float(max(span))

    def to_canvas(p) -> Tuple[float, float]:
        return margin + (p[0] - lo[0]) * unit, size - margin - (p[1] - lo[1]) * unit

    ring = None
    if d == 3 and len(coords):
        center = to_canvas((0.0, 0.0))
        radius = float(np.max(np.hypot(coords[:, 0], coords[:, 1]))) * unit
        ring = {"cx": _fmt(center[0]), "cy": _fmt(center[1]), "r": _fmt(radius)}

    arrow_rows = []
    for p, v in zip(coords, arrows):
        a, b = to_canvas(p), to_canvas(p + v)
        arrow_rows.append({"x1": _fmt(a[0]), "y1": _fmt(a[1]), "x2": _fmt(b[0]), "y2": _fmt(b[1])})
    points = [dict(zip(("x", "y"), map(_fmt, to_canvas(p)))) for p in marks]

    labels = (names[i], names[j]) if d == 3 else ("x", "y")
    svg = _env.get_template("quiver.svg.j2").render(
        size=size,
        margin=margin,
        frame={"x": margin, "y": margin, "w": inner, "h": inner},
        labels=labels,
        ring=ring,
        arrows=arrow_rows,
        points=points,
    )
    logger.debug(f"[Quiver] Rendered {len(arrow_rows)} arrows and {len(points)} highlighted points.")
    return svg


def render_quiver(
        csv_path: Union[str, Path],
        out_path: Optional[Union[str, Path]] = None,
        scale: float = constants.SVG_DEFAULT_SCALE,
        project: str = "z",
        highlight: Sequence[Sequence[float]] = (),
) -> Path:
    csv_path = Path(csv_path)
    header, values = read_grid_csv(csv_path)
    svg = quiver_svg(header, values, scale, project, highlight)
    out = Path(out_path) if out_path else csv_path.with_suffix(constants.SVG_SUFFIX)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(svg, encoding="utf-8")
    logger.info(f"[Quiver] Wrote {out}")
    return out
