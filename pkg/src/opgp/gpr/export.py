"""
Evaluating a fitted model on a grid and writing the table as CSV.
"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .model import GPModel
from .. import constants
from ..exceptions import DimensionMismatchError, EmptyGridError

logger = logging.getLogger(__name__)


class AxisRange(BaseModel):
    """
        Class represents count evenly spaced values from min to max inclusive.
    """
    min: float
    max: float
    count: int

    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.count)


class SphereGrid(BaseModel):
    """
        Class represents a latitude/longitude grid on the sphere of the given radius.
        Latitudes are cell centers, so neither pole is repeated.
    """
    lat: int
    lon: int
    radius: float = 1.0

    def points(self) -> np.ndarray:
        theta = (np.arange(self.lat) + 0.5) * np.pi / self.lat
        phi = np.arange(self.lon) * 2 * np.pi / self.lon
        t, p = np.meshgrid(theta, phi, indexing="ij")
        t, p = t.ravel(), p.ravel()
        return self.radius * np.column_stack([np.sin(t) * np.cos(p), np.sin(t) * np.sin(p), np.cos(t)])


class GridSpec(BaseModel):
    """
        Class represents where to evaluate a model: a product of axis ranges or a sphere.
        - std: also export per-component posterior standard deviations
    """
    model_config = ConfigDict(extra="forbid")
    axes: Optional[List[AxisRange]] = None
    sphere: Optional[SphereGrid] = None
    std: bool = False

    @model_validator(mode="after")
    def _one_kind(self):
        if (self.axes is None) == (self.sphere is None):
            raise ValueError("exactly one of 'axes' or 'sphere' must be given")
        return self

    @property
    def d(self) -> int:
        return 3 if self.sphere is not None else len(self.axes)

    def points(self) -> np.ndarray:
        if self.sphere is not None:
            if self.sphere.lat < 1 or self.sphere.lon < 1:
                raise EmptyGridError("Sphere grid needs at least one latitude and one longitude.")
            return self.sphere.points()
        if not self.axes or any(a.count < 1 for a in self.axes):
            raise EmptyGridError("Every grid axis needs at least one point.")
        mesh = np.meshgrid(*[a.values() for a in self.axes], indexing="ij")
        return np.column_stack([m.ravel() for m in mesh])


class GridTable(BaseModel):
    """
        Class represents the exported rows: coordinates, mean components, optional deviations.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)
    header: List[str]
    values: np.ndarray = Field(repr=False)

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    def to_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        np.savetxt(
            path,
            self.values,
            delimiter=",",
            header=",".join(self.header),
            comments="",
            fmt=f"%.{constants.CSV_SIGNIFICANT_DIGITS}g",
        )
        logger.debug(f"[Grid] Wrote {self.rows} rows to {path}")
        return path


def grid_header(d: int, outputs: int, std: bool) -> List[str]:
    header = [f"x{i + 1}" for i in range(d)] + [f"f{i + 1}" for i in range(outputs)]
    if std:
        header += [f"sd{i + 1}" for i in range(outputs)]
    return header


def export_grid(model: GPModel, spec: GridSpec) -> GridTable:
    """Rows in grid order: the first axis varies slowest, latitude before longitude on spheres."""
    if spec.d != model.d:
        raise DimensionMismatchError(f"Grid of dimension {spec.d} for a model over {model.d} inputs.")
    points = spec.points()
    rows: List[np.ndarray] = []
    for x in points:
        parts: Tuple[np.ndarray, ...] = (x, model.predict_mean(x))
        if spec.std:
            parts += (model.predict_std(x),)
        rows.append(np.concatenate(parts))
    logger.info(f"[Grid] Evaluated the model at {len(rows)} points.")
    return GridTable(header=grid_header(model.d, model.outputs, spec.std), values=np.vstack(rows))
