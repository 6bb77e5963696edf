from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from ..orealg import OperatorMatrix
from ..exceptions import DimensionMismatchError


class Observation(BaseModel):
    """
        Class represents one datum (x_i, y_i).
        - functional: operator rows applied to f before evaluating at `point`;
          None observes the function values themselves
        - name: the scenario name of the functional, kept for reports
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
    point: Tuple[float, ...]
    value: Tuple[float, ...]
    functional: Optional[OperatorMatrix] = None
    name: Optional[str] = None

    @field_validator("point", "value")
    @classmethod
    def _nonempty(cls, v):
        if not v:
            raise ValueError("must have at least one coordinate")
        return v

    def rows(self, outputs: int) -> int:
        """Number of observed components for a process with `outputs` components."""
        if self.functional is None:
            return outputs
        if self.functional.cols != outputs:
            raise DimensionMismatchError(
                f"Functional with {self.functional.cols} columns observes a process with {outputs} outputs."
            )
        return self.functional.rows

    def check(self, d: int, outputs: int):
        if len(self.point) != d:
            raise DimensionMismatchError(f"Observation point {list(self.point)} does not have {d} coordinates.")
        rows = self.rows(outputs)
        if len(self.value) != rows:
            raise DimensionMismatchError(f"Observation value has {len(self.value)} entries, expected {rows}.")
