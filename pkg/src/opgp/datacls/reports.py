from typing import List, Optional
from pydantic import BaseModel, ConfigDict, Field

from ..orealg import OperatorMatrix


class MatrixBlock(BaseModel):
    """
        Class represents an operator matrix in canonical text.
    """
    rows: int
    cols: int
    entries: List[List[str]] = Field(default_factory=list)

    @classmethod
    def of(cls, m: OperatorMatrix) -> "MatrixBlock":
        return cls(rows=m.rows, cols=m.cols, entries=m.to_lists())

    @property
    def is_empty(self) -> bool:
        return self.rows == 0


class ParametrizationReport(BaseModel):
    """
        Class represents the outcome of verifying that B parametrizes the solutions of A.
        - product_zero: A*B is the zero matrix
        - residue_a: rows of A not in the row module of A' (nonempty would contradict A*B = 0)
        - residue_aprime: rows of A' not in the row module of A (empty iff controllable)
    """
    model_config = ConfigDict(frozen=True)
    product_zero: bool
    residue_a: MatrixBlock
    residue_aprime: MatrixBlock

    @property
    def passed(self) -> bool:
        return self.product_zero and self.residue_a.is_empty and self.residue_aprime.is_empty


class CheckResult(BaseModel):
    """
        Class represents one assertion of a `check` stage.
    """
    stage: str
    kind: str
    passed: bool
    detail: str = ""


class CheckReport(BaseModel):
    """
        Class represents every assertion evaluated while running a scenario.
    """
    scenario: str
    results: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]
