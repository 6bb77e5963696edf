import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..orealg import OperatorMatrix, RingSpec
from ..exceptions import ReferenceNotFoundError, StageTypeError

logger = logging.getLogger(__name__)


@dataclass
class Artifact:
    """A named stage result; `matrix` is set for everything usable as an operator matrix."""
    kind: str
    value: Any
    matrix: Optional[OperatorMatrix] = None
    extras: Dict[str, Any] = field(default_factory=dict)


class Workspace:
    """Named objects of one scenario run, in declaration and production order."""

    def __init__(self, ring: RingSpec):
        self.ring = ring
        self._items: Dict[str, Artifact] = {}

    def put(self, name: str, artifact: Artifact):
        logger.debug(f"[Workspace] Registered {artifact.kind} '{name}'")
        self._items[name] = artifact

    def get(self, name: str, *kinds: str) -> Artifact:
        if name not in self._items:
            raise ReferenceNotFoundError(f"'{name}' has not been declared or produced yet.")
        artifact = self._items[name]
        if kinds and artifact.kind not in kinds:
            raise StageTypeError(f"'{name}' is a {artifact.kind}, expected one of {list(kinds)}.")
        return artifact

    def matrix(self, name: str) -> OperatorMatrix:
        artifact = self.get(name)
        if artifact.matrix is None:
            raise StageTypeError(f"'{name}' is a {artifact.kind} and cannot be used as a matrix.")
        return artifact.matrix

    def names(self) -> List[str]:
        return list(self._items)
