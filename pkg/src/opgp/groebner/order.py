from dataclasses import dataclass
from typing import Tuple

from ..orealg import Monomial


@dataclass(frozen=True)
class ModuleOrder:
    """
    Term order on the free module R^r.

    Words are compared by graded reverse lexicographic order over the
    exponents (x1..xd, D1..Dd); positions are compared first
    (position-over-term), a lower component index ranking higher.
    """
    term_order: str = "grevlex"
    position: str = "pot"

    def key(self, comp: int, mono: Monomial) -> Tuple:
        """Larger key means larger term."""
        return (-comp, mono.grevlex_key())


DEFAULT_ORDER = ModuleOrder()
