# Decision Model

from dataclasses import dataclass
from typing import FrozenSet, Optional

from .graph import VertexId


@dataclass(frozen=True)
class Decision:
    """Risposta esatta di un oracolo; su YES witness e' una soluzione con |witness| <= k."""

    yes: bool
    witness: Optional[FrozenSet[VertexId]] = None
