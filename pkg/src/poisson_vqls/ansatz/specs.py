"""Ansatz specifications."""

from enum import StrEnum
from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field

ParameterVector = NDArray[np.float64]


class AnsatzKind(StrEnum):
    """Ansatz family."""

    GEA = "gea"
    HEA = "hea"


DEFAULT_LAYERS: dict[AnsatzKind, int] = {
    AnsatzKind.GEA: 3,
    AnsatzKind.HEA: 8,
}


def default_layers(data: dict[str, Any]) -> int:
    """Get the family default depth from the already validated fields."""
    # kind is absent only when it failed validation
    return DEFAULT_LAYERS.get(data.get("kind"), 1)


class AnsatzSpec(BaseModel):
    """Ansatz family, size and depth."""

    model_config = ConfigDict(frozen=True)

    kind: AnsatzKind
    n: int = Field(ge=1)
    layers: int = Field(default_factory=default_layers, ge=1)
    precondition_b: bool = True

    @property
    def depth(self) -> int:
        """Get layer count."""
        return self.layers

    @property
    def parameter_count(self) -> int:
        """Get parameter count: one Ry angle per qubit per layer."""
        return self.depth * self.n
