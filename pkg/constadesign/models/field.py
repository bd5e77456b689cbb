from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict, Field


class FieldLevel(str, Enum):
    """Levels of the tower F_p < F_q < F_{q^2} < F_{q^4}"""

    PRIME = "F_p"
    BASE = "F_q"
    QUAD = "F_q2"
    TOP = "F_q4"

    @property
    def rank(self) -> int:
        return _LEVEL_ORDER.index(self)


_LEVEL_ORDER = [FieldLevel.PRIME, FieldLevel.BASE, FieldLevel.QUAD, FieldLevel.TOP]


class TowerDescriptor(BaseModel):
    """Reproducible description of a field tower"""

    model_config = ConfigDict(frozen=True)

    p: int = Field(description="Characteristic")
    m: int = Field(description="q = p^m")
    q: int = Field(description="Size of the base field F_q")
    size: int = Field(description="Size of the top field F_{q^4}")
    modulus: List[int] = Field(description="Primitive modulus of degree 4m over F_p, coefficients low to high")
