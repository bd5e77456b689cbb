from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_serializer, model_validator

from .field import TowerDescriptor


class CodeDescriptor(BaseModel):
    """Reproducible description of a constacyclic code"""
    name: str = Field(description="Human-readable name, e.g. C(1,13) or C(1,13)^perp")
    tower: TowerDescriptor
    p: int
    m: int
    r: int = Field(description="Order of the shift constant lambda")
    family: str = Field(description="A, B or custom")
    lambda_log: int = Field(description="Discrete log of lambda with respect to beta")
    modulus: List[int] = Field(description="Tower modulus, coefficients low to high")
    n: int
    k: int
    nonzero_exponents: List[int] = Field(description="Exponents i with delta^i a root of h")
    g: List[Optional[int]] = Field(description="Generator coefficients as beta-logs, null for zero")
    h: List[Optional[int]] = Field(description="Check coefficients as beta-logs, null for zero")
    is_dual: bool = False


class WeightDistribution(BaseModel):
    """Exact weight distribution A_0..A_n of a linear [n, k] code over an alphabet of size Q"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    k: int = Field(ge=0)
    Q: int = Field(ge=2, description="Alphabet size")
    counts: Tuple[int, ...] = Field(description="A_0..A_n")

    @model_validator(mode="after")
    def _check_counts(self) -> "WeightDistribution":
        if len(self.counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} counts, got {len(self.counts)}")
        if self.counts[0] != 1:
            raise ValueError("A_0 must be 1")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative weight count")
        if sum(self.counts) != self.Q ** self.k:
            raise ValueError(f"counts sum to {sum(self.counts)}, expected Q^k = {self.Q ** self.k}")
        return self

    def nonzero(self) -> List[Tuple[int, int]]:
        """(weight, count) for every weight w >= 1 with A_w > 0"""
        return [(w, c) for w, c in enumerate(self.counts) if w > 0 and c > 0]

    def count(self, w: int) -> int:
        return self.counts[w] if 0 <= w <= self.n else 0

    @model_serializer
    def to_json_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "Q": self.Q, "nonzero": [list(x) for x in self.nonzero()]}


class LowWeightDualWord(BaseModel):
    """One canonical (first nonzero coordinate 1) dual codeword found by the column search"""
    support: List[int]
    codeword: List[Optional[int]] = Field(description="Coordinates as beta-logs, null for zero")


class LowWeightSearchResult(BaseModel):
    n: int
    wmax: int
    counts: dict = Field(description="weight -> number of dual codewords (all scalar multiples)")
    supports: dict = Field(description="weight -> number of distinct supports")
    words: List[LowWeightDualWord] = Field(default=[], description="Canonical representatives")


class SubfieldCodeModel(BaseModel):
    """C restricted to F_q"""
    q: int
    n: int
    k_sub: int
    basis: List[List[int]] = Field(description="Rows of F_q elements as level labels (0 = zero, 1+i = w^i)")
    parent: str


class MomentCheck(BaseModel):
    holds: bool
    identities: List[dict] = Field(description="One entry per binomial moment: nu, lhs, rhs")
    power_moments: List[int] = Field(description="sum over w>=1 of w^j A_w for j = 0..3")
    printed_rhs: Optional[List[int]] = Field(None, description="Printed right-hand sides, when known")
