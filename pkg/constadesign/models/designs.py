from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class Design(BaseModel):
    """Incidence structure: v points, blocks of size kappa, no repeated blocks"""
    v: int = Field(ge=1, description="Number of points")
    kappa: int = Field(ge=0, description="Block size")
    blocks: List[Tuple[int, ...]] = Field(default=[], description="Sorted blocks, sorted lexicographically")
    t: int = Field(0, description="Verified strength, 0 until verified")
    eta: int = Field(0, description="Blocks through every t-subset, meaningful once verified")
    codewords: Optional[int] = Field(None, description="Codewords whose supports gave the blocks")
    max_multiplicity: Optional[int] = Field(None, description="Largest number of codewords sharing one support")
    scalars: Optional[int] = Field(None, description="Nonzero scalars of the alphabet, Q - 1")

    @model_validator(mode="after")
    def _check_blocks(self) -> "Design":
        for block in self.blocks:
            if len(block) != self.kappa or len(set(block)) != self.kappa:
                raise ValueError(f"block {block} does not have {self.kappa} distinct points")
            if block and (min(block) < 0 or max(block) >= self.v):
                raise ValueError(f"block {block} leaves the point set [0, {self.v})")
            if list(block) != sorted(block):
                raise ValueError(f"block {block} is not sorted")
        if len(set(self.blocks)) != len(self.blocks):
            raise ValueError("repeated blocks")
        return self

    @property
    def b(self) -> int:
        return len(self.blocks)


class DesignParameters(BaseModel):
    """t-(v, kappa, eta) with b blocks"""
    t: int
    v: int
    kappa: int
    eta: int
    b: int


class DesignVerification(BaseModel):
    t: int
    holds: bool
    eta: int = Field(description="Common count when the design holds, else 0")
    subsets_checked: int
    witness: Optional[List[List[int]]] = Field(None, description="Two t-subsets with different counts")
    witness_counts: Optional[List[int]] = None


class AssmusMattsonReport(BaseModel):
    t: int
    n: int
    d: int
    d_dual: int
    weights_in_range: List[int] = Field(description="Nonzero weights of C in [1, n-t]")
    allowance: int = Field(description="d_dual - t")
    holds: bool
    omega: int
    omega_dual: int
    primal_design_weights: List[int] = Field(description="Weights of C whose supports are guaranteed t-designs")
    dual_design_weights: List[int] = Field(description="Weights of the dual whose supports are guaranteed t-designs")


class DesignReport(BaseModel):
    v: int
    kappa: int
    t: int
    eta: int
    b: int
    blocks: Optional[List[List[int]]] = None
    blocks_omitted: bool = False
    simple: bool = True
    verification: Optional[DesignVerification] = None
    identity_holds: Optional[bool] = None
