from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from ..config import SCHEMA_VERSION
from .codes import CodeDescriptor, MomentCheck, SubfieldCodeModel, WeightDistribution
from .designs import AssmusMattsonReport, DesignReport, DesignVerification
from .field import TowerDescriptor


class RootCountReport(BaseModel):
    """Histogram of root counts over all tested (a, b) pairs"""
    p: int
    m: int
    k: int
    r: Optional[int] = None
    domain: str = Field(description="Where (a, b) ranges")
    pairs: int
    admissible: List[int]
    histogram: Dict[str, int] = Field(description="root count -> number of pairs")
    witnesses: Dict[str, List[int]] = Field(description="root count -> [logA, logB], -1 for zero")
    holds: bool


class ConjectureReport(BaseModel):
    p: int
    m: int
    k: int
    max_count: int
    witness_log_a: int
    witness_count: int
    histogram: Dict[str, int]
    holds: bool


class PreimageReport(BaseModel):
    q: int
    r: int
    exponent: int
    fibers_ok: bool = Field(description="Onto U_{q^2+1}, every fiber is {lambda^j x0}")
    partition_ok: bool = Field(description="The sets lambda^j T partition U_{r(q^2+1)}")
    meets_once_ok: bool = Field(description="Every fiber meets every lambda^j T exactly once")
    holds: bool


class OvoidReport(BaseModel):
    q: int
    n: int
    distribution: WeightDistribution
    expected: WeightDistribution
    matches: bool
    dual_distance: int
    dual_distance_ok: bool
    distance: int
    griesmer_tight: bool = Field(description="d meets the Griesmer bound and d+1 violates it")
    design: Optional[DesignVerification] = Field(None, description="3-design of the minimum-weight supports; q > 2 only")
    design_blocks: int = 0
    design_ok: bool = True


class T2Report(BaseModel):
    code: str
    k: int = Field(description="Multiplicative order of q modulo r")
    l: int
    t2_size: int
    threshold: str = Field(description="n/k as an exact fraction")
    trivial_predicted: bool
    direct_dimension: int
    agrees: bool


class CosetClosureReport(BaseModel):
    code: str
    cosets: List[List[int]] = Field(description="q-cyclotomic cosets inside the nonzeros")
    predicted_dimension: int
    direct_dimension: int
    agrees: bool


class IntersectionReport(BaseModel):
    explicit: int
    formula: Optional[int] = Field(None, description="Case-split value; null when the shift constants coincide")
    lambda_equal: bool
    agrees: Optional[bool] = None


class EaqeccParams(BaseModel):
    """[[n, k, d; c]] over an alphabet of size Q"""
    C1: str
    C2: str
    n: int
    k_logical: int
    d: int
    c: int
    Q: int
    maximal_entanglement: bool
    net_rate: str = Field(description="(k - c)/n as num/den")
    in_hypothesis: bool = Field(description="lambda(C1) lambda(C2) != 1")
    intersection: IntersectionReport


class LrcReport(BaseModel):
    code: str
    n: int
    k: int
    d: int
    locality: int
    singleton_like_bound: int
    cm_bound: int
    cm_terms: Dict[str, int] = Field(description="t -> t r + k_opt upper value")
    k_opt_substitution: str = "Singleton bound max(0, n' - d + 1)"
    distance_optimal: bool
    dimension_optimal: bool


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: Optional[str] = None


class VerificationReport(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    q: int
    tower: TowerDescriptor
    checks: List[CheckResult]
    passed: bool
    first_failure: Optional[str] = None

    model_config = {"populate_by_name": True}


class JobSpec(BaseModel):
    """Validated command-line job"""
    command: str = Field(pattern="^(tower|build|wdist|designs|subfield|equations|eaqecc|lrc|verify-all)$")
    q: Optional[int] = None
    p: Optional[int] = None
    m: Optional[int] = None
    r: Optional[int] = None
    family: Optional[str] = Field(None, pattern="^[AB]$")
    budget: Optional[int] = Field(None, gt=0)
    workers: Optional[int] = Field(None, ge=1)
    out: Optional[str] = None
    format: str = Field("json", pattern="^(json|csv)$")
    dual: bool = Field(False, description="build: also emit the dual descriptor")
    analytic: bool = Field(False, description="wdist: closed form instead of enumeration")
    k: int = Field(1, ge=1, description="equations: exponent p^k in the polynomials")


class ErrorReport(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    error: str
    message: str
    detail: dict = {}

    model_config = {"populate_by_name": True}


class CodeReport(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    code: CodeDescriptor
    dual: Optional[CodeDescriptor] = None

    model_config = {"populate_by_name": True}


class WdistReport(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    code: Optional[CodeDescriptor] = None
    method: str
    distribution: WeightDistribution
    dual: Optional[WeightDistribution] = None
    minimum_distance: int
    dual_distance: Optional[int] = None
    moments: Optional[MomentCheck] = None

    model_config = {"populate_by_name": True}


class DesignsReport(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    code: CodeDescriptor
    primal: DesignReport
    dual: DesignReport
    complement: Optional[DesignReport] = None
    steiner_complement: Optional[bool] = None
    assmus_mattson: AssmusMattsonReport

    model_config = {"populate_by_name": True}


class TowerReport(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    tower: TowerDescriptor
    level_sizes: Dict[str, int] = Field(description="Level name -> number of elements")
    delta_log: Optional[int] = Field(None, description="log of delta when r is given")
    lambda_log: Optional[int] = Field(None, description="log of lambda when r is given")

    model_config = {"populate_by_name": True}


class SubfieldReport(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    code: CodeDescriptor
    subcode: SubfieldCodeModel
    delsarte_agrees: bool
    ovoid: Optional[OvoidReport] = None
    t2: Optional[T2Report] = None
    coset_closure: Optional[CosetClosureReport] = None

    model_config = {"populate_by_name": True}


class EquationsReport(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    tower: TowerDescriptor
    bluher: Optional[RootCountReport] = None
    unit_circle: Optional[RootCountReport] = None
    conjecture: Optional[ConjectureReport] = None
    preimages: List[PreimageReport] = []

    model_config = {"populate_by_name": True}


class EaqeccReport(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    tower: TowerDescriptor
    pairs: List[EaqeccParams]

    model_config = {"populate_by_name": True}


class LrcSummary(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    tower: TowerDescriptor
    codes: List[LrcReport]

    model_config = {"populate_by_name": True}
