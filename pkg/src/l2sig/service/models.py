"""Request/response models for the compute service.

Rationals travel as strings ("p/q" in lowest terms, plain integers
without the denominator); interval endpoints as fixed-point decimal
strings.  Responses are rendered to canonical JSON by the CLI, so the
models avoid any nondeterministic content.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class GroupSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["trivial", "cyclic", "abelian", "Z"]
    n: Optional[int] = None
    factors: Optional[list[int]] = None


Element = Union[int, list[int]]
Term = tuple[Element, str]


class FormDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    group: GroupSpec
    dim: int
    matrix: list[list[list[Term]]]


class ToolInfo(BaseModel):
    name: str
    version: str


class SignatureTripleModel(BaseModel):
    n_plus: int
    n_minus: int
    n_zero: int
    signature: int


class TableEntry(BaseModel):
    weights: list[int]
    triple: SignatureTripleModel


class CycValue(BaseModel):
    conductor: int
    coeffs: list[str]
    rational: Optional[str] = None
    approx: Optional[list[str]] = None


class GSignatureEntry(BaseModel):
    element: list[int]
    value: CycValue


class CharSumCheck(BaseModel):
    lhs: str
    rhs: str
    equal: bool


class InvariantsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    document: FormDocument
    scale: str = "1"


class InvariantsResponse(BaseModel):
    tool: ToolInfo
    input_sha256: str
    group: GroupSpec
    dim: int
    sig_trivial: int
    sig_full: int
    sig_l2: str
    alpha: str
    scale: str
    alpha_scaled: str
    tau_z2: Optional[int] = None
    table: list[TableEntry]
    g_signatures: list[GSignatureEntry]
    char_sum: CharSumCheck


class InduceRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    document: FormDocument
    into: GroupSpec


class InduceResponse(BaseModel):
    tool: ToolInfo
    input_sha256: str
    into: GroupSpec
    induced: FormDocument
    sig_l2_source: str
    sig_l2_induced: str
    alpha_source: str
    alpha_induced: str
    sig_l2_preserved: bool


class FamilyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    count: int


class FamilyEntry(BaseModel):
    k: int
    dim: int
    alpha: str


class FamilyResponse(BaseModel):
    tool: ToolInfo
    input_sha256: str
    n: int
    count: int
    entries: list[FamilyEntry]
    pairwise_distinct: bool


class ZapproxRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    document: FormDocument
    k_max: int = 996
    tolerance: str = "1e-6"


class QuotientEntry(BaseModel):
    k: int
    value: str


class ZapproxResponse(BaseModel):
    tool: ToolInfo
    input_sha256: str
    dim: int
    tolerance: str
    decimal_digits: int
    entries: list[QuotientEntry]
    limit: list[str]
    limit_exact: Optional[str] = None
    max_deviation_tail: str


class LedgerActStep(BaseModel):
    model_config = ConfigDict(extra="forbid")

    op: Literal["act"]
    base: str
    name: str
    form: FormDocument


class LedgerDistinguishStep(BaseModel):
    model_config = ConfigDict(extra="forbid")

    op: Literal["distinguish"]
    a: str
    b: str


LedgerStep = Union[LedgerActStep, LedgerDistinguishStep]


class LedgerScript(BaseModel):
    model_config = ConfigDict(extra="forbid")

    group: GroupSpec
    base: str = "base"
    steps: list[LedgerStep] = Field(default_factory=list)


class LedgerEntryModel(BaseModel):
    name: str
    tau_offset: str
    acting_form_dim: Optional[int] = None


class DistinguishResult(BaseModel):
    a: str
    b: str
    distinct: bool
    difference: str


class LedgerResponse(BaseModel):
    tool: ToolInfo
    input_sha256: str
    group: GroupSpec
    base: str
    entries: list[LedgerEntryModel]
    checks: list[DistinguishResult]


class HealthResponse(BaseModel):
    status: str
    tool: ToolInfo
