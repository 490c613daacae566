"""Pydantic request/response models for the service endpoints.

Formulas travel as rendered strings; the service parses and re-renders,
so clients always see the canonical spelling.
"""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

Sort = Literal["prop", "fo", "arith"]


class ErrorBody(BaseModel):
    error: str
    message: str
    position: Optional[int] = None
    expected: Optional[list[str]] = None


class ParseRequest(BaseModel):
    sort: Sort
    text: str


class ParseResponse(BaseModel):
    sort: Sort
    rendered: str


class TablesResponse(BaseModel):
    matrix: str
    text: str


class ValidityRequest(BaseModel):
    matrix: str = "md"
    formula: str
    atom_cap: Optional[int] = Field(default=None, ge=1)


class ValidityResponse(BaseModel):
    matrix: str
    formula: str
    valid: bool
    witness: Optional[dict[str, int]] = None
    value: Optional[int] = None


class EntailRequest(BaseModel):
    kind: Literal["atomic", "classical"]
    premise: str
    conclusion: str
    sort: Literal["prop", "fo"] = "prop"
    l2_mode: Literal["assume", "skeleton", "refute"] = "assume"
    max_domain: int = Field(default=2, ge=1)


class EntailResponse(BaseModel):
    holds: bool
    reason: Optional[str] = None
    witness: Optional[dict[str, int]] = None
    value: Optional[int] = None
    countermodel: Optional[dict] = None
    evidence: str
    authoritative: bool


class TranslateRequest(BaseModel):
    map: Literal["j", "i"]
    formula: str


class TranslateResponse(BaseModel):
    map: str
    formula: str
    image: str
    warnings: list[str] = Field(default_factory=list)


class AxiomResponse(BaseModel):
    name: str
    formula: str
    free_variables: list[int]


class InductionRequest(BaseModel):
    formula: str
    var: int = Field(ge=0)


class InductionResponse(BaseModel):
    formula: str


class MembershipRequest(BaseModel):
    formula: str
    l2_mode: Literal["assume", "skeleton", "refute"] = "assume"
    max_domain: int = Field(default=2, ge=1)


class ClassifyRequest(BaseModel):
    kinds: Optional[list[str]] = None
    maxSkeletonSize: Optional[int] = None
    maxTermDepth: Optional[int] = None
    atomPool: Optional[list[str]] = None
    count: Optional[int] = None
    seed: Optional[int] = None


class ClassifyResponse(BaseModel):
    records: list[dict]
    admitted: int
    excluded: int


class BridgeRequest(BaseModel):
    alpha: str
    via: Literal["psi12", "psi14"] = "psi12"


class BridgeResponse(BaseModel):
    derivation: str  # JSON-lines text
    image: str
    check: str


class CheckProofRequest(BaseModel):
    derivation: str  # JSON-lines text
    rule_set: Optional[Literal["mp+gen", "mp+subst"]] = None
    premises: list[str] = Field(default_factory=list)


class CheckProofResponse(BaseModel):
    ok: bool
    steps: int
    error_index: Optional[int] = None
    error_reason: Optional[str] = None
    error_detail: Optional[str] = None


class CountermodelRequest(BaseModel):
    formula: str
    max_domain: int = Field(default=2, ge=1)
    sort: Optional[Literal["fo", "arith"]] = None


class CountermodelResponse(BaseModel):
    found: bool
    structure: Optional[dict] = None


class ReportRequest(BaseModel):
    seed: int = 0


class ReportResponse(BaseModel):
    seed: int
    claims: list[dict]
    all_pass: bool


class HealthResponse(BaseModel):
    status: str
    version: str
