"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class CheckResultModel(BaseModel):
    name: str
    passed: bool
    witness: Optional[list[str]] = None


class ReportResponse(BaseModel):
    subject: str
    passed: bool
    checks: list[CheckResultModel]


class MonoidCheckRequest(BaseModel):
    monoid: str
    sample_bound: int = Field(default=20, ge=1, le=200)


class ThresholdRequest(BaseModel):
    monoid: str
    r: str
    n: int


class ThresholdResponse(BaseModel):
    equivalence: bool


class SopRequest(BaseModel):
    monoid: str
    n: int
    search_bound: int = Field(default=64, ge=1, le=10000)


class SopResponse(BaseModel):
    witness: Optional[str] = None


class SauerRequest(BaseModel):
    values: str


class SauerResponse(BaseModel):
    fraisse: bool
    witness: Optional[list[str]] = None


class GenerateRequest(BaseModel):
    monoid: str
    points: int
    seed: int
    max_finite: Optional[str] = None
    max_components: int = 3


class SpaceResponse(BaseModel):
    dms: str


class ValidateRequest(BaseModel):
    dms: str


class AmalgamateRequest(BaseModel):
    left: str
    right: str
    common: list[str]


class IndepRequest(BaseModel):
    dms: str
    rel: Literal["alg", "infty"]
    a: list[str]
    b: list[str]
    c: list[str]


class IndepResponse(BaseModel):
    verdict: bool


class AxiomsRequest(BaseModel):
    rel: Literal["alg", "infty"]
    monoid: str
    trials: int = Field(ge=1)
    size: int = Field(ge=3)
    seed: int
    axiom: Optional[str] = None


class ViolationModel(BaseModel):
    trial: int
    seed: int
    config: str
    detail: str


class AxiomReportModel(BaseModel):
    relation: str
    axiom: str
    trials: int
    seed: int
    violations: list[ViolationModel]
    kappa_bound_observed: Optional[int] = None
    line: str


class AxiomsResponse(BaseModel):
    reports: list[AxiomReportModel]
    passed: bool
    text: str


class CounterexampleRequest(BaseModel):
    monoid: str


class CounterexampleResponse(BaseModel):
    config: str
    alg: bool
    infty: bool
    line: str
