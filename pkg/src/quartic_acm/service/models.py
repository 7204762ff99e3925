"""Pydantic request/response models for the HTTP service and the CLI."""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


# -- wire formats ------------------------------------------------------


class SkewMatrixPayload(BaseModel):
    """{"n": 8, "d": [0,0,0,0,1,1,1,1], "upper": {"1,2": "x0^2 - x1*x3"}}"""

    n: int
    d: Optional[List[int]] = None
    upper: Dict[str, str]


class PointsPayload(BaseModel):
    """{"points": [["1", "0", "0", "1"], ...]} with exact rational strings."""

    points: List[List[str]]


class LatticePayload(BaseModel):
    """{"gram": [[4, 4], [4, 0]], "h": [1, 0]}"""

    gram: List[List[int]]
    h: List[int]


class FlagsPayload(BaseModel):
    h0_D_minus_h_vanishes: bool = False
    h0_2h_minus_D_vanishes: bool = False
    D_irreducible: bool = False
    D_effective: bool = False


# -- pfaffian / surface ------------------------------------------------


class PfaffianRequest(BaseModel):
    matrix: SkewMatrixPayload


class PfaffianResponse(BaseModel):
    pfaffian: str
    degree: int


class ShapeResponse(BaseModel):
    valid: bool
    d: List[int]
    violations: List[str]


class VerifyRequest(BaseModel):
    matrix: SkewMatrixPayload
    f: str
    mode: str = "pfaffian"


class DetVerifyRequest(BaseModel):
    entries: List[List[str]]  # square matrix of polynomial strings
    f: str


class VerifyResponse(BaseModel):
    verified: bool
    scale: Optional[str] = None
    reason: str = ""


class QuadricsRequest(BaseModel):
    quadrics: List[str] = Field(..., min_length=6, max_length=6)


class BuildPfaffianResponse(BaseModel):
    matrix: SkewMatrixPayload
    pfaffian: str


class Phi8Request(BaseModel):
    b: SkewMatrixPayload
    a: List[List[str]]


class Phi8Response(BaseModel):
    matrix: SkewMatrixPayload
    pfaffian: str
    det_a: str
    sign: Optional[int] = None
    degenerate: bool = False


class SmoothRequest(BaseModel):
    f: str
    primes: List[int]


class PrimeVerdictModel(BaseModel):
    prime: int
    smooth: bool
    witness: Optional[List[int]] = None


class SmoothResponse(BaseModel):
    all_smooth: bool
    verdicts: List[PrimeVerdictModel]


class OnSurfaceRequest(BaseModel):
    points: PointsPayload
    f: str


class OnSurfaceResponse(BaseModel):
    all_on_surface: bool
    offenders: List[List[str]]


# -- schemes -------------------------------------------------------------


class SchemeRequest(BaseModel):
    points: PointsPayload


class HilbertResponse(BaseModel):
    degree: int
    hf: List[int]
    hvec: List[int]
    socle_degree: int


class CBRequest(BaseModel):
    points: PointsPayload
    m: int


class CBResponse(BaseModel):
    holds: bool
    twist: int
    offender: Optional[List[str]] = None
    base_dimension: Optional[int] = None


class AgResponse(BaseModel):
    is_ag: bool
    hf: List[int]
    hvec: List[int]
    socle_degree: int
    symmetry_ok: bool
    cb_ok: bool
    failed_condition: Optional[str] = None


class ClassifyResponse(BaseModel):
    kind: str
    quadric_quotient: Optional[List[int]] = None


# -- picard ---------------------------------------------------------------


class PairRequest(BaseModel):
    lattice: LatticePayload
    d1: List[int]
    d2: List[int]


class PairResponse(BaseModel):
    value: int


class RRRequest(BaseModel):
    lattice: LatticePayload
    r: int
    c1: List[int]
    c2: int


class RRResponse(BaseModel):
    chi: int


class DivisorRequest(BaseModel):
    lattice: LatticePayload
    d: List[int]
    flags: FlagsPayload = FlagsPayload()


class GenusResponse(BaseModel):
    genus: int
    h0: int


class WatanabeResponse(BaseModel):
    case: str


class DecomposableRequest(BaseModel):
    lattice: LatticePayload
    d: List[int]
    globally_generated: bool = False


class DecomposableResponse(BaseModel):
    tag: str


class ReducedPolyResponse(BaseModel):
    coefficients: List[str]  # quadratic, linear, constant; exact rationals


class StabilityResponse(BaseModel):
    kind: str
    mu_sub: str
    mu_total: str
    reduced_sub: List[str]
    reduced_total: List[str]


class FamilyDimResponse(BaseModel):
    h1: int
    projective_dimension: int


class SEquivRequest(BaseModel):
    lattice: LatticePayload
    d1: List[int]
    d2: List[int]


class SEquivResponse(BaseModel):
    equivalent: bool
