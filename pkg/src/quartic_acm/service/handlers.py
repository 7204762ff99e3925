"""Shared request handlers: every endpoint and every CLI verb dispatches
here, so service and CLI verdicts are the same function call."""

from __future__ import annotations

import json

from .. import picard, schemes, surface
from ..algebra import poly_parse
from ..pfaffian import SkewPolyMatrix, pfaffian, validate_shape
from . import models


# -- converters ----------------------------------------------------------


def to_skew(payload: models.SkewMatrixPayload) -> SkewPolyMatrix:
    return SkewPolyMatrix.from_json(payload.model_dump())


def from_skew(m: SkewPolyMatrix) -> models.SkewMatrixPayload:
    return models.SkewMatrixPayload(**json.loads(m.to_json()))


def to_scheme(payload: models.PointsPayload) -> schemes.PointScheme:
    return schemes.PointScheme.from_json(payload.model_dump())


def to_lattice(payload: models.LatticePayload) -> picard.PicardLattice:
    return picard.PicardLattice(
        tuple(map(tuple, payload.gram)), tuple(payload.h)
    )


def to_flags(payload: models.FlagsPayload) -> picard.CohomologyFlags:
    return picard.CohomologyFlags(**payload.model_dump())


def _quartic(text) -> surface.QuarticSurface:
    return surface.QuarticSurface(poly_parse(text, expected_degree=4))


# -- pfaffian ---------------------------------------------------------------


def compute_pfaffian(req: models.PfaffianRequest) -> models.PfaffianResponse:
    pf = surface.as_poly(pfaffian(to_skew(req.matrix)))
    return models.PfaffianResponse(pfaffian=str(pf), degree=pf.degree())


def check_shape(req: models.PfaffianRequest) -> models.ShapeResponse:
    report = validate_shape(to_skew(req.matrix))
    return models.ShapeResponse(
        valid=report.valid, d=list(report.d), violations=report.violations
    )


def verify_matrix(req: models.VerifyRequest) -> models.VerifyResponse:
    check = surface.verify_representation(
        to_skew(req.matrix), _quartic(req.f), req.mode
    )
    return models.VerifyResponse(
        verified=check.matches,
        scale=str(check.scale) if check.scale is not None else None,
        reason=check.reason,
    )


def verify_determinant(req: models.DetVerifyRequest) -> models.VerifyResponse:
    entries = [[poly_parse(e) for e in row] for row in req.entries]
    check = surface.verify_representation(entries, _quartic(req.f), "determinant")
    return models.VerifyResponse(
        verified=check.matches,
        scale=str(check.scale) if check.scale is not None else None,
        reason=check.reason,
    )


# -- surface ------------------------------------------------------------


def build_pfaffian(req: models.QuadricsRequest) -> models.BuildPfaffianResponse:
    qs = [poly_parse(q) for q in req.quadrics]
    m = surface.pfaffian_rep_from_quadrics(*qs)
    pf = surface.as_poly(pfaffian(m))
    return models.BuildPfaffianResponse(matrix=from_skew(m), pfaffian=str(pf))


def build_phi8(req: models.Phi8Request) -> models.Phi8Response:
    b = to_skew(req.b)
    a = [[poly_parse(e) for e in row] for row in req.a]
    result = surface.build_phi_n8(b, a)
    return models.Phi8Response(
        matrix=from_skew(result.matrix),
        pfaffian=str(result.pf),
        det_a=str(result.det_a),
        sign=result.sign,
        degenerate=result.degenerate,
    )


def smooth_probe(req: models.SmoothRequest) -> models.SmoothResponse:
    cert = surface.smoothness_probe(_quartic(req.f), req.primes)
    return models.SmoothResponse(
        all_smooth=cert.all_smooth,
        verdicts=[
            models.PrimeVerdictModel(
                prime=v.prime,
                smooth=v.smooth,
                witness=list(v.witness) if v.witness else None,
            )
            for v in cert.verdicts
        ],
    )


def on_surface(req: models.OnSurfaceRequest) -> models.OnSurfaceResponse:
    report = surface.points_on_surface(to_scheme(req.points), _quartic(req.f))
    return models.OnSurfaceResponse(
        all_on_surface=report.all_on_surface,
        offenders=[[str(c) for c in pt] for pt in report.offenders],
    )


# -- schemes ------------------------------------------------------------


def scheme_hilbert(req: models.SchemeRequest) -> models.HilbertResponse:
    scheme = to_scheme(req.points)
    profile = schemes.hilbert_profile(scheme)
    return models.HilbertResponse(
        degree=scheme.degree,
        hf=list(profile.hf),
        hvec=list(profile.hvec),
        socle_degree=profile.socle_degree,
    )


def scheme_cb(req: models.CBRequest) -> models.CBResponse:
    result = schemes.cayley_bacharach(to_scheme(req.points), req.m)
    return models.CBResponse(
        holds=result.holds,
        twist=result.twist,
        offender=[str(c) for c in result.offender] if result.offender else None,
        base_dimension=result.base_dimension,
    )


def scheme_ag(req: models.SchemeRequest) -> models.AgResponse:
    verdict = schemes.ag_check(to_scheme(req.points))
    return models.AgResponse(
        is_ag=verdict.is_ag,
        hf=list(verdict.profile.hf),
        hvec=list(verdict.profile.hvec),
        socle_degree=verdict.profile.socle_degree,
        symmetry_ok=verdict.symmetry_ok,
        cb_ok=verdict.cb.holds,
        failed_condition=verdict.failed_condition,
    )


def scheme_classify(req: models.SchemeRequest) -> models.ClassifyResponse:
    verdict = schemes.classify_degree8(to_scheme(req.points))
    return models.ClassifyResponse(
        kind=verdict.kind,
        quadric_quotient=list(verdict.quadric_quotient)
        if verdict.quadric_quotient
        else None,
    )


# -- picard ---------------------------------------------------------------


def picard_pair(req: models.PairRequest) -> models.PairResponse:
    lat = to_lattice(req.lattice)
    return models.PairResponse(value=lat.pair(req.d1, req.d2))


def picard_rr(req: models.RRRequest) -> models.RRResponse:
    lat = to_lattice(req.lattice)
    return models.RRResponse(
        chi=picard.euler_characteristic(lat, req.r, req.c1, req.c2)
    )


def picard_genus(req: models.DivisorRequest) -> models.GenusResponse:
    lat = to_lattice(req.lattice)
    genus, h0 = picard.genus_and_h0(lat, req.d, to_flags(req.flags))
    return models.GenusResponse(genus=genus, h0=h0)


def picard_classify(req: models.DivisorRequest) -> models.WatanabeResponse:
    lat = to_lattice(req.lattice)
    return models.WatanabeResponse(
        case=picard.watanabe_classify(lat, req.d, to_flags(req.flags))
    )


def picard_decomposable(req: models.DecomposableRequest) -> models.DecomposableResponse:
    lat = to_lattice(req.lattice)
    return models.DecomposableResponse(
        tag=picard.decomposable_case(lat, req.d, req.globally_generated)
    )


def picard_reduced_poly(req: models.RRRequest) -> models.ReducedPolyResponse:
    lat = to_lattice(req.lattice)
    coeffs = picard.reduced_hilbert_poly(lat, req.r, req.c1, req.c2)
    return models.ReducedPolyResponse(coefficients=[str(c) for c in coeffs])


def picard_stability(req: models.DivisorRequest) -> models.StabilityResponse:
    lat = to_lattice(req.lattice)
    verdict = picard.stability_classify(lat, req.d)
    return models.StabilityResponse(
        kind=verdict.kind,
        mu_sub=str(verdict.mu_sub),
        mu_total=str(verdict.mu_total),
        reduced_sub=[str(c) for c in verdict.reduced_sub],
        reduced_total=[str(c) for c in verdict.reduced_total],
    )


def picard_family_dim(req: models.DivisorRequest) -> models.FamilyDimResponse:
    lat = to_lattice(req.lattice)
    h1 = picard.extension_family_dim(lat, req.d, to_flags(req.flags))
    return models.FamilyDimResponse(h1=h1, projective_dimension=h1 - 1)


def picard_sequiv(req: models.SEquivRequest) -> models.SEquivResponse:
    lat = to_lattice(req.lattice)
    return models.SEquivResponse(
        equivalent=picard.s_equivalence_pair(lat, req.d1, req.d2)
    )
