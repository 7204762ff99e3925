"""FastAPI front end; every route is a one-line wrapper over handlers."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..algebra import FieldError, ParseError
from ..pfaffian import ShapeError
from ..picard import FlagError, LatticeError
from . import handlers, models


def create_app():
    app = FastAPI(
        title="quartic-acm",
        description=(
            "Exact-arithmetic verification service for pfaffian/determinantal "
            "representations of quartic surfaces, degree-8 point schemes and "
            "K3 Picard-lattice stability verdicts."
        ),
    )

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError):
        kind = type(exc).__name__
        return JSONResponse(status_code=422, content={"error": kind, "detail": str(exc)})

    for exc_type in (ParseError, FieldError, ShapeError, LatticeError, FlagError):
        app.add_exception_handler(exc_type, value_error)

    # pfaffian
    @app.post("/pfaffian/pf", response_model=models.PfaffianResponse)
    def pfaffian_pf(req: models.PfaffianRequest):
        return handlers.compute_pfaffian(req)

    @app.post("/pfaffian/shape", response_model=models.ShapeResponse)
    def pfaffian_shape(req: models.PfaffianRequest):
        return handlers.check_shape(req)

    @app.post("/pfaffian/verify", response_model=models.VerifyResponse)
    def pfaffian_verify(req: models.VerifyRequest):
        return handlers.verify_matrix(req)

    @app.post("/pfaffian/verify-determinant", response_model=models.VerifyResponse)
    def pfaffian_verify_det(req: models.DetVerifyRequest):
        return handlers.verify_determinant(req)

    # surface
    @app.post("/surface/build-pfaffian", response_model=models.BuildPfaffianResponse)
    def surface_build(req: models.QuadricsRequest):
        return handlers.build_pfaffian(req)

    @app.post("/surface/build-phi8", response_model=models.Phi8Response)
    def surface_phi8(req: models.Phi8Request):
        return handlers.build_phi8(req)

    @app.post("/surface/smooth", response_model=models.SmoothResponse)
    def surface_smooth(req: models.SmoothRequest):
        return handlers.smooth_probe(req)

    @app.post("/surface/on-surface", response_model=models.OnSurfaceResponse)
    def surface_incidence(req: models.OnSurfaceRequest):
        return handlers.on_surface(req)

    # schemes
    @app.post("/scheme/hilbert", response_model=models.HilbertResponse)
    def scheme_hilbert(req: models.SchemeRequest):
        return handlers.scheme_hilbert(req)

    @app.post("/scheme/cb", response_model=models.CBResponse)
    def scheme_cb(req: models.CBRequest):
        return handlers.scheme_cb(req)

    @app.post("/scheme/ag", response_model=models.AgResponse)
    def scheme_ag(req: models.SchemeRequest):
        return handlers.scheme_ag(req)

    @app.post("/scheme/classify", response_model=models.ClassifyResponse)
    def scheme_classify(req: models.SchemeRequest):
        return handlers.scheme_classify(req)

    # picard
    @app.post("/picard/pair", response_model=models.PairResponse)
    def picard_pair(req: models.PairRequest):
        return handlers.picard_pair(req)

    @app.post("/picard/rr", response_model=models.RRResponse)
    def picard_rr(req: models.RRRequest):
        return handlers.picard_rr(req)

    @app.post("/picard/genus", response_model=models.GenusResponse)
    def picard_genus(req: models.DivisorRequest):
        return handlers.picard_genus(req)

    @app.post("/picard/classify", response_model=models.WatanabeResponse)
    def picard_classify(req: models.DivisorRequest):
        return handlers.picard_classify(req)

    @app.post("/picard/decomposable", response_model=models.DecomposableResponse)
    def picard_decomposable(req: models.DecomposableRequest):
        return handlers.picard_decomposable(req)

    @app.post("/picard/reduced-poly", response_model=models.ReducedPolyResponse)
    def picard_reduced(req: models.RRRequest):
        return handlers.picard_reduced_poly(req)

    @app.post("/picard/stability", response_model=models.StabilityResponse)
    def picard_stability(req: models.DivisorRequest):
        return handlers.picard_stability(req)

    @app.post("/picard/family-dim", response_model=models.FamilyDimResponse)
    def picard_family(req: models.DivisorRequest):
        return handlers.picard_family_dim(req)

    @app.post("/picard/sequiv", response_model=models.SEquivResponse)
    def picard_sequiv(req: models.SEquivRequest):
        return handlers.picard_sequiv(req)

    return app


app = create_app()
