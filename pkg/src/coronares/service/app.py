"""FastAPI application exposing the coronares operations.

Run with:  uvicorn coronares.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import CoronaresError
from . import operations
from .schemas import (
    GraphDocument,
    HealthResponse,
    MatrixDocument,
    MatrixRequest,
    ProductKind,
    ProductRequest,
    VerifyDocument,
    VerifyRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="coronares",
        version=__version__,
        description=(
            "Exact resistance distances and Laplacian {1}-inverses for corona "
            "and neighborhood-corona product graphs."
        ),
    )

    @app.exception_handler(CoronaresError)
    async def _domain_error(request: Request, exc: CoronaresError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"detail": str(exc), "error": type(exc).__name__},
        )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/corona", response_model=GraphDocument)
    def corona_product(req: ProductRequest) -> GraphDocument:
        return operations.build_product(ProductKind.corona, req)

    @app.post("/ncorona", response_model=GraphDocument)
    def ncorona_product(req: ProductRequest) -> GraphDocument:
        return operations.build_product(ProductKind.ncorona, req)

    @app.post("/ginv", response_model=MatrixDocument, response_model_exclude_none=True)
    def ginv(req: MatrixRequest) -> MatrixDocument:
        return operations.compute_ginv(req)

    @app.post(
        "/resist", response_model=MatrixDocument, response_model_exclude_none=True
    )
    def resist(req: MatrixRequest) -> MatrixDocument:
        return operations.compute_resist(req)

    @app.post("/verify", response_model=VerifyDocument)
    def verify(req: VerifyRequest) -> VerifyDocument:
        return operations.run_verify(req)

    return app


app = create_app()
