"""FastAPI application exposing the compute endpoints.

Error mapping: usage errors (caller misuse) answer 400, domain and
format errors (invalid mathematics or documents) answer 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..exactnum import DomainError, FormatError, UsageError
from ..formats import tool_stamp
from . import handlers, models

app = FastAPI(
    title="l2sig",
    description="Exact L2-signature invariants of hermitian forms",
    version=tool_stamp()["version"],
)


@app.exception_handler(UsageError)
async def _usage_error(_: Request, exc: UsageError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": str(exc), "kind": "usage"})


@app.exception_handler(DomainError)
async def _domain_error(_: Request, exc: DomainError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"error": str(exc), "kind": "domain"})


@app.exception_handler(FormatError)
async def _format_error(_: Request, exc: FormatError) -> JSONResponse:
    detail = {"error": str(exc), "kind": "format"}
    if exc.line is not None:
        detail["line"] = exc.line
        detail["column"] = exc.column
    return JSONResponse(status_code=422, content=detail)


@app.get("/health", response_model=models.HealthResponse)
def health() -> models.HealthResponse:
    return models.HealthResponse(status="ok", tool=models.ToolInfo(**tool_stamp()))


@app.post("/forms/invariants", response_model=models.InvariantsResponse,
          response_model_exclude_none=False)
def invariants(request: models.InvariantsRequest) -> models.InvariantsResponse:
    return handlers.compute_invariants(request)


@app.post("/forms/induce", response_model=models.InduceResponse)
def induce(request: models.InduceRequest) -> models.InduceResponse:
    return handlers.compute_induce(request)


@app.post("/family", response_model=models.FamilyResponse)
def family(request: models.FamilyRequest) -> models.FamilyResponse:
    return handlers.compute_family(request)


@app.post("/zapprox", response_model=models.ZapproxResponse)
def zapprox(request: models.ZapproxRequest) -> models.ZapproxResponse:
    return handlers.compute_zapprox(request)


@app.post("/ledger", response_model=models.LedgerResponse)
def ledger(script: models.LedgerScript) -> models.LedgerResponse:
    return handlers.run_ledger(script)
