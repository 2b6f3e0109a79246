"""HTTP facade over the library: one endpoint per command-line operation.

The app is stateless between requests apart from the module-level caches
(psi memoization, braid paths, weight-slice dictionaries), which is what
makes wrapping the core in a service worthwhile for batch use.  All request
bodies are JSON; semantic problems come back as 422 with a structured error
object, never as bare strings.
"""

from __future__ import annotations

from typing import Any, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__, lagrangian, suites
from .bz import bz_from_lusztig, star
from .crystal import apply_op, enumerate_by_height, parse_ops
from .maya import MayaDiagram
from .serialize import (
    SCHEMA_APPLY,
    SCHEMA_LAGRANGIAN,
    bz_to_json,
    datum_from_json,
    datum_list_to_json,
    datum_payload,
    error_json,
    polytope_to_json,
    quiver_to_json,
)

app = FastAPI(title="mvlab", version=__version__)


class EnumerateRequest(BaseModel):
    n: int = Field(ge=1)
    max_height: int = Field(ge=0)


class ApplyRequest(BaseModel):
    datum: dict
    ops: str


class DatumRequest(BaseModel):
    datum: dict


class QuiverRequest(BaseModel):
    n: int = Field(ge=1)
    maya: list[int]


class LagrangianRequest(BaseModel):
    datum: dict
    p: int = lagrangian.DEFAULT_PRIME
    seed: int = 0


class VerifyRequest(BaseModel):
    suite: str
    n: Optional[int] = Field(default=None, ge=1)
    max_height: Optional[int] = Field(default=None, ge=0)
    jobs: int = Field(default=1, ge=1)
    seed: int = suites.DEFAULT_SEED


def _invalid(exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=422, content=error_json(str(exc)))


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/enumerate")
def enumerate_data(req: EnumerateRequest) -> Any:
    try:
        items = list(enumerate_by_height(req.n, req.max_height))
    except ValueError as exc:
        return _invalid(exc)
    return datum_list_to_json(req.n, req.max_height, items)


@app.post("/apply")
def apply_ops(req: ApplyRequest) -> Any:
    try:
        a = datum_from_json(req.datum)
        ops = parse_ops(req.ops, a.n)
    except ValueError as exc:
        return _invalid(exc)
    current = a
    for step, op in enumerate(ops, start=1):
        nxt = apply_op(current, op)
        if nxt is None:
            return {
                "schema": SCHEMA_APPLY,
                "bottom": True,
                "failed_op": f"{op.kind}{op.index}",
                "step": step,
                "steps_applied": step - 1,
                "datum": datum_payload(current),
            }
        current = nxt
    return {
        "schema": SCHEMA_APPLY,
        "bottom": False,
        "steps_applied": len(ops),
        "datum": datum_payload(current),
    }


@app.post("/psi")
def psi(req: DatumRequest) -> Any:
    try:
        a = datum_from_json(req.datum)
    except ValueError as exc:
        return _invalid(exc)
    return bz_to_json(bz_from_lusztig(a))


@app.post("/polytope")
def polytope(req: DatumRequest) -> Any:
    try:
        a = datum_from_json(req.datum)
        return polytope_to_json(star(bz_from_lusztig(a)))
    except ValueError as exc:
        return _invalid(exc)


@app.post("/quiver")
def quiver_data(req: QuiverRequest) -> Any:
    try:
        K = MayaDiagram.of(req.n, req.maya)
        return quiver_to_json(K)
    except ValueError as exc:
        return _invalid(exc)


@app.post("/lagrangian")
def lagrangian_report(req: LagrangianRequest) -> Any:
    try:
        a = datum_from_json(req.datum)
        if req.p < 2:
            raise ValueError("p must be a prime, got something below 2")
        report = lagrangian.sampling_report(a, req.p, req.seed)
    except ValueError as exc:
        return _invalid(exc)
    return {"schema": SCHEMA_LAGRANGIAN, **report}


@app.post("/verify")
def verify(req: VerifyRequest) -> Any:
    try:
        report = suites.run_suite(
            req.suite, n=req.n, max_height=req.max_height, jobs=req.jobs, seed=req.seed
        )
    except ValueError as exc:
        return _invalid(exc)
    return report.to_json()
