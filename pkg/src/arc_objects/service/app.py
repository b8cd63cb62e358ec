"""FastAPI service wrapping the pipeline.

Domain failures surface as HTTP 422 with a typed error payload
({"error": <class name>, "detail": <message>}); anything else is a 500.
The CLI is a thin client of these endpoints.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import pipeline
from ..errors import ArcObjectsError
from . import models

app = FastAPI(title="arc-objects", version="0.1.0")


@app.exception_handler(ArcObjectsError)
async def domain_error_handler(request: Request, exc: ArcObjectsError):
    return JSONResponse(
        status_code=422,
        content=models.ErrorResponse(error=type(exc).__name__, detail=str(exc)).model_dump(),
    )


@app.get("/health", response_model=models.HealthResponse)
def health() -> models.HealthResponse:
    return models.HealthResponse()


@app.post("/cluster", response_model=models.ClusterResponse, response_model_exclude_none=True)
def cluster(req: models.ClusterRequest) -> models.ClusterResponse:
    payload = pipeline.run_cluster(req.grid, req.eps, req.min_pts, req.debug)
    return models.ClusterResponse(**payload)


@app.post("/cluster/batch", response_model=models.ClusterBatchResponse)
def cluster_batch(req: models.ClusterBatchRequest) -> models.ClusterBatchResponse:
    maps = [
        pipeline.run_cluster(grid, req.eps, req.min_pts)["map"] for grid in req.grids
    ]
    return models.ClusterBatchResponse(maps=maps)


@app.post("/augment", response_model=models.AugmentResponse)
def augment(req: models.AugmentRequest) -> models.AugmentResponse:
    manifest = pipeline.run_augment(
        task=req.task,
        seed=req.seed,
        train=req.train,
        eval=req.eval,
        out=req.out,
        experts=req.experts,
        eps=req.eps,
        min_pts=req.min_pts,
        pnp=req.pnp,
        jobs=req.jobs,
    )
    return models.AugmentResponse(manifest=manifest)


@app.post("/evalpnp", response_model=models.EvalPnpResponse)
def evalpnp(req: models.EvalPnpRequest) -> models.EvalPnpResponse:
    report, text = pipeline.run_evalpnp(req.fixtures, req.eps, req.min_pts)
    return models.EvalPnpResponse(report=report, text=text)


@app.post("/inspect", response_model=models.InspectResponse)
def inspect(req: models.InspectRequest) -> models.InspectResponse:
    return models.InspectResponse(text=pipeline.run_inspect(req.path, req.index))


def main():  # pragma: no cover - manual entry point
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=8000)


if __name__ == "__main__":  # pragma: no cover
    main()
