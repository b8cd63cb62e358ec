"""Request/response schemas for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..pnp import DEFAULT_EPS, DEFAULT_MIN_PTS


class HealthResponse(BaseModel):
    status: str = "ok"


class ClusterRequest(BaseModel):
    grid: list[list[int]]
    eps: float = Field(default=DEFAULT_EPS, gt=0)
    min_pts: int = Field(default=DEFAULT_MIN_PTS, ge=1)
    debug: bool = False


class NodeDump(BaseModel):
    id: int
    row: int
    col: int
    color: int
    position: list[float]


class ClusterDebug(BaseModel):
    nodes_before: list[NodeDump]
    nodes_after: list[NodeDump]
    labels: list[int]


class ClusterResponse(BaseModel):
    map: list[list[int]]
    debug: ClusterDebug | None = None


class ClusterBatchRequest(BaseModel):
    grids: list[list[list[int]]]
    eps: float = Field(default=DEFAULT_EPS, gt=0)
    min_pts: int = Field(default=DEFAULT_MIN_PTS, ge=1)


class ClusterBatchResponse(BaseModel):
    maps: list[list[list[int]]]


class AugmentRequest(BaseModel):
    task: str
    seed: int = 0
    train: int = Field(default=10000, ge=1)
    eval: int = Field(default=2000, ge=1)
    out: str
    experts: str | None = None
    eps: float = Field(default=DEFAULT_EPS, gt=0)
    min_pts: int = Field(default=DEFAULT_MIN_PTS, ge=1)
    pnp: bool = False
    jobs: int = Field(default=1, ge=1)


class AugmentResponse(BaseModel):
    manifest: dict


class EvalPnpRequest(BaseModel):
    fixtures: str | None = None
    eps: float = Field(default=DEFAULT_EPS, gt=0)
    min_pts: int = Field(default=DEFAULT_MIN_PTS, ge=1)


class EvalPnpResponse(BaseModel):
    report: dict
    text: str


class InspectRequest(BaseModel):
    path: str
    index: int = Field(default=0, ge=0)


class InspectResponse(BaseModel):
    text: str


class ErrorResponse(BaseModel):
    error: str
    detail: str
