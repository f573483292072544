"""Pydantic request and response models for the coronares service.

The same documents travel over HTTP and out of the CLI, so their field
order here is the byte order of the JSON the tool prints.
"""

from __future__ import annotations

from enum import Enum
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ProductKind(str, Enum):
    corona = "corona"
    ncorona = "ncorona"


class ProductRequest(BaseModel):
    """Inputs for constructing a product graph."""

    model_config = ConfigDict(extra="forbid")

    g1: str = Field(description="host graph spec, e.g. 'C3' or 'edges:4:1-2,...'")
    g2: str = Field(description="pattern graph spec")


class MatrixRequest(BaseModel):
    """Inputs for a {1}-inverse or resistance computation.

    Either `product` with `g1`/`g2` (theorem path on a product graph) or
    `g` alone (direct oracle path on any connected graph).
    """

    model_config = ConfigDict(extra="forbid")

    product: Optional[ProductKind] = None
    g1: Optional[str] = None
    g2: Optional[str] = None
    g: Optional[str] = None
    verify: bool = False
    values: Literal["exact", "decimal"] = "exact"
    decimals: int = Field(default=6, ge=0, le=12)

    @model_validator(mode="after")
    def _check_exclusive(self) -> "MatrixRequest":
        if self.product is not None:
            if self.g1 is None or self.g2 is None:
                raise ValueError("product operations require --g1 and --g2")
            if self.g is not None:
                raise ValueError("--g cannot be combined with a product operation")
        else:
            if self.g is None:
                raise ValueError("plain operations require --g (or name a product)")
            if self.g1 is not None or self.g2 is not None:
                raise ValueError("--g1/--g2 require a product operation")
            if self.verify:
                raise ValueError("--verify requires a product operation")
        return self


class VerifyRequest(BaseModel):
    """Inputs for an oracle-equivalence check on one or both products."""

    model_config = ConfigDict(extra="forbid")

    product: Literal["corona", "ncorona", "both"] = "both"
    g1: str
    g2: str


class MatrixDocument(BaseModel):
    """A matrix result with its vertex-labeling legend.

    In exact mode every cell is a fraction string like '53/72' (integers
    without '/1'); in decimal mode every cell is a number rounded
    half-away-from-zero to `decimals` places.
    """

    operation: str
    inputs: dict[str, str]
    labels: list[str]
    matrix: list[list[Union[str, float]]]
    values: Literal["exact", "decimal"] = "exact"
    decimals: Optional[int] = None
    verified: Optional[bool] = None

    @model_validator(mode="after")
    def _legend_covers_rows(self) -> "MatrixDocument":
        if len(self.labels) != len(self.matrix):
            raise ValueError("labels must cover every matrix row exactly once")
        return self


class GraphDocument(BaseModel):
    """A constructed graph: size, edges, legend and a round-trippable spec."""

    operation: str
    inputs: dict[str, str]
    n: int
    m: int
    labels: list[str]
    edges: list[tuple[int, int]]
    graph_spec: str

    @model_validator(mode="after")
    def _legend_covers_vertices(self) -> "GraphDocument":
        if len(self.labels) != self.n:
            raise ValueError("labels must cover every vertex exactly once")
        return self


class VerifyDocument(BaseModel):
    """Outcome of theorem-path vs oracle-path equality checks."""

    operation: str
    inputs: dict[str, str]
    checks: dict[str, bool]
    verified: bool


class HealthResponse(BaseModel):
    status: str
    version: str


Document = Union[MatrixDocument, GraphDocument, VerifyDocument]
