"""Service layer: turn requests into result documents.

Both the FastAPI endpoints and the CLI's in-process mode call these
functions, so the two front ends cannot drift apart.
"""

from __future__ import annotations

from ..graphs import Graph, laplacian
from ..graphspec import graph_to_spec, parse_graph_spec
from ..linalg import verify_one_inverse
from ..products import corona, neighborhood_corona
from ..rendering import matrix_cells, partition_labels, plain_labels
from ..resistance import (
    g_inverse_corona,
    g_inverse_direct,
    g_inverse_ncorona,
    resistance_direct,
    resistance_from_ginverse,
)
from .schemas import (
    GraphDocument,
    MatrixDocument,
    MatrixRequest,
    ProductKind,
    ProductRequest,
    VerifyDocument,
    VerifyRequest,
)

_BUILDERS = {
    ProductKind.corona: corona,
    ProductKind.ncorona: neighborhood_corona,
}
_THEOREM_PATHS = {
    ProductKind.corona: g_inverse_corona,
    ProductKind.ncorona: g_inverse_ncorona,
}


def build_product(kind: ProductKind, req: ProductRequest) -> GraphDocument:
    """Construct a product graph and describe it."""
    g1 = parse_graph_spec(req.g1)
    g2 = parse_graph_spec(req.g2)
    g = _BUILDERS[kind](g1, g2)
    return GraphDocument(
        operation=kind.value,
        inputs={"g1": req.g1, "g2": req.g2},
        n=g.n,
        m=g.m,
        labels=partition_labels(g1.n, g2.n),
        edges=g.sorted_edges(),
        graph_spec=graph_to_spec(g),
    )


def _oracle_agrees(kind: ProductKind, g1: Graph, g2: Graph) -> bool:
    r = resistance_from_ginverse(_THEOREM_PATHS[kind](g1, g2))
    return r == resistance_direct(_BUILDERS[kind](g1, g2))


def compute_ginv(req: MatrixRequest) -> MatrixDocument:
    """Symmetric {1}-inverse: theorem path for products, group inverse otherwise."""
    verified = None
    if req.product is not None:
        g1 = parse_graph_spec(req.g1)
        g2 = parse_graph_spec(req.g2)
        gi = _THEOREM_PATHS[req.product](g1, g2)
        if req.verify:
            product_graph = _BUILDERS[req.product](g1, g2)
            verified = verify_one_inverse(laplacian(product_graph), gi.h) and (
                resistance_from_ginverse(gi) == resistance_direct(product_graph)
            )
        operation = f"ginv {req.product.value}"
        inputs = {"g1": req.g1, "g2": req.g2}
        labels = partition_labels(g1.n, g2.n)
    else:
        g = parse_graph_spec(req.g)
        gi = g_inverse_direct(g)
        operation = "ginv"
        inputs = {"g": req.g}
        labels = plain_labels(g.n)
    return MatrixDocument(
        operation=operation,
        inputs=inputs,
        labels=labels,
        matrix=matrix_cells(gi.h, req.values, req.decimals),
        values=req.values,
        decimals=req.decimals if req.values == "decimal" else None,
        verified=verified,
    )


def compute_resist(req: MatrixRequest) -> MatrixDocument:
    """Resistance-distance matrix; with verify=True, check against the oracle."""
    verified = None
    if req.product is not None:
        g1 = parse_graph_spec(req.g1)
        g2 = parse_graph_spec(req.g2)
        gi = _THEOREM_PATHS[req.product](g1, g2)
        r = resistance_from_ginverse(gi)
        if req.verify:
            verified = r == resistance_direct(_BUILDERS[req.product](g1, g2))
        operation = f"resist {req.product.value}"
        inputs = {"g1": req.g1, "g2": req.g2}
        labels = partition_labels(g1.n, g2.n)
    else:
        g = parse_graph_spec(req.g)
        r = resistance_direct(g)
        operation = "resist"
        inputs = {"g": req.g}
        labels = plain_labels(g.n)
    return MatrixDocument(
        operation=operation,
        inputs=inputs,
        labels=labels,
        matrix=matrix_cells(r.r, req.values, req.decimals),
        values=req.values,
        decimals=req.decimals if req.values == "decimal" else None,
        verified=verified,
    )


def run_verify(req: VerifyRequest) -> VerifyDocument:
    """Exact theorem-path vs oracle-path resistance equality per product."""
    g1 = parse_graph_spec(req.g1)
    g2 = parse_graph_spec(req.g2)
    kinds = (
        [ProductKind.corona, ProductKind.ncorona]
        if req.product == "both"
        else [ProductKind(req.product)]
    )
    checks = {kind.value: _oracle_agrees(kind, g1, g2) for kind in kinds}
    return VerifyDocument(
        operation="verify",
        inputs={"product": req.product, "g1": req.g1, "g2": req.g2},
        checks=checks,
        verified=all(checks.values()),
    )
