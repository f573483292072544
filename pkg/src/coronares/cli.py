"""Command-line front end.

The CLI is a thin client: it builds the same request models the HTTP API
accepts, runs them in process by default, or posts them to a running
service when --server is given, then renders the returned document.

Exit codes: 0 success (including --verify PASS), 1 input/usage errors,
2 verification FAIL.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from . import __version__
from .errors import CoronaresError
from .graphspec import graph_to_spec, parse_dot
from .rendering import FORMATS, serialize
from .service import operations
from .service.schemas import (
    Document,
    GraphDocument,
    MatrixDocument,
    MatrixRequest,
    ProductKind,
    ProductRequest,
    VerifyDocument,
    VerifyRequest,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse, but usage problems exit 1 instead of 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=FORMATS, default="table", help="output format"
    )
    common.add_argument(
        "--values",
        choices=("exact", "decimal"),
        default="exact",
        help="render entries as exact fractions or rounded decimals",
    )
    common.add_argument(
        "--decimals",
        type=int,
        default=6,
        metavar="K",
        help="decimal places for --values decimal (0..12, default 6)",
    )
    common.add_argument(
        "--out", metavar="PATH", help="write output to PATH instead of stdout"
    )
    common.add_argument(
        "--server",
        metavar="URL",
        help="send the request to a running coronares service",
    )

    parser = _Parser(
        prog="coronares",
        description=(
            "Exact {1}-inverses and resistance distances for corona and "
            "neighborhood-corona product graphs. Graph specs: P<n>, C<n>, "
            "K<n>, edges:<n>:<i>-<j>,..., or @file.dot."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    for kind in ("corona", "ncorona"):
        p = sub.add_parser(
            kind, parents=[common], help=f"construct the {kind} product graph"
        )
        p.add_argument("--g1", required=True, help="host graph spec")
        p.add_argument("--g2", required=True, help="pattern graph spec")

    for name, summary in (
        ("ginv", "symmetric {1}-inverse of the Laplacian"),
        ("resist", "resistance-distance matrix"),
    ):
        p = sub.add_parser(name, parents=[common], help=summary)
        p.add_argument(
            "product",
            nargs="?",
            choices=("corona", "ncorona"),
            help="theorem path on a product graph (omit to use --g)",
        )
        p.add_argument("--g1", help="host graph spec")
        p.add_argument("--g2", help="pattern graph spec")
        p.add_argument("--g", help="any connected graph (direct oracle path)")
        p.add_argument(
            "--verify",
            action="store_true",
            help="also check the theorem path against the oracle (exit 2 on FAIL)",
        )

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="compare theorem-path and oracle-path resistances",
    )
    p.add_argument(
        "product", nargs="?", choices=("corona", "ncorona", "both"), default="both"
    )
    p.add_argument("--g1", required=True, help="host graph spec")
    p.add_argument("--g2", required=True, help="pattern graph spec")
    return parser


def _resolve_spec(spec: str) -> str:
    """Pass spec strings through; load @file as DOT and canonicalize."""
    if not spec.startswith("@"):
        return spec
    path = spec[1:]
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CoronaresError(f"cannot read {path}: {exc.strerror}") from exc
    return graph_to_spec(parse_dot(text))


_ENDPOINTS = {
    "corona": ("/corona", GraphDocument),
    "ncorona": ("/ncorona", GraphDocument),
    "ginv": ("/ginv", MatrixDocument),
    "resist": ("/resist", MatrixDocument),
    "verify": ("/verify", VerifyDocument),
}


def _build_request(args: argparse.Namespace):
    if args.command in ("corona", "ncorona"):
        return ProductRequest(
            g1=_resolve_spec(args.g1), g2=_resolve_spec(args.g2)
        )
    if args.command == "verify":
        return VerifyRequest(
            product=args.product,
            g1=_resolve_spec(args.g1),
            g2=_resolve_spec(args.g2),
        )
    return MatrixRequest(
        product=args.product,
        g1=_resolve_spec(args.g1) if args.g1 else None,
        g2=_resolve_spec(args.g2) if args.g2 else None,
        g=_resolve_spec(args.g) if args.g else None,
        verify=args.verify,
        values=args.values,
        decimals=args.decimals,
    )


def _execute_local(command: str, request) -> Document:
    if command in ("corona", "ncorona"):
        return operations.build_product(ProductKind(command), request)
    if command == "ginv":
        return operations.compute_ginv(request)
    if command == "resist":
        return operations.compute_resist(request)
    return operations.run_verify(request)


def _execute_remote(server: str, command: str, request) -> Document:
    import httpx

    path, doc_type = _ENDPOINTS[command]
    url = server.rstrip("/") + path
    try:
        response = httpx.post(
            url, json=request.model_dump(mode="json"), timeout=120.0
        )
    except httpx.HTTPError as exc:
        raise CoronaresError(f"cannot reach {url}: {exc}") from exc
    if response.status_code == 200:
        return doc_type.model_validate(response.json())
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = response.text
    raise CoronaresError(f"server rejected request ({response.status_code}): {detail}")


def _verified_flag(doc: Document) -> Optional[bool]:
    if isinstance(doc, (MatrixDocument, VerifyDocument)):
        return doc.verified
    return None


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not 0 <= args.decimals <= 12:
            raise _UsageError("coronares: error: --decimals must be in 0..12")
        request = _build_request(args)
        if args.server:
            doc = _execute_remote(args.server, args.command, request)
        else:
            doc = _execute_local(args.command, request)
        payload = serialize(doc, args.format)
        if args.out:
            try:
                with open(args.out, "wb") as fh:
                    fh.write(payload)
            except OSError as exc:
                raise CoronaresError(
                    f"cannot write {args.out}: {exc.strerror}"
                ) from exc
        else:
            sys.stdout.buffer.write(payload)
            sys.stdout.buffer.flush()
        return 2 if _verified_flag(doc) is False else 0
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except ValidationError as exc:
        first = exc.errors()[0]
        msg = first.get("msg", str(exc))
        msg = msg.removeprefix("Value error, ")
        print(f"coronares: error: {msg}", file=sys.stderr)
        return 1
    except CoronaresError as exc:
        print(f"coronares: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
