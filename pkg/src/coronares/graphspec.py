"""Text forms of graphs: the compact spec grammar and a DOT subset.

Spec grammar (whitespace-insensitive, family letter case-insensitive):

    P<n>                          path graph
    C<n>                          cycle graph
    K<n>                          complete graph
    edges:<n>:<i>-<j>[,<i>-<j>]*  explicit edge list, 1-based endpoints
    edges:<n>:                    edgeless graph on n vertices

`graph_to_spec` emits the canonical edges form, and
parse_graph_spec(graph_to_spec(g)) == g for every graph.

The DOT reader accepts the undirected subset `graph [name] { a -- b ... }`
with integer or symbolic node names, chained edges, optional semicolons and
`//` or `#` line comments. No attributes, ports or subgraphs. When every
node name is a positive integer the names are used as 1-based vertex
indices; otherwise names map to indices in order of first appearance.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .graphs import Graph, complete_graph, cycle_graph, graph_from_edges, path_graph

_FAMILIES = {"p": path_graph, "c": cycle_graph, "k": complete_graph}


def parse_graph_spec(text: str) -> Graph:
    """Resolve a spec-grammar string to a Graph.

    Syntax problems raise ParseError with the offending position in the
    whitespace-stripped input; semantic problems (out-of-range endpoints,
    loops, too-small families) raise the corresponding graph errors.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError("empty graph spec", 0)
    family = _FAMILIES.get(s[0].lower())
    if family is not None:
        digits = s[1:]
        if not digits.isdigit():
            raise ParseError(f"expected digits after {s[0]!r}", 1)
        return family(int(digits))
    low = s.lower()
    if low.startswith("edges"):
        return _parse_edges_spec(s)
    raise ParseError("expected P<n>, C<n>, K<n> or edges:<n>:<i>-<j>,...", 0)


def _parse_edges_spec(s: str) -> Graph:
    if len(s) < 6 or s[5] != ":":
        raise ParseError("expected ':' after 'edges'", 5)
    second = s.find(":", 6)
    if second < 0:
        raise ParseError("expected ':' after the vertex count", len(s))
    count = s[6:second]
    if not count.isdigit():
        raise ParseError("vertex count must be a nonnegative integer", 6)
    n = int(count)
    body = s[second + 1 :]
    pairs = []
    if body:
        pos = second + 1
        for token in body.split(","):
            m = re.fullmatch(r"(\d+)-(\d+)", token)
            if m is None:
                raise ParseError(f"bad edge token {token!r}, expected <i>-<j>", pos)
            pairs.append((int(m.group(1)), int(m.group(2))))
            pos += len(token) + 1
    return graph_from_edges(n, pairs)


def graph_to_spec(g: Graph) -> str:
    """Canonical, round-trippable edges-form spec string."""
    body = ",".join(f"{a}-{b}" for a, b in g.sorted_edges())
    return f"edges:{g.n}:{body}"


_DOT_TOKEN = re.compile(r"--|->|[{};]|[A-Za-z_][A-Za-z0-9_]*|\d+|\S")


def _dot_tokens(text: str) -> list[tuple[str, int]]:
    tokens: list[tuple[str, int]] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        stripped = re.split(r"//|#", line, maxsplit=1)[0]
        for m in _DOT_TOKEN.finditer(stripped):
            tok = m.group()
            if tok in ("{", "}", ";") or tok == "--" or tok == "->":
                tokens.append((tok, offset + m.start()))
            elif re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*|\d+", tok):
                tokens.append((tok, offset + m.start()))
            else:
                raise ParseError(f"unsupported DOT syntax {tok!r}", offset + m.start())
        tokens.append(("\n", offset + len(line)))
        offset += len(line)
    return tokens


def parse_dot(text: str) -> Graph:
    """Parse the undirected DOT subset described in the module docstring."""
    tokens = _dot_tokens(text)
    pos = 0

    def skip_breaks() -> None:
        nonlocal pos
        while pos < len(tokens) and tokens[pos][0] in ("\n", ";"):
            pos += 1

    def peek() -> tuple[str, int]:
        return tokens[pos] if pos < len(tokens) else ("", len(text))

    skip_breaks()
    tok, at = peek()
    if tok.lower() == "strict":
        pos += 1
        skip_breaks()
        tok, at = peek()
    if tok.lower() == "digraph" or tok == "->":
        raise ParseError("directed graphs are not supported", at)
    if tok.lower() != "graph":
        raise ParseError("expected 'graph'", at)
    pos += 1
    skip_breaks()
    tok, at = peek()
    if tok not in ("{",) and _is_name(tok):
        pos += 1
        skip_breaks()
        tok, at = peek()
    if tok != "{":
        raise ParseError("expected '{'", at)
    pos += 1

    order: list[str] = []
    seen: dict[str, int] = {}
    chains: list[list[str]] = []

    def register(name: str) -> None:
        if name not in seen:
            seen[name] = len(order)
            order.append(name)

    while True:
        skip_breaks()
        tok, at = peek()
        if tok == "}":
            pos += 1
            break
        if tok == "":
            raise ParseError("unexpected end of input, expected '}'", at)
        if not _is_name(tok):
            raise ParseError(f"expected a node name, got {tok!r}", at)
        chain = [tok]
        register(tok)
        pos += 1
        while True:
            tok, at = peek()
            if tok == "->":
                raise ParseError("directed edges are not supported", at)
            if tok != "--":
                break
            pos += 1
            skip_breaks()
            tok, at = peek()
            if not _is_name(tok):
                raise ParseError(f"expected a node name after '--', got {tok!r}", at)
            chain.append(tok)
            register(tok)
            pos += 1
        chains.append(chain)

    skip_breaks()
    tok, at = peek()
    if tok != "":
        raise ParseError(f"unexpected trailing input {tok!r}", at)

    if order and all(name.isdigit() and int(name) >= 1 for name in order):
        index = {name: int(name) for name in order}
        n = max(index.values())
    else:
        index = {name: seen[name] + 1 for name in order}
        n = len(order)
    if n == 0:
        raise ParseError("DOT graph declares no nodes", len(text))
    edges = []
    for chain in chains:
        for a, b in zip(chain, chain[1:]):
            edges.append((index[a], index[b]))
    return graph_from_edges(n, edges)


def _is_name(tok: str) -> bool:
    return bool(re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*|\d+", tok)) and tok not in (
        "--",
        "->",
    )
