"""Reading and writing graphs: graph6 streams, edge-list text, JSON."""

from __future__ import annotations

import json
from typing import IO, Iterable, Iterator

from .graph import Graph, GraphError, from_edge_list
from .graph6 import Graph6Error


class ParseError(ValueError):
    """Malformed input; the message carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def iter_graph6(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Parse newline-delimited graph6; blank lines are skipped."""
    for lineno, raw in enumerate(lines, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("ascii", errors="replace")
        text = raw.strip()
        if not text:
            continue
        try:
            yield Graph.from_graph6(text)
        except (Graph6Error, GraphError) as exc:
            raise ParseError(str(exc), lineno) from None


def read_edge_list(stream: IO[str]) -> Graph:
    """Text format: first line ``n``, then one ``u v`` pair per line (0-indexed)."""
    n = None
    edges = []
    for lineno, raw in enumerate(stream, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise ParseError(f"expected integers, got {text!r}", lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise ParseError("first line must be the vertex count", lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise ParseError(f"expected 'u v', got {text!r}", lineno)
        u, v = nums
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"invalid edge ({u}, {v}) for n={n}", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("empty edge list")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def dumps(obj, pretty: bool = False) -> str:
    """JSON with insertion-ordered keys; compact unless ``pretty``."""
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))
