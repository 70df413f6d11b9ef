"""Edge-list text format and JSON witness files.

Edge list: first line ``n m``, then ``m`` lines ``u v`` with ``0 <= u < v < n``.
Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .graph import Graph


class FormatError(ValueError):
    """Malformed input file.  ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_edge_list(text: str) -> Graph:
    lines = [
        (i, raw.split())
        for i, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise FormatError("missing header line 'n m'", 1)
    lineno, head = lines[0]
    n, m = _ints(head, lineno, "header")
    if n < 0 or m < 0:
        raise FormatError("negative n or m", lineno)
    body = lines[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise FormatError(f"header declares {m} edges, found {len(body)}", at)
    seen = set()
    edges = []
    for lineno, fields in body:
        u, v = _ints(fields, lineno, "edge")
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range 0..{n - 1}", lineno)
        if u > v:
            raise FormatError(f"edge must be written with u < v, got '{u} {v}'", lineno)
        if (u, v) in seen:
            raise FormatError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def _ints(fields: list[str], lineno: int, what: str) -> tuple[int, int]:
    if len(fields) != 2:
        raise FormatError(f"{what} line needs exactly two integers", lineno)
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise FormatError(f"{what} line has a non-integer field", lineno) from None


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_graph(path: Union[str, Path]) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="ascii"))


def write_graph(g: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_edge_list(g), encoding="ascii")


def dumps(obj) -> str:
    """Deterministic JSON: insertion-ordered keys, compact, trailing newline."""
    return json.dumps(obj, separators=(", ", ": ")) + "\n"


def _require(data, key, kind):
    if not isinstance(data, dict) or key not in data:
        raise FormatError(f"witness is missing field {key!r}")
    val = data[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise FormatError(f"field {key!r} must be an integer")
    if kind is list and not (isinstance(val, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in val)):
        raise FormatError(f"field {key!r} must be a list of integers")
    return val


def load_schedule_witness(text: str) -> tuple[int, list[int]]:
    """``(n, centers)`` from a schedule witness; raises FormatError if malformed."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"witness is not JSON: {exc.msg}", exc.lineno) from None
    n = _require(data, "n", int)
    centers = _require(data, "centers", list)
    if "length" in data and data["length"] != len(centers):
        raise FormatError("field 'length' disagrees with the number of centers")
    if not centers:
        raise FormatError("schedule witness has no centers")
    return n, centers


def load_domination_witness(text: str) -> tuple[int, int, list[int]]:
    """``(n, hops, vertices)`` from a dominating-set witness."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"witness is not JSON: {exc.msg}", exc.lineno) from None
    n = _require(data, "n", int)
    hops = _require(data, "hops", int)
    vertices = _require(data, "vertices", list)
    if hops < 0:
        raise FormatError("field 'hops' must be nonnegative")
    if not vertices:
        raise FormatError("dominating-set witness has no vertices")
    return n, hops, vertices
