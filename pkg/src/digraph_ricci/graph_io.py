"""Reading and writing graph files.

Three formats are supported:

``edgelist``
    One ``u v`` pair per line, 0-based. ``#`` lines are comments. An optional
    ``n <count>`` header fixes the vertex count, otherwise it is
    ``1 + max index``.
``json``
    ``{"num_vertices": n, "edges": [[u, v], ...]}``.
``csv``
    ``n`` rows of ``n`` comma-separated 0/1 entries; entry ``(i, j)`` is 1
    iff ``(i, j)`` is an edge.
"""

from __future__ import annotations

import json
import os
from typing import List, Optional, Tuple

from .errors import ValidationError
from .graph import UNION, DirectedGraph, build_graph

FORMATS = ("edgelist", "json", "csv")


def guess_format(path: str) -> str:
    ext = os.path.splitext(path)[1].lower()
    if ext == ".json":
        return "json"
    if ext == ".csv":
        return "csv"
    return "edgelist"


def parse_edgelist(text: str) -> Tuple[int, List[Tuple[int, int]]]:
    n: Optional[int] = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or n is not None or edges:
                raise ValidationError(f"line {lineno}: malformed 'n <count>' header")
            n = _int(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise ValidationError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((_int(parts[0], lineno), _int(parts[1], lineno)))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return n, edges


def _int(tok: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ValidationError(f"line {lineno}: {tok!r} is not an integer") from None
    if value < 0:
        raise ValidationError(f"line {lineno}: negative vertex index {value}")
    return value


def parse_json(text: str) -> Tuple[int, List[Tuple[int, int]]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "num_vertices" not in data or "edges" not in data:
        raise ValidationError('JSON graph needs "num_vertices" and "edges"')
    n = data["num_vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValidationError(f"num_vertices must be a nonnegative integer, got {n!r}")
    edges = []
    for e in data["edges"]:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(w, int) and not isinstance(w, bool) for w in e)
        ):
            raise ValidationError(f"edge {e!r} is not a pair of integers")
        edges.append((e[0], e[1]))
    return n, edges


def parse_csv(text: str) -> Tuple[int, List[Tuple[int, int]]]:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    n = len(rows)
    edges = []
    for i, row in enumerate(rows):
        cells = [c.strip() for c in row.split(",")]
        if len(cells) != n:
            raise ValidationError(f"adjacency row {i} has {len(cells)} entries, expected {n}")
        for j, c in enumerate(cells):
            if c == "1":
                edges.append((i, j))
            elif c != "0":
                raise ValidationError(f"adjacency entry ({i}, {j}) = {c!r}, expected 0 or 1")
    return n, edges


_PARSERS = {"edgelist": parse_edgelist, "json": parse_json, "csv": parse_csv}


def loads(text: str, fmt: str, degree_convention: str = UNION) -> DirectedGraph:
    n, edges = _PARSERS[fmt](text)
    return build_graph(n, edges, degree_convention)


def load(path: str, fmt: Optional[str] = None, degree_convention: str = UNION) -> DirectedGraph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return loads(text, fmt or guess_format(path), degree_convention)


def dumps(G: DirectedGraph, fmt: str) -> str:
    if fmt == "edgelist":
        lines = [f"n {G.n}"] + [f"{u} {v}" for u, v in G.edges]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {"num_vertices": G.n, "edges": [[u, v] for u, v in G.edges]}
        return json.dumps(payload) + "\n"
    if fmt == "csv":
        lines = []
        for i in range(G.n):
            out = G.out_set(i)
            lines.append(",".join("1" if j in out else "0" for j in range(G.n)))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}")


def dump(G: DirectedGraph, path: str, fmt: Optional[str] = None) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(dumps(G, fmt or guess_format(path)))
