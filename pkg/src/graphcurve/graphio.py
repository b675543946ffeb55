"""Graph files, serialisation and the built-in gallery.

The text format is DIMACS-like::

    c optional comment lines
    p edge <n> <m>
    e <u> <v>        (exactly m lines; repeats give parallel edges, u == v a loop)

A JSON object ``{"n": ..., "edges": [[u, v], ...]}`` is accepted as well.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from graphcurve.errors import GraphInputError
from graphcurve.multigraph import Multigraph


@dataclass(frozen=True)
class GraphDocument:
    name: str
    graph: Multigraph
    source: str  # "file" or "gallery"


def _parse_dimacs(text: str) -> Multigraph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphInputError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphInputError(f"line {lineno}: expected 'p edge <n> <m>', got {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphInputError(f"line {lineno}: non-integer counts in header") from None
            if n < 0 or m < 0:
                raise GraphInputError(f"line {lineno}: negative counts in header")
        elif parts[0] == "e":
            if n is None:
                raise GraphInputError(f"line {lineno}: edge before the 'p edge' header")
            if len(parts) != 3:
                raise GraphInputError(f"line {lineno}: expected 'e <u> <v>', got {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphInputError(f"line {lineno}: non-integer endpoint") from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphInputError(f"line {lineno}: endpoint {x} outside 1..{n}")
            edges.append((u, v))
        else:
            raise GraphInputError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphInputError("missing 'p edge <n> <m>' header")
    if len(edges) != m:
        raise GraphInputError(f"edge count mismatch: header says {m}, found {len(edges)}")
    return Multigraph(n, tuple(edges))


def _parse_json(text: str) -> Multigraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphInputError("JSON graph needs fields 'n' and 'edges'")
    try:
        edges = tuple((int(u), int(v)) for u, v in data["edges"])
        n = int(data["n"])
    except (TypeError, ValueError):
        raise GraphInputError("JSON edges must be pairs of integers") from None
    return Multigraph(n, edges)


def parse_graph(text: str, name: str = "<input>") -> GraphDocument:
    graph = _parse_json(text) if text.lstrip().startswith("{") else _parse_dimacs(text)
    return GraphDocument(name, graph, "file")


def read_graph(path: str | Path) -> GraphDocument:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text, name=path.stem)


def serialize_graph(G: Multigraph, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p edge {G.n} {G.m}")
    lines += [f"e {u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def _cube_edges():
    out = []
    for a in range(8):
        for bit in (1, 2, 4):
            b = a ^ bit
            if a < b:
                out.append((a + 1, b + 1))
    return out


GALLERY = {
    "theta": (2, [(1, 2), (1, 2), (1, 2)]),
    "sodacan": (4, [(1, 3), (2, 4), (1, 2), (1, 2), (3, 4), (3, 4)]),
    "k4": (4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    "doublehouse": (8, [(1, 2), (1, 3), (1, 8), (2, 3), (2, 4), (3, 5),
                        (4, 5), (4, 6), (5, 7), (6, 7), (6, 8), (7, 8)]),
    "dumbbell": (2, [(1, 1), (2, 2), (1, 2)]),
    "prism": (6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)]),
    "cube": (8, _cube_edges()),
    "petersen": (10, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
                      (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
                      (6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]),
}


def gallery_names() -> list[str]:
    return list(GALLERY)


def gallery(name: str) -> GraphDocument:
    try:
        n, edges = GALLERY[name]
    except KeyError:
        raise GraphInputError(
            f"unknown gallery graph {name!r}; available: {', '.join(GALLERY)}"
        ) from None
    return GraphDocument(name, Multigraph(n, tuple(edges)), "gallery")
