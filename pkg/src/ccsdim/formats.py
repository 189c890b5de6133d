"""Reading and writing graphs: JSON, edge list, graph6, DIMACS."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

import networkx as nx

from .ccs import CcsGraph
from .graph import Graph, GraphError, build_graph

FORMATS = ("json", "edgelist", "graph6", "dimacs")

AnyGraph = Union[Graph, CcsGraph]


class FormatError(GraphError):
    pass


def _plain(g: AnyGraph) -> Graph:
    return g.graph if isinstance(g, CcsGraph) else g


def to_json(g: AnyGraph) -> str:
    if isinstance(g, CcsGraph):
        doc = g.to_dict()
    else:
        doc = {"vertex_count": g.vertex_count, "edges": [list(e) for e in g.edges]}
    return json.dumps(doc) + "\n"


def from_json(text: str) -> AnyGraph:
    try:
        doc = json.loads(text)
        if "cubes" in doc:
            return CcsGraph.from_dict(doc)
        return build_graph(doc["vertex_count"], doc["edges"])
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise FormatError(f"bad JSON graph: {exc}") from exc


def to_edgelist(g: AnyGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in _plain(g).edges)


def from_edgelist(text: str) -> Graph:
    """``u v`` per line, 0-based; blank lines and ``#`` comments are skipped.

    The vertex count is one more than the largest id seen, so isolated
    trailing vertices are not representable.
    """
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex id in {line!r}") from None
    n = 1 + max((max(e) for e in edges), default=-1)
    return build_graph(n, edges)


def to_graph6(g: AnyGraph) -> str:
    g = _plain(g)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.vertex_count))
    nxg.add_edges_from(g.edges)
    return nx.to_graph6_bytes(nxg, nodes=list(range(g.vertex_count)), header=False).decode("ascii")


def from_graph6(text: str) -> Graph:
    data = text.strip().encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    try:
        nxg = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError) as exc:
        raise FormatError(f"bad graph6 data: {exc}") from exc
    return build_graph(nxg.number_of_nodes(), nxg.edges())


def to_dimacs(g: AnyGraph) -> str:
    g = _plain(g)
    lines = [f"p edge {g.vertex_count} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                n = int(parts[2])
            elif parts[0] == "e":
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
        except (IndexError, ValueError):
            raise FormatError(f"line {lineno}: malformed {line!r}") from None
    if n is None:
        raise FormatError("missing 'p edge' header")
    return build_graph(n, edges)


_WRITERS = {"json": to_json, "edgelist": to_edgelist, "graph6": to_graph6, "dimacs": to_dimacs}
_READERS = {"json": from_json, "edgelist": from_edgelist, "graph6": from_graph6, "dimacs": from_dimacs}
_SUFFIX = {".json": "json", ".g6": "graph6", ".graph6": "graph6", ".dimacs": "dimacs", ".col": "dimacs"}


def dumps(g: AnyGraph, fmt: str) -> str:
    if fmt not in _WRITERS:
        raise FormatError(f"unknown format {fmt!r}")
    return _WRITERS[fmt](g)


def loads(text: str, fmt: str) -> AnyGraph:
    if fmt not in _READERS:
        raise FormatError(f"unknown format {fmt!r}")
    return _READERS[fmt](text)


def guess_format(path: str | Path) -> str:
    return _SUFFIX.get(Path(path).suffix.lower(), "edgelist")


def load(path: str | Path, fmt: str | None = None) -> AnyGraph:
    return loads(Path(path).read_text(), fmt or guess_format(path))
