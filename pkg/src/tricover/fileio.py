"""Edge-list text format and JSON conversion for graphs and 3-graphs.

The text format, shared by every tool in the package::

    # comment lines start with '#'
    HG <k> <n> <edge_count>      header: uniformity (2 or 3), vertices, edges
    X <index>                    optional, 3-graphs only: distinguished vertex
    CLASS <vertex> <label>       optional, repeated: vertex class labels
    a b c                        one edge per line, strictly increasing indices

Lines use LF endings.  The writer is canonical (CLASS lines sorted by vertex,
edges in lexicographic order, no comments), so write -> parse -> write is
bit-exact.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .hypergraphs import Graph, TriGraph

GraphLike = Union[Graph, TriGraph]


class FormatError(ValueError):
    """Raised when an edge-list or JSON document does not parse."""


def _check_label(label: str) -> str:
    if not label or any(ch.isspace() for ch in label):
        raise FormatError(f"class label {label!r} must be non-empty and contain no whitespace")
    return label


def write_edge_list(obj: GraphLike) -> str:
    """Canonical edge-list text for a Graph (k=2) or TriGraph (k=3)."""
    if isinstance(obj, TriGraph):
        k, edges = 3, list(obj.edges)
        distinguished = obj.distinguished
    elif isinstance(obj, Graph):
        k, edges = 2, obj.edges()
        distinguished = None
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    lines = [f"HG {k} {obj.n} {len(edges)}"]
    if distinguished is not None:
        lines.append(f"X {distinguished}")
    if obj.class_of:
        for v in sorted(obj.class_of):
            lines.append(f"CLASS {v} {_check_label(obj.class_of[v])}")
    for e in edges:
        lines.append(" ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"bad {what}: {token!r}") from None


def parse_edge_list(text: str) -> GraphLike:
    """Parse the edge-list format; returns a Graph or TriGraph per the header."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty document")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "HG":
        raise FormatError(f"bad header line: {lines[0]!r}")
    k = _parse_int(head[1], "uniformity")
    n = _parse_int(head[2], "vertex count")
    m = _parse_int(head[3], "edge count")
    if k not in (2, 3):
        raise FormatError(f"unsupported uniformity {k}")
    if n < 0 or m < 0:
        raise FormatError("negative counts in header")

    distinguished = None
    class_of: dict[int, str] = {}
    edges: list[tuple[int, ...]] = []
    edges_seen: set[tuple[int, ...]] = set()
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "X":
            if k != 3 or len(parts) != 2:
                raise FormatError(f"bad X line: {ln!r}")
            if distinguished is not None:
                raise FormatError("duplicate X line")
            distinguished = _parse_int(parts[1], "distinguished vertex")
        elif parts[0] == "CLASS":
            if len(parts) != 3:
                raise FormatError(f"bad CLASS line: {ln!r}")
            v = _parse_int(parts[1], "class vertex")
            if v in class_of:
                raise FormatError(f"duplicate CLASS line for vertex {v}")
            class_of[v] = _check_label(parts[2])
        else:
            if len(parts) != k:
                raise FormatError(f"edge line {ln!r}: expected {k} indices")
            e = tuple(_parse_int(p, "vertex index") for p in parts)
            if any(e[i] >= e[i + 1] for i in range(k - 1)):
                raise FormatError(f"edge line {ln!r}: indices must be strictly increasing")
            if e in edges_seen:
                raise FormatError(f"duplicate edge {e}")
            edges_seen.add(e)
            edges.append(e)

    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    try:
        if k == 3:
            return TriGraph(n, edges, distinguished=distinguished, class_of=class_of or None)
        return Graph(n, edges, class_of=class_of or None)  # type: ignore[arg-type]
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def to_json_dict(obj: GraphLike) -> dict:
    """JSON-ready dictionary with a stable schema (keys sorted on dump)."""
    if isinstance(obj, TriGraph):
        k, edges = 3, [list(e) for e in obj.edges]
        distinguished = obj.distinguished
    elif isinstance(obj, Graph):
        k, edges = 2, [list(e) for e in obj.edges()]
        distinguished = None
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    classes = {str(v): lab for v, lab in sorted((obj.class_of or {}).items())}
    return {
        "uniformity": k,
        "n": obj.n,
        "edge_count": len(edges),
        "edges": edges,
        "distinguished": distinguished,
        "classes": classes,
    }


def from_json_dict(doc: dict) -> GraphLike:
    try:
        k = doc["uniformity"]
        n = doc["n"]
        edges = [tuple(e) for e in doc["edges"]]
        classes = {int(v): lab for v, lab in doc.get("classes", {}).items()}
        distinguished = doc.get("distinguished")
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad JSON graph document: {exc}") from None
    try:
        if k == 3:
            return TriGraph(n, edges, distinguished=distinguished, class_of=classes or None)
        if k == 2:
            return Graph(n, edges, class_of=classes or None)  # type: ignore[arg-type]
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    raise FormatError(f"unsupported uniformity {k!r}")


def dumps_json(obj: GraphLike) -> str:
    return json.dumps(to_json_dict(obj), sort_keys=True, indent=2) + "\n"


def parse_any(text: str) -> GraphLike:
    """Parse either format, sniffing JSON by the leading brace."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON: {exc}") from None
        return from_json_dict(doc)
    return parse_edge_list(text)


def load(path: Union[str, Path]) -> GraphLike:
    return parse_any(Path(path).read_text(encoding="utf-8"))


def save(obj: GraphLike, path: Union[str, Path]) -> None:
    Path(path).write_text(write_edge_list(obj), encoding="utf-8", newline="\n")
