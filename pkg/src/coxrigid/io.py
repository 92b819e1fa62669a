"""Reading and writing Coxeter graph files.

Text format, one item per line::

    # comment
    vertex a
    a b 3

Vertices named in edge lines are declared implicitly. A JSON form
``{"vertices": [...], "edges": [["a", "b", 3], ...]}`` is also accepted.
"""
from __future__ import annotations

import json
from pathlib import Path

from .graph import CoxeterGraph, GraphError


class ParseError(GraphError):
    """Graph file error, carrying the offending line number."""

    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_graph(text: str) -> CoxeterGraph:
    """Parse the text or JSON graph format.

    Parameters
    ----------
    text : str
        File content.

    Returns
    -------
    CoxeterGraph
        Vertices in order of first appearance.

    Raises
    ------
    ParseError
        On malformed lines, labels below 2, duplicate edges or self-loops.
    """
    if text.lstrip().startswith("{"):
        return parse_json(text)
    vertices: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str, int]] = []
    pairs: dict[frozenset, int] = {}

    def declare(v):
        if v not in seen:
            seen.add(v)
            vertices.append(v)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise ParseError(lineno, f"expected 'vertex <name>', got {line!r}")
            declare(parts[1])
            continue
        if len(parts) != 3:
            raise ParseError(lineno, f"expected '<a> <b> <label>', got {line!r}")
        a, b, lab = parts
        try:
            m = int(lab)
        except ValueError:
            raise ParseError(lineno, f"label {lab!r} is not an integer") from None
        if m < 2:
            raise ParseError(lineno, f"label {m} is below 2")
        if a == b:
            raise ParseError(lineno, f"self-loop at {a!r}")
        key = frozenset((a, b))
        if key in pairs:
            raise ParseError(lineno, f"duplicate edge {a}-{b} (first on line {pairs[key]})")
        pairs[key] = lineno
        declare(a)
        declare(b)
        edges.append((a, b, m))
    return CoxeterGraph(vertices, edges)


def parse_json(text: str) -> CoxeterGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None
    if not isinstance(data, dict):
        raise ParseError(1, "top-level JSON value must be an object")
    vertices = list(data.get("vertices", []))
    edges = []
    for e in data.get("edges", []):
        if len(e) != 3:
            raise ParseError(1, f"edge entry {e!r} must be [a, b, label]")
        a, b, m = e
        for v in (a, b):
            if v not in vertices:
                vertices.append(v)
        edges.append((a, b, m))
    try:
        return CoxeterGraph(vertices, edges)
    except GraphError as exc:
        raise ParseError(1, str(exc)) from None


def load_graph(path) -> CoxeterGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def render_text(g: CoxeterGraph) -> str:
    """Text format; isolated-vertex-safe since every vertex is declared."""
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"{a} {b} {m}" for a, b, m in g.edges]
    return "\n".join(lines) + "\n"


def to_json_dict(g: CoxeterGraph) -> dict:
    return {"vertices": list(g.vertices), "edges": [[a, b, m] for a, b, m in g.edges]}


def render_json(g: CoxeterGraph) -> str:
    return json.dumps(to_json_dict(g))


def render_dot(g: CoxeterGraph, name: str = "G") -> str:
    """Graphviz DOT; the label of each edge is stored as an edge attribute."""
    out = [f"graph {name} {{"]
    out += [f'  "{v}";' for v in g.vertices]
    out += [f'  "{a}" -- "{b}" [label="{m}"];' for a, b, m in g.edges]
    out.append("}")
    return "\n".join(out) + "\n"
