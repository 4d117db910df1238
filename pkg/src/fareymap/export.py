"""Deterministic graph exports: DOT, GraphML, JSON and CSV.

Vertices are labelled ``"a/c"`` with the canonical representative. Edges are
unordered pairs, written with the smaller vertex first and sorted.

JSON layout::

    {"level": n,
     "statistics": {"darts", "edges", "faces", "vertices", "valency", "genus"},
     "vertices": ["1/0", ...],
     "edges": [["0/1", "1/0"], ...],
     "rotations": {"1/0": ["0/1", "1/1", ...], ...}}

``rotations`` lists each vertex's neighbours in the map's cyclic order.
"""

import csv
import io
import json
from xml.sax.saxutils import quoteattr

from .errors import UnsupportedFormat
from .map_builder import build_map, underlying_graph
from .psl2 import DEFAULT_CAP

__all__ = ["FORMATS", "export_graph", "export_map", "graph_from_json"]

FORMATS = ("dot", "graphml", "json", "csv")


def _labelled(m):
    g = underlying_graph(m)
    labels = [str(v) for v in g.vertices]
    edges = [(labels[i], labels[j]) for i, j in sorted(g.edges(), key=lambda e: (g.vertices[e[0]], g.vertices[e[1]]))]
    return labels, edges


def _dot(m):
    labels, edges = _labelled(m)
    lines = [f"graph M3_{m.n} {{"]
    lines += [f'  "{v}";' for v in labels]
    lines += [f'  "{u}" -- "{v}";' for u, v in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _graphml(m):
    labels, edges = _labelled(m)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="label" for="node" attr.name="label" attr.type="string"/>',
        f'  <graph id="M3_{m.n}" edgedefault="undirected">',
    ]
    for v in labels:
        out.append(f"    <node id={quoteattr(v)}><data key=\"label\">{v}</data></node>")
    for u, v in edges:
        out.append(f"    <edge source={quoteattr(u)} target={quoteattr(v)}/>")
    out += ["  </graph>", "</graphml>"]
    return "\n".join(out) + "\n"


def _json(m):
    labels, edges = _labelled(m)
    doc = {
        "level": m.n,
        "statistics": m.statistics().as_dict(),
        "vertices": labels,
        "edges": [list(e) for e in edges],
        "rotations": {str(v): [str(w) for w in m.rotation(v)] for v in m.vertices},
    }
    return json.dumps(doc, indent=2) + "\n"


def _csv(m):
    _, edges = _labelled(m)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["u", "v"])
    writer.writerows(edges)
    return buf.getvalue()


_WRITERS = {"dot": _dot, "graphml": _graphml, "json": _json, "csv": _csv}


def export_map(m, fmt):
    try:
        writer = _WRITERS[fmt]
    except KeyError:
        raise UnsupportedFormat(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}") from None
    return writer(m).encode("utf-8")


def export_graph(n, fmt, cap=DEFAULT_CAP):
    """Serialize the map at level ``n``; returns bytes."""
    if fmt not in _WRITERS:
        raise UnsupportedFormat(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    return export_map(build_map(n, cap), fmt)


def graph_from_json(data):
    """Parse a JSON export back into ``(level, vertices, edge set)``."""
    doc = json.loads(data)
    edges = {frozenset(e) for e in doc["edges"]}
    return doc["level"], list(doc["vertices"]), edges
