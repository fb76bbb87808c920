"""Text serialization of graphs.

Format: optional comment lines starting with ``#``, one header line ``n m``,
then exactly m lines ``u v`` with u < v in ascending lexicographic order.
ASCII, LF line endings.  Writing a graph read from a canonical file
reproduces it byte for byte.
"""

from __future__ import annotations

import io
from pathlib import Path

from .errors import FormatError
from .graph import Graph, from_edge_list


def read_graph_text(text: str) -> Graph:
    header = None
    edges = []
    prev = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected two fields, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer field in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise FormatError("header counts must be nonnegative", lineno)
            header = (a, b)
            continue
        n, m = header
        if len(edges) >= m:
            raise FormatError(f"more than {m} edge lines", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise FormatError(f"vertex id out of range [0, {n})", lineno)
        if a == b:
            raise FormatError(f"self-loop ({a}, {b})", lineno)
        if a > b:
            raise FormatError(f"edge ({a}, {b}) must be written with u < v", lineno)
        if prev is not None and (a, b) <= prev:
            raise FormatError(
                f"edge ({a}, {b}) out of order after {prev}", lineno
            )
        prev = (a, b)
        edges.append((a, b))
    if header is None:
        raise FormatError("missing header line")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def write_graph_text(g: Graph) -> str:
    buf = io.StringIO()
    buf.write(f"{g.n} {g.m}\n")
    for u, v in g.edges():
        buf.write(f"{u} {v}\n")
    return buf.getvalue()


def read_graph(path) -> Graph:
    return read_graph_text(Path(path).read_text(encoding="ascii"))


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(write_graph_text(g), encoding="ascii", newline="\n")
