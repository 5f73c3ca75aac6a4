"""Commutation graphs: vertices are group generators, edges mark commuting pairs."""

from __future__ import annotations

import re

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class Graph:
    """Finite simple graph with ordered, named vertices.

    The declaration order of the vertices is the total order used by every
    canonical form and tie-break downstream.  Instances are immutable and
    hashable; equal vertex lists and edge sets compare equal.
    """

    __slots__ = ("vertices", "edges", "_index", "_nbrs", "_hash")

    def __init__(self, vertices, edges=()):
        vertices = tuple(vertices)
        index = {}
        for v in vertices:
            if not isinstance(v, str) or not _NAME_RE.match(v):
                raise ValueError(f"invalid vertex name {v!r} (need nonempty [A-Za-z0-9_])")
            if v in index:
                raise ValueError(f"duplicate vertex name {v!r}")
            index[v] = len(index)
        nbrs = {v: set() for v in vertices}
        pairs = set()
        for edge in edges:
            u, v = edge
            if u not in index:
                raise ValueError(f"edge endpoint {u!r} is not a declared vertex")
            if v not in index:
                raise ValueError(f"edge endpoint {v!r} is not a declared vertex")
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if index[u] > index[v]:
                u, v = v, u
            pairs.add((u, v))
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.vertices = vertices
        self.edges = frozenset(pairs)
        self._index = index
        self._nbrs = {v: frozenset(s) for v, s in nbrs.items()}
        self._hash = hash((vertices, self.edges))

    def index(self, v):
        """Position of vertex v in the declaration order."""
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def are_adjacent(self, u, v):
        """True iff u and v are joined by an edge (i.e. commute); false when u == v."""
        if u not in self._index:
            raise ValueError(f"unknown vertex {u!r}")
        if v not in self._index:
            raise ValueError(f"unknown vertex {v!r}")
        return v in self._nbrs[u]

    def is_complete(self):
        """True iff every pair of distinct vertices is joined by an edge."""
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph({list(self.vertices)!r}, {sorted(self.edges)!r})"


def parse_graph(text):
    """Parse the line-based graph format.

        vertices: a b c
        edges: a-b b-c

    The edges line may be empty or omitted; blank lines are skipped; any
    other line is an error.
    """
    vertices = None
    edges = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise ValueError(f"line {lineno}: duplicate vertices line")
            vertices = line[len("vertices:"):].split()
        elif line.startswith("edges:"):
            if edges is not None:
                raise ValueError(f"line {lineno}: duplicate edges line")
            edges = []
            for token in line[len("edges:"):].split():
                ends = token.split("-")
                if len(ends) != 2:
                    raise ValueError(f"line {lineno}: bad edge token {token!r}")
                edges.append((ends[0], ends[1]))
        else:
            raise ValueError(f"line {lineno}: unknown line {raw!r}")
    if vertices is None:
        raise ValueError("missing vertices line")
    return Graph(vertices, edges or ())


def load_graph(path):
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle.read())
