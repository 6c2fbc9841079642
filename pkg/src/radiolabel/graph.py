"""Simple undirected graphs, path and middle-graph constructors, distances and levels."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

EDGE_VERTEX_RE = re.compile(r"^v'(\d+)$")
ORIGINAL_VERTEX_RE = re.compile(r"^v(\d+)$")


class GraphError(ValueError):
    pass


class DisconnectedGraphError(GraphError):
    """Raised when a distance-based operation meets a disconnected graph."""


@dataclass(frozen=True)
class MiddleVertexName:
    """Name of a vertex of M(P_n): an original path vertex or an edge vertex."""

    kind: str  # "original" | "edge"
    index: int

    def __str__(self) -> str:
        return f"v{self.index}" if self.kind == "original" else f"v'{self.index}"

    @classmethod
    def parse(cls, name: str) -> MiddleVertexName:
        m = EDGE_VERTEX_RE.match(name)
        if m:
            return cls("edge", int(m.group(1)))
        m = ORIGINAL_VERTEX_RE.match(name)
        if m:
            return cls("original", int(m.group(1)))
        raise GraphError(f"not a middle-graph vertex name: {name!r}")


def is_edge_vertex_name(name: str) -> bool:
    return EDGE_VERTEX_RE.match(name) is not None


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..p-1`` with unique display names.

    Build instances with :meth:`from_edges`; the constructor only checks
    consistency of an already-built adjacency.
    """

    names: tuple[str, ...]
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.adjacency):
            raise GraphError("names and adjacency differ in length")
        if len(set(self.names)) != len(self.names):
            raise GraphError("vertex names must be unique")
        for u, nbrs in enumerate(self.adjacency):
            if u in nbrs:
                raise GraphError(f"self-loop at {self.names[u]!r}")
            for v in nbrs:
                if not 0 <= v < len(self.names) or u not in self.adjacency[v]:
                    raise GraphError("adjacency is not symmetric")

    @classmethod
    def from_edges(
        cls, names: Sequence[str], edges: Iterable[tuple[int | str, int | str]]
    ) -> Graph:
        """Build a graph; edge endpoints may be indices or names.

        Parallel edges are rejected rather than merged.
        """
        names = tuple(names)
        lookup = {name: i for i, name in enumerate(names)}
        if len(lookup) != len(names):
            raise GraphError("vertex names must be unique")
        nbrs: list[set[int]] = [set() for _ in names]
        for a, b in edges:
            u = lookup[a] if isinstance(a, str) else a
            v = lookup[b] if isinstance(b, str) else b
            if not (0 <= u < len(names) and 0 <= v < len(names)):
                raise GraphError(f"edge ({a}, {b}) references an unknown vertex")
            if u == v:
                raise GraphError(f"self-loop at {names[u]!r}")
            if v in nbrs[u]:
                raise GraphError(f"parallel edge {names[u]}-{names[v]}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(names, tuple(frozenset(s) for s in nbrs))

    @property
    def p(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def is_connected(self) -> bool:
        if self.p == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.p


def path_graph(n: int) -> Graph:
    """P_n on vertices v1..vn with edges v_i v_{i+1}."""
    if n < 1:
        raise GraphError(f"path needs at least one vertex, got n={n}")
    return Graph.from_edges([f"v{i}" for i in range(1, n + 1)], [(i, i + 1) for i in range(n - 1)])


def middle_graph(g: Graph) -> Graph:
    """Middle graph M(G) on V(G) followed by E(G).

    The j-th edge of ``g`` (in :meth:`Graph.edges` order, 1-based) becomes the
    vertex ``v'j``; for ``path_graph(n)`` this makes edge ``v_i v_{i+1}`` into
    ``v'i``.
    """
    n = g.p
    edges = g.edges()
    names = list(g.names) + [f"v'{j}" for j in range(1, len(edges) + 1)]
    new_edges: list[tuple[int, int]] = []
    incident: list[list[int]] = [[] for _ in range(n)]
    for j, (a, b) in enumerate(edges):
        ev = n + j
        new_edges += [(a, ev), (b, ev)]
        incident[a].append(ev)
        incident[b].append(ev)
    for evs in incident:
        for x in range(len(evs)):
            for y in range(x + 1, len(evs)):
                new_edges.append((evs[x], evs[y]))
    try:
        return Graph.from_edges(names, new_edges)
    except GraphError as exc:
        raise GraphError(f"cannot name edge vertices of M(G): {exc}") from None


def mpn(n: int) -> Graph:
    """Shorthand for M(P_n)."""
    return middle_graph(path_graph(n))


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    matrix: np.ndarray
    diameter: int

    def __call__(self, u: int, v: int) -> int:
        return int(self.matrix[u, v])

    @property
    def p(self) -> int:
        return self.matrix.shape[0]

    def eccentricities(self) -> np.ndarray:
        return self.matrix.max(axis=1)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Hop distances between every pair of vertices (BFS per source)."""
    if g.p == 0:
        raise GraphError("empty graph")
    rows, cols = [], []
    for u, nbrs in enumerate(g.adjacency):
        for v in nbrs:
            rows.append(u)
            cols.append(v)
    adj = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(g.p, g.p))
    dist = shortest_path(adj, method="D", directed=False, unweighted=True)
    if np.isinf(dist).any():
        raise DisconnectedGraphError("graph is disconnected; distances are not all finite")
    matrix = dist.astype(np.int64)
    matrix.setflags(write=False)
    return DistanceMatrix(matrix, int(matrix.max()))


def center(g: Graph, dist: DistanceMatrix) -> list[int]:
    """Vertices of minimum eccentricity, ascending."""
    ecc = dist.eccentricities()
    return [int(u) for u in np.flatnonzero(ecc == ecc.min())]


@dataclass(frozen=True, eq=False)
class LevelMap:
    levels: np.ndarray
    center_vertices: tuple[int, ...]

    def __getitem__(self, u: int) -> int:
        return int(self.levels[u])

    @property
    def total(self) -> int:
        return int(self.levels.sum())

    @property
    def max_level(self) -> int:
        return int(self.levels.max())


def level_map(g: Graph, dist: DistanceMatrix) -> LevelMap:
    """Distance from each vertex to the nearest center vertex."""
    c = center(g, dist)
    levels = dist.matrix[:, c].min(axis=1)
    levels.setflags(write=False)
    return LevelMap(levels, tuple(c))
