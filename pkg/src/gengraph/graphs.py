"""Dense simple-graph substrate: constructors, BFS distances, exports.

Vertices are integer indices 0..n-1. Adjacency is a dense symmetric boolean
matrix, which keeps every brute-force computation directly auditable at the
sizes this project targets (a few thousand vertices at most). All-pairs
distances come from a level-synchronous BFS vectorized over sources; a plain
single-source BFS is kept alongside it so the two can cross-check each other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

# Marker for pairs with no connecting path in DistanceMatrix entries.
UNREACHABLE = -1


class SimpleGraph:
    """Immutable undirected simple graph (no loops, no parallel edges)."""

    __slots__ = ("_adj",)

    def __init__(self, adjacency) -> None:
        adj = np.asarray(adjacency)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be a square matrix, got shape {adj.shape}")
        adj = adj.astype(bool).copy()
        if adj.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        adj.setflags(write=False)
        self._adj = adj

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only (n, n) boolean adjacency matrix."""
        return self._adj

    @property
    def vertex_count(self) -> int:
        return self._adj.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self._adj.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1, dtype=np.int64)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self._adj[v].sum())

    def max_degree(self) -> int:
        if self.vertex_count == 0:
            return 0
        return int(self.degrees().max())

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u, v])

    def neighbors(self, v: int) -> np.ndarray:
        self._check_vertex(v)
        return np.nonzero(self._adj[v])[0]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in sorted order."""
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return zip(us.tolist(), vs.tolist())

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex index {v} out of range [0, {self.vertex_count})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._adj.shape == other._adj.shape and np.array_equal(self._adj, other._adj)

    __hash__ = None  # mutable-by-content semantics; not hashable

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.vertex_count}, m={self.edge_count})"


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; UNREACHABLE (-1) marks disconnected pairs."""

    entries: np.ndarray

    @property
    def vertex_count(self) -> int:
        return self.entries.shape[0]

    @property
    def connected(self) -> bool:
        return not (self.entries == UNREACHABLE).any()

    def distance(self, u: int, v: int) -> int:
        return int(self.entries[u, v])


def complete_graph(n: int) -> SimpleGraph:
    """K_n; n = 0 is the empty graph."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    return SimpleGraph(adj)


def null_graph(n: int) -> SimpleGraph:
    """Edgeless graph on n vertices."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    return SimpleGraph(np.zeros((n, n), dtype=bool))


def cycle_graph(n: int) -> SimpleGraph:
    """The cycle C_n; requires n >= 3."""
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    adj = np.zeros((n, n), dtype=bool)
    for v in range(n):
        adj[v, (v + 1) % n] = True
        adj[(v + 1) % n, v] = True
    return SimpleGraph(adj)


def from_edges(n: int, edges) -> SimpleGraph:
    """Graph on vertices 0..n-1 with the given edge list."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) is not allowed")
        adj[u, v] = True
        adj[v, u] = True
    return SimpleGraph(adj)


def join(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    """Graph join: disjoint union plus every edge between the two sides.

    Vertices of g1 keep their indices; vertices of g2 are shifted up by
    g1.vertex_count.
    """
    n1, n2 = g1.vertex_count, g2.vertex_count
    adj = np.ones((n1 + n2, n1 + n2), dtype=bool)
    adj[:n1, :n1] = g1.adjacency
    adj[n1:, n1:] = g2.adjacency
    return SimpleGraph(adj)


def complement(g: SimpleGraph) -> SimpleGraph:
    adj = ~g.adjacency
    adj = adj.copy()
    np.fill_diagonal(adj, False)
    return SimpleGraph(adj)


def random_graph(n: int, edge_probability: float, rng: np.random.Generator) -> SimpleGraph:
    """Erdos-Renyi style draw: each pair independently with the given probability."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {edge_probability}")
    draws = rng.random((n, n)) < edge_probability
    upper = np.triu(draws, 1)
    return SimpleGraph(upper | upper.T)


def bfs_from(g: SimpleGraph, source: int) -> np.ndarray:
    """Hop counts from one source by queue-based BFS; UNREACHABLE where no path."""
    g._check_vertex(source)
    n = g.vertex_count
    dist = np.full(n, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        for y in np.nonzero(adj[x])[0]:
            if dist[y] == UNREACHABLE:
                dist[y] = dist[x] + 1
                queue.append(int(y))
    return dist


def bfs_distances(g: SimpleGraph) -> DistanceMatrix:
    """All-pairs hop counts by level-synchronous BFS from every source at once.

    Frontier expansion is a boolean matrix product; float32 keeps the row
    counts exact (all values are small non-negative integers).
    """
    n = g.vertex_count
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    if n == 0:
        return DistanceMatrix(entries=dist)
    np.fill_diagonal(dist, 0)
    adj_f = g.adjacency.astype(np.float32)
    visited = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=bool)
    level = 0
    while True:
        if visited.all():
            break
        reached = (frontier.astype(np.float32) @ adj_f) > 0.5
        frontier = reached & ~visited
        if not frontier.any():
            break
        level += 1
        dist[frontier] = level
        visited |= frontier
    entries = dist
    entries.setflags(write=False)
    return DistanceMatrix(entries=entries)


def diameter(g: SimpleGraph) -> int | None:
    """Largest hop count over all pairs; None when the graph is disconnected.

    Graphs with fewer than two vertices have diameter 0.
    """
    if g.vertex_count <= 1:
        return 0
    dm = bfs_distances(g)
    if not dm.connected:
        return None
    return int(dm.entries.max())


def to_edge_list(g: SimpleGraph) -> str:
    """Plain text edge list, one "u v" per line with u < v, sorted."""
    lines = [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


def _dot_value(value) -> str:
    text = str(value)
    if text.replace(".", "", 1).isdigit() or text in ("true", "false"):
        return text
    escaped = text.replace('"', '\\"')
    return f'"{escaped}"'


def to_dot(
    g: SimpleGraph,
    labels: Mapping[int, str] | None = None,
    node_attrs: Mapping[int, Mapping[str, object]] | None = None,
    name: str = "G",
) -> str:
    """DOT rendering with deterministic vertex and edge order."""
    out = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        attrs = {}
        if labels is not None and v in labels:
            attrs["label"] = labels[v]
        if node_attrs is not None and v in node_attrs:
            attrs.update(node_attrs[v])
        if attrs:
            rendered = " ".join(f"{k}={_dot_value(val)}" for k, val in attrs.items())
            out.append(f"  {v} [{rendered}];")
        else:
            out.append(f"  {v};")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
