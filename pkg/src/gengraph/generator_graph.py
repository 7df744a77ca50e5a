"""Generator graph of Z_n: construction, join decomposition, structural checks.

Two elements are adjacent exactly when at least one of them generates the
group. Vertex labeling is fixed: generators first in ascending element order,
then non-generators ascending, so the join decomposition can be asserted as
structural equality rather than up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gengraph.cyclic import CyclicGroupDescriptor, describe_group, is_prime
from gengraph.graphs import SimpleGraph, complete_graph, join, null_graph, to_dot, to_edge_list


@dataclass(frozen=True)
class GeneratorGraph:
    """A generator graph with its group and the element/index correspondence."""

    group: CyclicGroupDescriptor
    graph: SimpleGraph
    element_of: tuple[int, ...]
    index_of: tuple[int, ...]

    @property
    def generator_count(self) -> int:
        return self.group.generator_count

    @property
    def generator_vertices(self) -> range:
        """Vertex indices of generator elements (the first block by labeling)."""
        return range(self.group.generator_count)

    @property
    def non_generator_vertices(self) -> range:
        return range(self.group.generator_count, self.group.order)

    def is_generator_vertex(self, v: int) -> bool:
        return 0 <= v < self.group.generator_count


@dataclass(frozen=True)
class FaithfulnessReport:
    """Outcome of the every-edge closed-neighborhood cover check.

    A graph with no edges is faithful by vacuity; that case is flagged so
    corpora exercising the faithfulness implications can exclude it.
    """

    is_faithful: bool
    witness_edge: tuple[int, int] | None = None
    witness_missing_vertex: int | None = None
    vacuous: bool = False


def build_generator_graph(n: int) -> GeneratorGraph:
    """Build the generator graph of Z_n under the fixed vertex labeling.

    Adjacency comes from the definitional rule (at least one endpoint
    generates); equality with the join of a complete and an edgeless block is
    then verified, not assumed.
    """
    group = describe_group(n)
    gen_set = frozenset(group.generators)
    elements = list(group.generators) + [e for e in range(n) if e not in gen_set]
    generates = np.array([e in gen_set for e in elements], dtype=bool)
    adj = generates[:, None] | generates[None, :]
    np.fill_diagonal(adj, False)
    graph = SimpleGraph(adj)

    s = group.generator_count
    if graph != join(complete_graph(s), null_graph(n - s)):
        raise AssertionError(f"generator graph of Z_{n} does not match its join decomposition")

    index_of = [0] * n
    for i, e in enumerate(elements):
        index_of[e] = i
    return GeneratorGraph(
        group=group,
        graph=graph,
        element_of=tuple(elements),
        index_of=tuple(index_of),
    )


def degree_by_formula(gg: GeneratorGraph, element: int) -> int:
    """Closed-form degree: n-1 for a generator, |S| otherwise."""
    n = gg.group.order
    if not 0 <= element < n:
        raise ValueError(f"element {element} out of range [0, {n})")
    if element in frozenset(gg.group.generators):
        return n - 1
    return gg.group.generator_count


def is_faithful_edge(g: SimpleGraph, x: int, y: int) -> bool:
    """True when the closed neighborhoods of the endpoints cover every vertex."""
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")
    cover = g.adjacency[x] | g.adjacency[y]
    cover = cover.copy()
    cover[x] = True
    cover[y] = True
    return bool(cover.all())


def is_faithful_graph(g: SimpleGraph) -> FaithfulnessReport:
    """Check every edge for the cover property; report a witness on failure.

    The witness is the lexicographically first failing edge together with the
    first vertex outside the union of the endpoint closed neighborhoods.
    """
    n = g.vertex_count
    if g.edge_count == 0:
        return FaithfulnessReport(is_faithful=True, vacuous=True)
    closed = g.adjacency | np.eye(n, dtype=bool)
    uncovered = (~closed).astype(np.float32)
    # counts[x, y] = number of vertices outside N[x] union N[y]
    counts = uncovered @ uncovered.T
    failing = g.adjacency & (counts > 0.5)
    if not failing.any():
        return FaithfulnessReport(is_faithful=True)
    x, y = (int(i) for i in np.argwhere(failing)[0])
    missing = np.nonzero((~closed)[x] & (~closed)[y])[0]
    return FaithfulnessReport(
        is_faithful=False,
        witness_edge=(x, y),
        witness_missing_vertex=int(missing[0]),
    )


def diameter_by_formula(n: int) -> int:
    """Closed-form diameter of the generator graph: 1 for prime n, else 2."""
    if n <= 1:
        raise ValueError(f"group order must be at least 2 (trivial group excluded), got {n}")
    return 1 if is_prime(n) else 2


def check_max_degree_bound(g: SimpleGraph) -> bool:
    """Whether the maximum degree is at least half the vertex count.

    Exact integer comparison (2 * max degree >= n), no floating point.
    """
    return 2 * g.max_degree() >= g.vertex_count


def check_degree_bounds(n: int) -> bool:
    """Every degree of the generator graph of Z_n lies in [2, n-1]; needs n >= 3."""
    if n < 3:
        raise ValueError(f"degree bounds require n >= 3, got {n}")
    degs = build_generator_graph(n).graph.degrees()
    return bool(((degs >= 2) & (degs <= n - 1)).all())


def generator_graph_dot(gg: GeneratorGraph) -> str:
    """DOT export with group-element labels and a generator attribute."""
    labels = {v: str(gg.element_of[v]) for v in range(gg.group.order)}
    attrs = {
        v: {"generator": "true" if gg.is_generator_vertex(v) else "false"}
        for v in range(gg.group.order)
    }
    return to_dot(gg.graph, labels=labels, node_attrs=attrs)


def generator_graph_edge_list(gg: GeneratorGraph) -> str:
    """Edge list of the generator graph under the fixed labeling."""
    return to_edge_list(gg.graph)
