"""Resolving sets and metric dimension: exhaustive search and closed form.

A landmark list W resolves a connected graph when the distance vectors to W
are pairwise distinct. The exhaustive search enumerates subsets in ascending
size and lexicographic order, so the reported basis is the lexicographically
least one of minimum size. The closed form for generator graphs is n-1 when
every non-identity element generates (prime order) and n-2 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

import numpy as np

from gengraph.cyclic import totient
from gengraph.generator_graph import GeneratorGraph, build_generator_graph
from gengraph.graphs import SimpleGraph, UNREACHABLE, bfs_distances, bfs_from

# Exhaustive search enumerates at most 2^cap subsets.
DEFAULT_EXACT_SEARCH_CAP = 16


@dataclass(frozen=True)
class ResolvingSetResult:
    """Representations of every vertex relative to a landmark list."""

    landmarks: tuple[int, ...]
    representations: dict[int, tuple[int, ...]]
    resolves: bool
    collision: tuple[int, int] | None


class MetricDimensionResult(NamedTuple):
    dimension: int
    basis: tuple[int, ...]


def _require_connected(g: SimpleGraph) -> None:
    if g.vertex_count == 0:
        return
    if (bfs_from(g, 0) == UNREACHABLE).any():
        raise ValueError("resolving-set machinery requires a connected graph")


def _check_landmarks(g: SimpleGraph, landmarks: Sequence[int]) -> tuple[int, ...]:
    seen = set()
    for w in landmarks:
        g._check_vertex(w)
        if w in seen:
            raise ValueError(f"duplicate landmark {w}")
        seen.add(w)
    return tuple(landmarks)


def representation(g: SimpleGraph, u: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    """Distance vector from u to the landmarks, in landmark order."""
    _require_connected(g)
    g._check_vertex(u)
    lms = _check_landmarks(g, landmarks)
    dist = bfs_from(g, u)
    return tuple(int(dist[w]) for w in lms)


def is_resolving(g: SimpleGraph, landmarks: Sequence[int]) -> ResolvingSetResult:
    """Check whether the landmark list resolves g; report the first collision.

    The collision, when present, is the earliest vertex pair (by vertex
    order) sharing a representation.
    """
    _require_connected(g)
    lms = _check_landmarks(g, landmarks)
    rows = bfs_distances(g).entries.tolist()
    representations: dict[int, tuple[int, ...]] = {}
    first_seen: dict[tuple[int, ...], int] = {}
    collision: tuple[int, int] | None = None
    for u in range(g.vertex_count):
        row = rows[u]
        vec = tuple(row[w] for w in lms)
        representations[u] = vec
        if collision is None:
            if vec in first_seen:
                collision = (first_seen[vec], u)
            else:
                first_seen[vec] = u
    return ResolvingSetResult(
        landmarks=lms,
        representations=representations,
        resolves=collision is None,
        collision=collision,
    )


def _subset_resolves(rows: list[list[int]], subset: tuple[int, ...]) -> bool:
    seen = set()
    for row in rows:
        vec = tuple(row[w] for w in subset)
        if vec in seen:
            return False
        seen.add(vec)
    return True


def metric_dimension_bruteforce(
    g: SimpleGraph, cap: int = DEFAULT_EXACT_SEARCH_CAP
) -> MetricDimensionResult:
    """Minimum resolving-set size by ascending-size exhaustive subset search.

    Deterministic: returns the lexicographically least basis of minimum size.
    Rejects instances above the cap instead of silently running forever.
    """
    n = g.vertex_count
    if n < 2:
        raise ValueError(f"metric dimension needs at least 2 vertices, got {n}")
    if n > cap:
        raise ValueError(f"instance too large for exact search (n={n}, cap={cap})")
    _require_connected(g)
    rows = bfs_distances(g).entries.tolist()
    for k in range(1, n):
        for subset in combinations(range(n), k):
            if _subset_resolves(rows, subset):
                return MetricDimensionResult(dimension=k, basis=subset)
    # all vertices but one always resolve a connected graph on >= 2 vertices
    raise AssertionError("exhaustive search found no resolving set")


def metric_dimension_formula(n: int) -> int:
    """Closed form for generator graphs: n-1 when n = totient(n)+1, else n-2."""
    if n <= 1:
        raise ValueError(f"group order must be at least 2 (trivial group excluded), got {n}")
    if n == totient(n) + 1:
        return n - 1
    return n - 2


def constructive_resolving_set(gg: GeneratorGraph) -> tuple[int, ...]:
    """A resolving set matching the closed form, built without search.

    Drops the first generator vertex and the first non-generator vertex when
    both classes are present; with a single non-generator it is the generator
    block itself. Size equals metric_dimension_formula(n) in both cases.
    """
    n = gg.group.order
    s = gg.group.generator_count
    if n - s == 1:
        return tuple(range(s))
    dropped = {0, s}
    return tuple(v for v in range(n) if v not in dropped)


def deficient_sets(gg: GeneratorGraph) -> list[tuple[int, ...]]:
    """Landmark sets one vertex short of the constructive set; none resolves.

    Each drops a third vertex, either another generator or another
    non-generator, leaving an indistinguishable twin pair. Requires at least
    two vertices in each class.
    """
    n = gg.group.order
    s = gg.group.generator_count
    if s < 2 or n - s < 2:
        raise ValueError("deficient sets need at least two generators and two non-generators")
    sets = []
    for extra in range(1, s):
        dropped = {0, s, extra}
        sets.append(tuple(v for v in range(n) if v not in dropped))
    for extra in range(s + 1, n):
        dropped = {0, s, extra}
        sets.append(tuple(v for v in range(n) if v not in dropped))
    return sets


def check_single_nongenerator_dimension(n: int) -> bool:
    """With exactly one non-generator: S resolves and no (n-2)-subset does.

    Exhaustive over all (n-2)-subsets. Raises ValueError when Z_n has more
    than one non-generator.
    """
    gg = build_generator_graph(n)
    if gg.group.order - gg.group.generator_count != 1:
        raise ValueError(f"Z_{n} does not have exactly one non-generator")
    g = gg.graph
    rows = bfs_distances(g).entries.tolist()
    if not _subset_resolves(rows, tuple(gg.generator_vertices)):
        return False
    for subset in combinations(range(n), n - 2):
        if _subset_resolves(rows, subset):
            return False
    return True


def twin_classes(g: SimpleGraph, distances=None) -> list[list[int]]:
    """Partition vertices into classes with identical distance rows off-diagonal.

    Two vertices are equivalent when their distance rows agree everywhere
    except possibly at the two vertices themselves. Any resolving set must
    contain all but one vertex of each class.
    """
    dm = bfs_distances(g) if distances is None else distances
    entries = dm.entries
    unassigned = list(range(g.vertex_count))
    classes: list[list[int]] = []
    while unassigned:
        u = unassigned.pop(0)
        members = [u]
        rest = []
        for v in unassigned:
            differing = np.nonzero(entries[u] != entries[v])[0]
            if set(differing.tolist()) <= {u, v}:
                members.append(v)
            else:
                rest.append(v)
        unassigned = rest
        classes.append(members)
    return classes


def twin_lower_bound(g: SimpleGraph, distances=None) -> int:
    """Metric-dimension lower bound: vertex count minus number of twin classes."""
    return g.vertex_count - len(twin_classes(g, distances))
