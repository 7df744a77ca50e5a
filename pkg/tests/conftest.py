"""Shared fixtures: the fixed-seed random graph corpus used across test modules."""

from __future__ import annotations

import numpy as np
import pytest

from gengraph.graphs import SimpleGraph, bfs_from, random_graph

# Fixed seed so the corpus is reproducible run to run.
CORPUS_SEED = 1377


def build_corpus() -> list[SimpleGraph]:
    """Erdos-Renyi draws on 4 to 12 vertices; edgeless draws are discarded."""
    rng = np.random.default_rng(CORPUS_SEED)
    graphs = []
    for nv in range(4, 13):
        for p in (0.2, 0.35, 0.5, 0.65, 0.8):
            for _ in range(6):
                g = random_graph(nv, p, rng)
                if g.edge_count > 0:
                    graphs.append(g)
    return graphs


def is_connected(g: SimpleGraph) -> bool:
    if g.vertex_count == 0:
        return True
    return not (bfs_from(g, 0) == -1).any()


@pytest.fixture(scope="session")
def corpus() -> list[SimpleGraph]:
    return build_corpus()


@pytest.fixture(scope="session")
def connected_corpus(corpus) -> list[SimpleGraph]:
    return [g for g in corpus if is_connected(g)]
