from functools import lru_cache

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from eccentricity.generators import gen_random_connected

PROPERTY_SETTINGS = settings(
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

SEEDS = st.integers(min_value=0, max_value=2**32 - 1)
SMALL_N = st.integers(min_value=1, max_value=10)
DENSITY = st.sampled_from([0.1, 0.2, 0.3, 0.5, 0.8])

CORPUS_SIZE = 500
DENSITIES = (0.15, 0.25, 0.35, 0.5, 0.7)


def path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def to_networkx(g):
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edge_list())
    return graph


def corpus_parameters(size=CORPUS_SIZE):
    """Seeded (n, p, seed) triples with 2 <= n <= 10."""
    return [(2 + seed % 9, DENSITIES[seed % len(DENSITIES)], seed) for seed in range(size)]


@lru_cache(maxsize=None)
def corpus(size=CORPUS_SIZE):
    return tuple(gen_random_connected(n, p, seed) for n, p, seed in corpus_parameters(size))
