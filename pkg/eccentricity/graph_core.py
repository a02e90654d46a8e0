"""
Graph representation and breadth-first primitives.

Graphs are simple, undirected, connected and immutable. Vertices are the dense
ids 0..n-1 and adjacency is kept in CSR form (``indptr``/``indices``) with every
neighbor list sorted ascending, so a BFS is a handful of array operations per
layer and every tie is broken by the smallest id.
"""
import logging
from dataclasses import dataclass

import numpy as np

from .exceptions import CapExceededError, GraphValidationError, PreconditionError

logger = logging.getLogger(__name__)

UNREACHED = -1


def _frozen(array):
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def m(self):
        return int(self.indices.size // 2)

    def neighbors(self, v):
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u, v):
        row = self.neighbors(u)
        at = int(np.searchsorted(row, v))
        return at < row.size and int(row[at]) == v

    @property
    def adjacency(self):
        return tuple(tuple(self.neighbors(v).tolist()) for v in range(self.n))

    def edge_list(self):
        """Canonical edges: u < v, sorted."""
        owners = np.repeat(np.arange(self.n), np.diff(self.indptr))
        keep = owners < self.indices
        return list(zip(owners[keep].tolist(), self.indices[keep].tolist()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self):
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Path:
    vertices: tuple
    shortest: bool = False

    @property
    def length(self):
        return len(self.vertices) - 1

    @property
    def first(self):
        return self.vertices[0]

    @property
    def last(self):
        return self.vertices[-1]

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True, eq=False)
class BfsLayers:
    source: int
    dist: np.ndarray
    parent: np.ndarray

    def parent_of(self, v):
        p = int(self.parent[v])
        return None if p == UNREACHED else p


@dataclass(frozen=True)
class EccReport:
    value: int
    witness: int


def csr_arrays(n, pairs):
    src = np.concatenate([pairs[:, 0], pairs[:, 1]])
    dst = np.concatenate([pairs[:, 1], pairs[:, 0]])
    order = np.lexsort((dst, src))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, dst[order].astype(np.int64)


def sweep(indptr, indices, n, sources):
    """
    Level-synchronous BFS over CSR arrays.

    Each layer expands the current frontier in queue order, scanning every
    neighbor list ascending; a vertex is claimed by its first discoverer, which
    is exactly what a FIFO-queue BFS would record. Returns (dist, parent) with
    UNREACHED for vertices outside the sources' component.
    """
    dist = np.full(n, UNREACHED, dtype=np.int64)
    parent = np.full(n, UNREACHED, dtype=np.int64)
    frontier = np.asarray(sources, dtype=np.int64)
    dist[frontier] = 0
    level = 0
    while frontier.size:
        starts = indptr[frontier]
        counts = indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        slots = np.repeat(starts - (np.cumsum(counts) - counts), counts) + np.arange(total)
        found = indices[slots]
        owners = np.repeat(frontier, counts)
        fresh = dist[found] == UNREACHED
        if not fresh.any():
            break
        found = found[fresh]
        owners = owners[fresh]
        _, first = np.unique(found, return_index=True)
        first.sort()
        frontier = found[first]
        level += 1
        dist[frontier] = level
        parent[frontier] = owners[first]
    return dist, parent


def build_graph(n, edges):
    if n < 1:
        raise GraphValidationError("a graph needs at least one vertex")
    if isinstance(edges, np.ndarray):
        pairs = edges.astype(np.int64, copy=False).reshape(-1, 2)
    else:
        pairs = np.array(list(edges), dtype=np.int64).reshape(-1, 2)

    outside = ((pairs < 0) | (pairs >= n)).any(axis=1)
    if outside.any():
        u, v = pairs[outside][0].tolist()
        raise GraphValidationError(f"edge ({u}, {v}) uses an id outside 0..{n - 1}")
    loops = pairs[:, 0] == pairs[:, 1]
    if loops.any():
        raise GraphValidationError(f"self-loop on vertex {int(pairs[loops][0, 0])}")

    canon = np.sort(pairs, axis=1)
    if canon.shape[0]:
        canon = np.unique(canon, axis=0)
    indptr, indices = csr_arrays(n, canon)
    graph = Graph(n, _frozen(indptr), _frozen(indices))

    dist, _ = sweep(graph.indptr, graph.indices, n, [0])
    unreached = np.flatnonzero(dist == UNREACHED)
    if unreached.size:
        raise GraphValidationError(
            f"graph is disconnected: vertex {int(unreached[0])} is unreachable from vertex 0"
        )
    return graph


def _check_vertex(g, v):
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} is outside 0..{g.n - 1}")


def bfs(g, source):
    _check_vertex(g, source)
    dist, parent = sweep(g.indptr, g.indices, g.n, [source])
    return BfsLayers(source, _frozen(dist), _frozen(parent))


def multi_source_bfs(g, sources):
    ids = np.unique(np.asarray(list(sources), dtype=np.int64))
    if ids.size == 0:
        raise PreconditionError("multi-source BFS needs at least one source")
    if ids[0] < 0 or ids[-1] >= g.n:
        raise PreconditionError(f"source set has ids outside 0..{g.n - 1}")
    dist, _ = sweep(g.indptr, g.indices, g.n, ids)
    return _frozen(dist)


def distance(g, u, v):
    _check_vertex(g, v)
    return int(bfs(g, u).dist[v])


def distance_matrix(g):
    """All-pairs hop distances, one BFS per source (O(nm))."""
    rows = [sweep(g.indptr, g.indices, g.n, [s])[0] for s in range(g.n)]
    return _frozen(np.vstack(rows))


def farthest_vertex(g, source):
    return int(np.argmax(bfs(g, source).dist))


def extract_shortest_path(g, layers, target):
    if layers.dist.size != g.n:
        raise PreconditionError("BFS layers were computed on a different graph")
    _check_vertex(g, target)
    walk = [target]
    v = layers.parent_of(target)
    while v is not None:
        walk.append(v)
        v = layers.parent_of(v)
    walk.reverse()
    return Path(tuple(walk), shortest=True)


def make_path(g, vertices):
    """Validate a vertex sequence against g and flag whether it is a shortest path."""
    walk = tuple(int(v) for v in vertices)
    if not walk:
        raise PreconditionError("a path needs at least one vertex")
    for v in walk:
        _check_vertex(g, v)
    if len(set(walk)) != len(walk):
        raise PreconditionError(f"path {walk} repeats a vertex")
    for a, b in zip(walk, walk[1:]):
        if not g.has_edge(a, b):
            raise PreconditionError(f"path {walk} uses {a}-{b}, which is not an edge")
    shortest = len(walk) - 1 == distance(g, walk[0], walk[-1])
    return Path(walk, shortest=shortest)


def _vertices_of(p):
    return p.vertices if isinstance(p, Path) else tuple(p)


def path_eccentricity(g, p):
    near = multi_source_bfs(g, _vertices_of(p))
    witness = int(np.argmax(near))
    return EccReport(int(near[witness]), witness)


def matrix_eccentricity(matrix, vertices):
    """Eccentricity of a vertex set read off a precomputed distance matrix."""
    near = matrix[list(vertices)].min(axis=0)
    witness = int(np.argmax(near))
    return EccReport(int(near[witness]), witness)


def is_shortest_path(g, p):
    walk = _vertices_of(p)
    return len(walk) - 1 == distance(g, walk[0], walk[-1])


def covers(g, vertices, k):
    """True when every vertex of g lies within k of the set."""
    return int(multi_source_bfs(g, vertices).max()) <= k


def iter_shortest_paths(g, u, v, dist_u, dist_v):
    """
    Depth-first walk of the shortest-path DAG from u to v.

    Arcs a->b satisfy dist_u[b] = dist_u[a] + 1 and dist_u[b] + dist_v[b] = d(u, v);
    successors are taken in ascending id order, so paths come out in
    lexicographic order. Yields vertex tuples.
    """
    if u == v:
        yield (u,)
        return
    total = int(dist_u[v])

    def successors(a):
        row = g.neighbors(a)
        step = (dist_u[row] == dist_u[a] + 1) & (dist_u[row] + dist_v[row] == total)
        return iter(row[step].tolist())

    walk = [u]
    pending = [successors(u)]
    while pending:
        b = next(pending[-1], None)
        if b is None:
            pending.pop()
            walk.pop()
            continue
        if b == v:
            yield tuple(walk) + (v,)
            continue
        walk.append(b)
        pending.append(successors(b))


def take_capped(paths, cap, pair=None):
    collected = []
    for walk in paths:
        if len(collected) == cap:
            logger.warning(f"shortest-path enumeration for {pair} hit the cap of {cap}")
            raise CapExceededError(cap, len(collected), pair)
        collected.append(walk)
    return collected
