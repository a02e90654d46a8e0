"""
Double-BFS sweeps and the interval property of shortest paths near a
minimum-eccentricity path.
"""
import logging
from dataclasses import dataclass

import numpy as np

from .conf import resolve
from .exceptions import PreconditionError
from .graph_core import (
    EccReport,
    Path,
    bfs,
    distance_matrix,
    extract_shortest_path,
    farthest_vertex,
    iter_shortest_paths,
    matrix_eccentricity,
    multi_source_bfs,
    path_eccentricity,
    take_capped,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpreadResult:
    start: int
    x: int
    y: int
    path: Path
    ecc: EccReport
    first_sweep: int = 0

    @property
    def spread_distance(self):
        return self.path.length


@dataclass(frozen=True)
class SpreadOutcome:
    x: int
    y: int
    min_ecc: int
    max_ecc: int
    paths: int


@dataclass(frozen=True)
class PathProjection:
    i_min: int
    i_max: int
    k: int


def spread_pair(g, r):
    x = farthest_vertex(g, r)
    return x, farthest_vertex(g, x)


def spread_path(g, r):
    """
    Run the double sweep from r: x is the farthest vertex from r, y the
    farthest from x, and the result path is the BFS-tree x..y path.
    """
    first = bfs(g, r)
    x = int(np.argmax(first.dist))
    second = bfs(g, x)
    y = int(np.argmax(second.dist))
    path = extract_shortest_path(g, second, y)
    ecc = path_eccentricity(g, path)
    logger.debug(f"double sweep from {r}: x={x} y={y} d(x,y)={path.length} ecc={ecc.value}")
    return SpreadResult(r, x, y, path, ecc, first_sweep=int(first.dist[x]))


def _farthest_set(row):
    return np.flatnonzero(row == row.max()).tolist()


def enumerate_spread_outcomes(g, r, cap=None):
    """
    Every outcome a double sweep from r could produce under arbitrary tie
    breaking: each (x, y) pair with the smallest and largest eccentricity over
    all shortest x..y paths. Sorted by (x, y).
    """
    cap = resolve(cap, "MESP_SPREAD_CAP")
    if cap < 1:
        raise PreconditionError("the path cap must be at least 1")
    if not 0 <= r < g.n:
        raise PreconditionError(f"vertex {r} is outside 0..{g.n - 1}")

    matrix = distance_matrix(g)
    outcomes = []
    for x in _farthest_set(matrix[r]):
        for y in _farthest_set(matrix[x]):
            walks = take_capped(iter_shortest_paths(g, x, y, matrix[x], matrix[y]), cap, (x, y))
            eccs = [matrix_eccentricity(matrix, walk).value for walk in walks]
            outcomes.append(SpreadOutcome(x, y, min(eccs), max(eccs), len(walks)))
    outcomes.sort(key=lambda outcome: (outcome.x, outcome.y))
    logger.debug(f"{len(outcomes)} spread outcomes from root {r}")
    return outcomes


def _distances_to(g, vertices, matrix=None):
    if matrix is not None:
        return matrix[list(vertices)].min(axis=0)
    return multi_source_bfs(g, vertices)


def _interval(reference, k, near):
    within = np.flatnonzero(near[list(reference.vertices)] <= k)
    if within.size == 0:
        raise PreconditionError(f"no vertex of the reference path lies within {k} of the query")
    return PathProjection(int(within[0]), int(within[-1]), k)


def path_projection(g, reference, k, q, matrix=None):
    if not reference.shortest:
        raise PreconditionError("the reference path must be a shortest path")
    if not q.shortest:
        raise PreconditionError("the query path must be a shortest path")
    return _interval(reference, k, _distances_to(g, q.vertices, matrix))


def pair_interval(g, reference, k, x, y, matrix=None):
    """Reference indices within k of the endpoint set {x, y}."""
    if not reference.shortest:
        raise PreconditionError("the reference path must be a shortest path")
    return _interval(reference, k, _distances_to(g, (x, y), matrix))


def check_lemma1(g, reference, k, q, matrix=None):
    """
    Interval property of a shortest path q against a reference shortest path
    of eccentricity at most k.

    With [i_min, i_max] the reference indices within k of q, every reference
    vertex inside the interval is within 2k of q, and every vertex within k of
    that stretch of the reference is within 3k of q. A False return on valid
    input means an implementation bug.
    """
    if not reference.shortest:
        raise PreconditionError("the reference path must be a shortest path")
    if not q.shortest:
        raise PreconditionError("the query path must be a shortest path")
    if matrix is not None:
        eccentricity = matrix_eccentricity(matrix, reference.vertices).value
    else:
        eccentricity = path_eccentricity(g, reference).value
    if eccentricity > k:
        raise PreconditionError(f"reference eccentricity {eccentricity} exceeds k={k}")

    to_q = _distances_to(g, q.vertices, matrix)
    projection = _interval(reference, k, to_q)
    stretch = reference.vertices[projection.i_min:projection.i_max + 1]
    if (to_q[list(stretch)] > 2 * k).any():
        return False
    near_stretch = _distances_to(g, stretch, matrix) <= k
    return bool((to_q[near_stretch] <= 3 * k).all())
