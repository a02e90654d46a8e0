"""
Minimum eccentricity shortest paths: the linear-time recursive
3-approximation and the exponential exact oracles used to certify it.
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from .conf import resolve
from .exceptions import InstanceTooLargeError, PreconditionError
from .graph_core import (
    Path,
    bfs,
    distance_matrix,
    extract_shortest_path,
    iter_shortest_paths,
    matrix_eccentricity,
    multi_source_bfs,
    take_capped,
)
from .search import spread_pair

logger = logging.getLogger(__name__)


@dataclass
class ApproxState:
    best_ecc: int
    best_path: Path = None
    calls: int = 0
    improvements: list = field(default_factory=list)


@dataclass(frozen=True)
class Approx3kResult:
    path: Path
    ecc: int
    pair: tuple
    calls: int
    improvements: tuple


@dataclass(frozen=True)
class MespResult:
    k: int
    path: Path
    pairs_scanned: int
    paths_enumerated: int


def expected_calls(limit):
    return 2 ** (limit + 1) - 1


def refuse_large(g, max_n):
    limit = resolve(max_n, "MESP_EXACT_MAX_N")
    if g.n > limit:
        logger.warning(f"refusing exact computation on {g.n} vertices (limit {limit})")
        raise InstanceTooLargeError(g.n, limit)
    return limit


class Algorithm3k:
    """
    Recursive refinement from a spread pair.

    Each step takes the BFS-tree path Q between x and y, finds the vertex z
    farthest from Q, keeps Q if it beats the best eccentricity so far, and
    recurses on (x, z) and (y, z) until the step limit. Scans of a repeated
    (x, y) pair are memoised; every step is still performed and counted.
    """

    def __init__(self, g, limit=None):
        self.graph = g
        self.limit = resolve(limit, "MESP_RECURSION_LIMIT")
        self._layers = {}
        self._scans = {}

    def _scan(self, x, y):
        key = (x, y)
        if key not in self._scans:
            if x not in self._layers:
                self._layers[x] = bfs(self.graph, x)
            path = extract_shortest_path(self.graph, self._layers[x], y)
            near = multi_source_bfs(self.graph, path.vertices)
            z = int(np.argmax(near))
            self._scans[key] = (path, z, int(near[z]))
        return self._scans[key]

    def step(self, x, y, step, state):
        if not 0 <= step <= self.limit:
            raise PreconditionError(f"step {step} is outside 0..{self.limit}")
        state.calls += 1
        path, z, reach = self._scan(x, y)
        previous = state.best_ecc
        if reach < state.best_ecc:
            state.best_path, state.best_ecc = path, reach
            state.improvements.append((step, x, y, reach))
            logger.debug(f"step {step} ({x}, {y}): best eccentricity now {reach}")
        assert state.best_ecc <= previous
        if step < self.limit:
            self.step(x, z, step + 1, state)
            self.step(y, z, step + 1, state)
        return state

    def run(self, r=0):
        x, y = spread_pair(self.graph, r)
        state = self.step(x, y, 0, ApproxState(best_ecc=self.graph.n))
        assert state.calls == expected_calls(self.limit)
        logger.debug(f"approximation from spread pair ({x}, {y}): ecc {state.best_ecc}")
        return Approx3kResult(
            path=state.best_path,
            ecc=state.best_ecc,
            pair=(x, y),
            calls=state.calls,
            improvements=tuple(state.improvements),
        )


def algorithm3k(g, r=0, limit=None):
    return Algorithm3k(g, limit).run(r)


def algorithm3k_step(g, x, y, step, state, limit=None):
    return Algorithm3k(g, limit).step(x, y, step, state)


def enumerate_shortest_paths(g, u, v, cap=None):
    cap = resolve(cap, "MESP_PATH_CAP")
    if cap < 1:
        raise PreconditionError("the path cap must be at least 1")
    dist_u, dist_v = bfs(g, u).dist, bfs(g, v).dist
    walks = take_capped(iter_shortest_paths(g, u, v, dist_u, dist_v), cap, (u, v))
    return [Path(walk, shortest=True) for walk in walks]


def exact_mesp(g, path_cap=None, max_n=None):
    refuse_large(g, max_n)
    cap = resolve(path_cap, "MESP_PATH_CAP")
    matrix = distance_matrix(g)

    best = None
    pairs = paths = 0
    for u in range(g.n):
        for v in range(u, g.n):
            pairs += 1
            for walk in take_capped(iter_shortest_paths(g, u, v, matrix[u], matrix[v]), cap, (u, v)):
                paths += 1
                candidate = (matrix_eccentricity(matrix, walk).value, walk)
                if best is None or candidate < best:
                    best = candidate

    k, walk = best
    logger.info(f"exact MESP on {g.n} vertices: k={k} ({paths} shortest paths over {pairs} pairs)")
    return MespResult(k=k, path=Path(walk, shortest=True), pairs_scanned=pairs, paths_enumerated=paths)


def adversarial_algorithm3k(g, cap=None, max_n=None, limit=None):
    """
    Worst final eccentricity the recursive approximation can end with when
    every free choice (root, spread pair, path Q, farthest z) goes against it.
    """
    refuse_large(g, max_n)
    cap = resolve(cap, "MESP_PATH_CAP")
    limit = resolve(limit, "MESP_RECURSION_LIMIT")
    matrix = distance_matrix(g)
    choices = {}
    memo = {}

    def options(a, b):
        key = (min(a, b), max(a, b))
        if key not in choices:
            found = set()
            walks = take_capped(iter_shortest_paths(g, key[0], key[1], matrix[key[0]], matrix[key[1]]), cap, key)
            for walk in walks:
                near = matrix[list(walk)].min(axis=0)
                reach = int(near.max())
                found.add((reach, tuple(np.flatnonzero(near == reach).tolist())))
            choices[key] = sorted(found, reverse=True)
        return choices[key]

    # The final best eccentricity of a subtree is the smallest reach seen in it,
    # so the adversary maximises the min over the node and both children.
    def worst(a, b, step):
        key = (min(a, b), max(a, b), step)
        if key not in memo:
            value = -1
            for reach, far in options(a, b):
                if reach <= value:
                    break
                if step >= limit:
                    value = reach
                    continue
                for z in far:
                    value = max(value, min(reach, worst(a, z, step + 1), worst(b, z, step + 1)))
                    if value == reach:
                        break
            memo[key] = value
        return memo[key]

    starts = set()
    for r in range(g.n):
        row = matrix[r]
        for x in np.flatnonzero(row == row.max()).tolist():
            far_x = matrix[x]
            for y in np.flatnonzero(far_x == far_x.max()).tolist():
                starts.add((x, y))

    result = min(g.n, max(worst(x, y, 0) for x, y in sorted(starts)))
    logger.info(f"adversarial approximation on {g.n} vertices: worst ecc {result}")
    return result
