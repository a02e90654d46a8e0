"""
Diameters as paths and the laminarity parameters built on them.

l(G) is the smallest eccentricity of a diameter, s(G) the largest. Both are
computed by enumerating every diameter, so the same size limits as the exact
MESP oracle apply.
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from .conf import resolve
from .exceptions import CapExceededError, PreconditionError
from .graph_core import (
    Path,
    distance_matrix,
    iter_shortest_paths,
    matrix_eccentricity,
    sweep,
)
from .mesp import exact_mesp, refuse_large

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiameterSet:
    diam: int
    pairs: tuple
    paths: tuple


@dataclass(frozen=True)
class LaminarityResult:
    value: int
    witness: Path


@dataclass(frozen=True)
class BoundsReport:
    k: int
    l: int
    s: int
    diam: int
    mesp_path: Path
    checks: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(outcome is not False for outcome in self.checks.values())


def graph_diameter(g):
    """Exact diameter by one BFS per source; the witness is the smallest pair (u, v), u <= v."""
    best, pair = -1, (0, 0)
    for u in range(g.n):
        row, _ = sweep(g.indptr, g.indices, g.n, [u])
        row[:u] = -1
        v = int(np.argmax(row))
        if row[v] > best:
            best, pair = int(row[v]), (u, v)
    return best, pair


def _diameters(g, cap, max_n):
    refuse_large(g, max_n)
    cap = resolve(cap, "MESP_PATH_CAP")
    if cap < 1:
        raise PreconditionError("the path cap must be at least 1")
    matrix = distance_matrix(g)
    diam = int(matrix.max())
    pairs = [tuple(pair) for pair in np.argwhere(np.triu(matrix == diam)).tolist()]

    paths = []
    for u, v in pairs:
        for walk in iter_shortest_paths(g, u, v, matrix[u], matrix[v]):
            if len(paths) == cap:
                logger.warning(f"diameter enumeration hit the cap of {cap}")
                raise CapExceededError(cap, len(paths), (u, v))
            paths.append(Path(walk, shortest=True))
    logger.debug(f"{len(paths)} diameters of length {diam} over {len(pairs)} pairs")
    return DiameterSet(diam, tuple(pairs), tuple(paths)), matrix


def enumerate_diameters(g, cap=None, max_n=None):
    return _diameters(g, cap, max_n)[0]


def _extreme(g, cap, max_n, pick):
    diameters, matrix = _diameters(g, cap, max_n)
    scored = [(matrix_eccentricity(matrix, path.vertices).value, path) for path in diameters.paths]
    target = pick(value for value, _ in scored)
    witness = next(path for value, path in scored if value == target)
    return LaminarityResult(target, witness)


def strong_laminarity(g, cap=None, max_n=None):
    return _extreme(g, cap, max_n, max)


def laminarity(g, cap=None, max_n=None):
    return _extreme(g, cap, max_n, min)


def bounds_report(g, path_cap=None, max_n=None):
    mesp = exact_mesp(g, path_cap=path_cap, max_n=max_n)
    diameters, matrix = _diameters(g, path_cap, max_n)
    eccs = [matrix_eccentricity(matrix, path.vertices).value for path in diameters.paths]
    k, l, s = mesp.k, min(eccs), max(eccs)

    checks = {
        "k_le_l": k <= l,
        "l_le_4k_minus_2": l <= 4 * k - 2 if k >= 1 else None,
        "k_le_s": k <= s,
        "s_le_4k": s <= 4 * k,
    }
    if k == 0:
        checks["zero_cover"] = l == 0 and s == 0
    report = BoundsReport(k=k, l=l, s=s, diam=diameters.diam, mesp_path=mesp.path, checks=checks)
    if not report.passed:
        logger.error(f"laminarity bounds violated on {g.n} vertices: {checks}")
    return report
