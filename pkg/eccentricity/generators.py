"""
Instance generators: the two hand-drawn tightness examples, the G_k, H_k and
J_k families, and seeded random connected graphs for property sweeps.

Named instances carry vertex labels (injective), named paths (the drawn red,
green and thick paths, which may share vertices) and the claims an oracle
should reproduce on them.
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from .conf import get_setting
from .exceptions import PreconditionError
from .graph_core import build_graph, csr_arrays, sweep
from .laminarity import enumerate_diameters, graph_diameter, laminarity, strong_laminarity
from .mesp import adversarial_algorithm3k, exact_mesp
from .search import enumerate_spread_outcomes

logger = logging.getLogger(__name__)

FAMILIES = ("fig1", "fig3", "gk", "hk", "jk", "random")


@dataclass(frozen=True)
class NamedInstance:
    name: str
    graph: object
    labels: dict = field(default_factory=dict)
    paths: dict = field(default_factory=dict)
    claims: tuple = ()


FIG1_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
    (2, 9), (8, 9), (9, 7), (0, 8), (1, 8), (3, 14), (7, 4), (6, 15),
    (10, 0), (10, 8), (11, 4), (11, 14), (12, 7), (12, 5), (12, 15),
    (13, 5), (13, 11),
)

FIG3_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
    (0, 7), (7, 8), (8, 9), (9, 10), (10, 11), (11, 6),
    (3, 12), (1, 8), (2, 9), (4, 9), (5, 10),
)

# a..e = 0..4 (first red diameter), h = 5, z = 6, f = 7, g = 8
H1_EDGES = (
    (1, 7), (7, 8), (8, 5), (0, 1), (1, 2), (2, 3), (3, 4),
    (0, 7), (7, 2), (5, 6), (6, 8), (2, 8), (3, 5),
)

# x0..x8 = 0..8, v0..v6 = 9..15, z = 17 hangs from v3 through 16;
# 18 and 19 bridge v1 and v5 down to x3 and x4
H2_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8),
    (9, 10), (10, 11), (11, 12), (12, 13), (13, 14), (14, 15),
    (12, 16), (16, 17),
    (1, 9), (2, 9), (3, 18), (18, 10), (4, 19), (19, 14), (5, 19), (7, 15),
)

# x0..x4 = 0..4, v1..v4 = 5..8 (v0 is x1), z = 9, remaining vertices 10..12
J1_EDGES = (
    (1, 5), (5, 6), (6, 7), (7, 8),
    (0, 1), (1, 2), (2, 3), (3, 4),
    (0, 10), (10, 11), (11, 5), (5, 2), (10, 1),
    (12, 11), (11, 7), (7, 12),
    (3, 6), (6, 4), (12, 9), (9, 8), (5, 3),
)


def _require_k(k):
    if k < 1:
        raise PreconditionError(f"family parameter k must be at least 1, got {k}")


def _numbered(prefix, count, start=0):
    return {f"{prefix}{i}": start + i for i in range(count)}


def gen_fig1():
    labels = _numbered("v", 7)
    labels.update({"r": 7, "a": 8, "b": 9, "z": 10, "c": 11, "d": 12, "e": 13, "x": 14, "y": 15})
    return NamedInstance(
        name="fig1",
        graph=build_graph(16, FIG1_EDGES),
        labels=labels,
        paths={"mesp": tuple(range(7)), "thick": (14, 11, 13, 5, 6, 15)},
        claims=(("k", 1), ("spread_max_ecc", 5)),
    )


def gen_fig3():
    return NamedInstance(
        name="fig3",
        graph=build_graph(13, FIG3_EDGES),
        labels=_numbered("v", 13),
        paths={"mesp": tuple(range(7)), "top": (0, 7, 8, 9, 10, 11, 6)},
        claims=(("k", 1), ("diam", 6), ("adversarial_approx3k", 3)),
    )


def gen_gk(k):
    """Path x_0..x_4k with a pendant path p_1..p_k hanging from x_2k."""
    _require_k(k)
    spine = 4 * k
    edges = [(i, i + 1) for i in range(spine)]
    pendant = [spine + j for j in range(1, k + 1)]
    edges.extend(zip([2 * k] + pendant[:-1], pendant))

    labels = _numbered("x", spine + 1)
    labels.update({f"p{j}": spine + j for j in range(1, k)})
    labels["z"] = pendant[-1]
    return NamedInstance(
        name=f"gk(k={k})",
        graph=build_graph(5 * k + 1, edges),
        labels=labels,
        paths={"spine": tuple(range(spine + 1)), "pendant": (2 * k, *pendant)},
        claims=(("k", k), ("l", k), ("s", k), ("diameter_count", 1)),
    )


class LatticeSketch:
    """
    A graph drawn on the integer grid: every segment adds its lattice points
    and the unit steps between consecutive points as edges. Segments are
    horizontal, vertical or diagonal.
    """

    def __init__(self):
        self.points = set()
        self.edges = set()

    def line(self, start, end):
        (x0, y0), (x1, y1) = start, end
        dx, dy = x1 - x0, y1 - y0
        steps = max(abs(dx), abs(dy))
        if dx and dy and abs(dx) != abs(dy):
            raise ValueError(f"segment {start}->{end} is not axis-parallel or diagonal")
        sx, sy = (dx > 0) - (dx < 0), (dy > 0) - (dy < 0)
        previous = start
        self.points.add(start)
        for t in range(1, steps + 1):
            current = (x0 + sx * t, y0 + sy * t)
            self.points.add(current)
            self.edges.add(frozenset((previous, current)))
            previous = current
        return self

    def instance(self, name, red, green, z, claims):
        """Ids: red path, then the rest of the green path, then z, then the other points by (x, y)."""
        order = list(red)
        order += [point for point in green if point not in set(red)]
        order.append(z)
        placed = set(order)
        order += sorted(self.points - placed)
        ids = {point: i for i, point in enumerate(order)}

        edges = [tuple(ids[point] for point in edge) for edge in self.edges]
        labels = {f"x{i}": ids[point] for i, point in enumerate(red)}
        labels.update({f"v{i}": ids[point] for i, point in enumerate(green) if point not in set(red)})
        labels["z"] = ids[z]
        return NamedInstance(
            name=name,
            graph=build_graph(len(order), edges),
            labels=labels,
            paths={
                "red": tuple(ids[point] for point in red),
                "green": tuple(ids[point] for point in green),
            },
            claims=claims,
        )


def _jk_lattice(k):
    sketch = LatticeSketch()
    left, mid, right, far = k + 1, 2 * k + 1, 3 * k + 1, 4 * k + 1

    sketch.line((1, 0), (left, k))
    for j in range(1, k + 1):
        sketch.line((1 + j, 0), (1 + j, j))
    sketch.line((1, 0), (right, 0))

    sketch.line((left, 0), (mid, -k))
    for j in range(1, k + 1):
        sketch.line((left + j, -j), (left + j, k))
    sketch.line((mid, -k), (far, -k))
    sketch.line((mid, 0), (right, -k))
    for j in range(1, k):
        sketch.line((mid, -j), (right - j, -k))
    sketch.line((right, -k), (right, k))
    sketch.line((right, 0), (far, -k))
    for j in range(1, k):
        sketch.line((right, -j), (far - j, -k))

    sketch.line((left, k), (far, k))
    sketch.line((mid, k), (right, 2 * k))
    for j in range(1, k):
        sketch.line((mid + j, k + j), (far, k + j))
        sketch.line((mid + j, k), (mid + j, k + j))
    for x in range(right, far + 1):
        sketch.line((x, k), (x, 2 * k))
    sketch.line((right, 2 * k), (far, 2 * k))

    red = [(1 + i, 0) for i in range(k + 1)]
    red += [(left + j, -j) for j in range(1, k + 1)]
    red += [(mid + j, -k) for j in range(1, 2 * k + 1)]
    green = [(left + i, 0) for i in range(2 * k + 1)]
    green += [(right, j) for j in range(1, k + 1)]
    green += [(right + j, k) for j in range(1, k + 1)]
    return sketch.instance(
        f"jk(k={k})", red, green, (far, 2 * k), claims=(("k", k), ("s", 4 * k)),
    )


def gen_jk(k):
    """
    A graph whose green path v_0..v_4k has eccentricity k while the red
    diameter x_0..x_4k lies at distance 4k from z, so s = 4k.
    """
    _require_k(k)
    if k > 1:
        return _jk_lattice(k)
    labels = _numbered("x", 5)
    labels.update({"v1": 5, "v2": 6, "v3": 7, "v4": 8, "z": 9})
    return NamedInstance(
        name="jk(k=1)",
        graph=build_graph(13, J1_EDGES),
        labels=labels,
        paths={"red": (0, 1, 2, 3, 4), "green": (1, 5, 6, 7, 8)},
        claims=(("k", 1), ("s", 4)),
    )


def gen_hk(k):
    """
    A graph whose diameters all lie at distance 4k-2 from z while some shortest
    path has eccentricity k, so l = 4k-2.

    k = 1 has two diameters. k = 2 has the single diameter x_0..x_8 and the
    green path v_0..v_6 of eccentricity 2. No graph of minimum eccentricity
    k >= 3 reaches l = 4k-2, so larger k is refused.
    """
    _require_k(k)
    if k == 1:
        labels = _numbered("x", 5)
        labels.update({"v3": 5, "z": 6})
        return NamedInstance(
            name="hk(k=1)",
            graph=build_graph(9, H1_EDGES),
            labels=labels,
            paths={"red": (0, 1, 2, 3, 4), "second_red": (0, 7, 2, 3, 4), "green": (1, 2, 3, 5)},
            claims=(("k", 1), ("l", 2), ("diameter_count", 2)),
        )
    if k == 2:
        labels = _numbered("x", 9)
        labels.update(_numbered("v", 7, start=9))
        labels["z"] = 17
        return NamedInstance(
            name="hk(k=2)",
            graph=build_graph(20, H2_EDGES),
            labels=labels,
            paths={"red": tuple(range(9)), "green": tuple(range(9, 16))},
            claims=(("k", 2), ("l", 6), ("diameter_count", 1)),
        )
    raise PreconditionError(f"l = 4k-2 is only reachable for k <= 2, got k={k}")


def _unrank_pairs(index, n):
    """Map ranks of the row-major upper triangle back to pairs (u, v), u < v."""
    b = 2 * n - 1
    u = np.floor((b - np.sqrt(b * b - 8.0 * index)) / 2).astype(np.int64)
    u = np.clip(u, 0, n - 2)
    u[u * (b - u) // 2 > index] -= 1
    following = u + 1
    u[following * (b - following) // 2 <= index] += 1
    v = index - u * (b - u) // 2 + u + 1
    return u, v


def _link_components(n, pairs, rng):
    """Join each component to a random earlier one; components ordered by smallest vertex."""
    indptr, indices = csr_arrays(n, pairs)
    component = np.full(n, -1, dtype=np.int64)
    leaders = []
    while True:
        unassigned = np.flatnonzero(component < 0)
        if unassigned.size == 0:
            break
        leader = int(unassigned[0])
        dist, _ = sweep(indptr, indices, n, [leader])
        component[dist >= 0] = len(leaders)
        leaders.append(leader)

    bridges = []
    for rank, leader in enumerate(leaders[1:], start=1):
        earlier = np.flatnonzero(component < rank)
        bridges.append((int(earlier[rng.integers(earlier.size)]), leader))
    if bridges:
        logger.debug(f"linked {len(leaders)} components with {len(bridges)} extra edges")
        pairs = np.vstack([pairs, np.array(bridges, dtype=np.int64)])
    return pairs


def gen_random_connected(n, p, seed):
    """
    Erdős–Rényi G(n, p) made connected by bridging its components.

    The stream is numpy's PCG64 seeded with `seed`: the edge count is drawn
    binomially, the edges are a uniform sample of the upper-triangle ranks,
    and each extra component is attached to a uniformly drawn vertex of the
    components before it.
    """
    if n < 1:
        raise PreconditionError(f"a random graph needs at least one vertex, got n={n}")
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"edge probability must lie in [0, 1], got {p}")

    rng = np.random.Generator(np.random.PCG64(seed))
    total = n * (n - 1) // 2
    count = int(rng.binomial(total, p)) if total else 0
    if count:
        ranks = np.sort(rng.choice(total, size=count, replace=False))
        pairs = np.column_stack(_unrank_pairs(ranks, n))
    else:
        pairs = np.empty((0, 2), dtype=np.int64)
    return build_graph(n, _link_components(n, pairs, rng))


def random_instance(n, p, seed):
    return NamedInstance(name=f"random(n={n}, p={p}, seed={seed})", graph=gen_random_connected(n, p, seed))


def instance_by_name(family, k=None, n=None, p=None, seed=None):
    k = 1 if k is None else k
    if family == "fig1":
        return gen_fig1()
    if family == "fig3":
        return gen_fig3()
    if family == "gk":
        return gen_gk(k)
    if family == "hk":
        return gen_hk(k)
    if family == "jk":
        return gen_jk(k)
    if family == "random":
        return random_instance(10 if n is None else n, 0.3 if p is None else p, 0 if seed is None else seed)
    raise PreconditionError(f"unknown family {family!r}; choose one of {', '.join(FAMILIES)}")


def check_claims(instance, max_n=None, path_cap=None):
    """
    Evaluate every claim of a named instance with the oracles.
    Returns {quantity: (expected, actual)}. The exact limit defaults to the
    instance size, since named instances are drawn small enough to check.
    """
    g = instance.graph
    limit = max(get_setting("MESP_EXACT_MAX_N"), g.n) if max_n is None else max_n
    oracles = {
        "k": lambda: exact_mesp(g, path_cap=path_cap, max_n=limit).k,
        "l": lambda: laminarity(g, cap=path_cap, max_n=limit).value,
        "s": lambda: strong_laminarity(g, cap=path_cap, max_n=limit).value,
        "diam": lambda: graph_diameter(g)[0],
        "diameter_count": lambda: len(enumerate_diameters(g, cap=path_cap, max_n=limit).paths),
        "spread_max_ecc": lambda: max(o.max_ecc for o in enumerate_spread_outcomes(g, instance.labels["r"])),
        "adversarial_approx3k": lambda: adversarial_algorithm3k(g, cap=path_cap, max_n=limit),
    }
    results = {}
    for quantity, expected in instance.claims:
        results[quantity] = (expected, oracles[quantity]())
        logger.info(f"{instance.name}: {quantity} expected {expected}, got {results[quantity][1]}")
    return results
