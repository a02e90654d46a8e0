"""
Report assembly shared by the management commands and the HTTP views.

A report renders as a human-readable block, a ``---`` separator line and a
``key=value`` block whose keys are stable (k, l, s, ecc, diam, spread_ecc,
approx3k_ecc, ...).
"""
import logging

from .conf import resolve
from .exceptions import InstanceTooLargeError
from .graph_core import Path, make_path, path_eccentricity
from .laminarity import bounds_report, graph_diameter
from .mesp import adversarial_algorithm3k, algorithm3k, exact_mesp, expected_calls
from .search import check_lemma1, enumerate_spread_outcomes, spread_path

logger = logging.getLogger(__name__)


def _format(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "skipped"
    if isinstance(value, Path):
        return ",".join(str(v) for v in value.vertices)
    if isinstance(value, (tuple, list)):
        return ",".join(str(v) for v in value)
    return str(value)


class Report:
    def __init__(self, title):
        self.title = title
        self.notes = []
        self.values = {}

    def note(self, text):
        self.notes.append(text)
        return self

    def set(self, key, value):
        self.values[key] = value
        return self

    def render(self):
        lines = [self.title]
        lines.extend(f"  {note}" for note in self.notes)
        lines.append("---")
        lines.extend(f"{key}={_format(value)}" for key, value in self.values.items())
        return "\n".join(lines) + "\n"

    def as_dict(self):
        values = {}
        for key, value in self.values.items():
            if isinstance(value, Path):
                value = list(value.vertices)
            elif isinstance(value, tuple):
                value = list(value)
            values[key] = value
        return {"title": self.title, "notes": list(self.notes), "values": values}


def ecc_report(g, vertices):
    path = make_path(g, vertices)
    ecc = path_eccentricity(g, path)
    report = Report(f"eccentricity of a {path.length}-edge path")
    if not path.shortest:
        report.note("the path is not a shortest path between its endpoints")
    return (
        report.set("path", path)
        .set("shortest", path.shortest)
        .set("ecc", ecc.value)
        .set("witness", ecc.witness)
    )


def spread_report(g, root=0, adversarial=False, cap=None):
    result = spread_path(g, root)
    report = Report(f"double sweep from vertex {root}")
    report.note(f"x={result.x} at distance {result.first_sweep} from the root, y={result.y} at distance {result.spread_distance} from x")
    report.set("root", root).set("x", result.x).set("y", result.y)
    report.set("spread_distance", result.spread_distance)
    report.set("path", result.path).set("spread_ecc", result.ecc.value).set("witness", result.ecc.witness)
    if adversarial:
        outcomes = enumerate_spread_outcomes(g, root, cap=cap)
        for outcome in outcomes:
            report.note(
                f"pair ({outcome.x}, {outcome.y}): {outcome.paths} shortest paths, "
                f"eccentricity {outcome.min_ecc}..{outcome.max_ecc}"
            )
        report.set("outcomes", len(outcomes))
        report.set("spread_max_ecc", max(outcome.max_ecc for outcome in outcomes))
    return report


def approx3k_report(g, root=0, limit=None):
    result = algorithm3k(g, r=root, limit=limit)
    report = Report(f"recursive approximation from spread pair {result.pair}")
    for step, x, y, reach in result.improvements:
        report.note(f"step {step}: path {x}..{y} brings the eccentricity to {reach}")
    return (
        report.set("root", root)
        .set("path", result.path)
        .set("approx3k_ecc", result.ecc)
        .set("calls", result.calls)
    )


def exact_report(g, max_n=None, path_cap=None):
    result = exact_mesp(g, path_cap=path_cap, max_n=max_n)
    report = Report(f"exact minimum eccentricity shortest path on {g.n} vertices")
    report.note(f"{result.paths_enumerated} shortest paths over {result.pairs_scanned} vertex pairs")
    return report.set("k", result.k).set("path", result.path)


def laminarity_report(g, max_n=None, path_cap=None):
    bounds = bounds_report(g, path_cap=path_cap, max_n=max_n)
    report = Report(f"laminarity bounds on {g.n} vertices")
    report.set("k", bounds.k).set("l", bounds.l).set("s", bounds.s).set("diam", bounds.diam)
    for name, outcome in bounds.checks.items():
        report.set(f"check.{name}", outcome)
    return report.set("passed", bounds.passed)


def verify_report(g, max_n=None, path_cap=None, labelled=False):
    """
    Run every bound that applies to g. The linear-time checks always run; the
    oracle-backed ones only when g fits the exact limit. A labelled document
    comes from a named instance, so without an explicit max_n its limit grows
    to the instance size. Returns (report, passed).
    """
    limit = resolve(max_n, "MESP_EXACT_MAX_N")
    if max_n is None and labelled:
        limit = max(limit, g.n)
    recursion = resolve(None, "MESP_RECURSION_LIMIT")
    report = Report(f"verification of a graph with {g.n} vertices and {g.m} edges")
    diam, _ = graph_diameter(g)
    spread = spread_path(g, 0)
    approx = algorithm3k(g)
    report.set("diam", diam).set("spread_ecc", spread.ecc.value).set("approx3k_ecc", approx.ecc)

    checks = {
        "spread_half_diameter": 2 * spread.spread_distance >= diam,
        "approx3k_calls": approx.calls == expected_calls(recursion),
    }
    try:
        bounds = bounds_report(g, path_cap=path_cap, max_n=limit)
    except InstanceTooLargeError:
        report.note(f"{g.n} vertices exceed the exact limit of {limit}; oracle checks skipped")
    else:
        k = bounds.k
        worst_spread = max(spread_path(g, r).ecc.value for r in range(g.n))
        checks["spread_le_5k"] = worst_spread <= 5 * k
        checks["approx3k_le_3k"] = approx.ecc <= 3 * k
        checks["adversarial_le_3k"] = adversarial_algorithm3k(g, cap=path_cap, max_n=limit) <= 3 * k
        checks["interval"] = check_lemma1(g, bounds.mesp_path, k, spread.path) and check_lemma1(
            g, bounds.mesp_path, k, approx.path
        )
        checks.update(bounds.checks)
        report.set("k", k).set("l", bounds.l).set("s", bounds.s)

    for name, outcome in checks.items():
        report.set(f"check.{name}", outcome)
    passed = all(outcome is not False for outcome in checks.values())
    if not passed:
        logger.error(f"verification failed: {checks}")
    report.set("passed", passed)
    return report, passed
