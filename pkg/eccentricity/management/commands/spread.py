from eccentricity.reports import spread_report

from ._base import GraphCommand


class Command(GraphCommand):
    help = "Double-BFS spread path from a root, optionally with every tie-breaking outcome."

    def add_options(self, parser):
        parser.add_argument("--root", type=int, default=0, help="starting vertex (default 0)")
        parser.add_argument(
            "--adversarial",
            action="store_true",
            help="enumerate every spread pair and shortest path the sweep could produce (exponential)",
        )
        parser.add_argument("--cap", type=int, default=None, help="shortest paths allowed per pair")

    def run(self, graph, labels, **options):
        return spread_report(graph, options["root"], options["adversarial"], options["cap"]).render()
