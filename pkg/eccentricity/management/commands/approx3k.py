from eccentricity.reports import approx3k_report

from ._base import GraphCommand


class Command(GraphCommand):
    help = "Linear-time 3-approximation of the minimum eccentricity shortest path."

    def add_options(self, parser):
        parser.add_argument("--root", type=int, default=0, help="root of the initial spread pair (default 0)")

    def run(self, graph, labels, **options):
        return approx3k_report(graph, options["root"]).render()
