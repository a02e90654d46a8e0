from eccentricity.reports import exact_report

from ._base import GraphCommand, add_oracle_options


class Command(GraphCommand):
    help = "Exact minimum eccentricity shortest path by exhaustive enumeration (small graphs)."

    def add_options(self, parser):
        add_oracle_options(parser)

    def run(self, graph, labels, **options):
        return exact_report(graph, options["max_n"], options["path_cap"]).render()
