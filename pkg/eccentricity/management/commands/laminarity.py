from eccentricity.reports import laminarity_report

from ._base import GraphCommand, add_oracle_options


class Command(GraphCommand):
    help = "k(G), l(G), s(G) and the inequalities between them."

    def add_options(self, parser):
        add_oracle_options(parser)

    def run(self, graph, labels, **options):
        return laminarity_report(graph, options["max_n"], options["path_cap"]).render()
