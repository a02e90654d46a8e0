from eccentricity.formats import parse_path_spec
from eccentricity.reports import ecc_report

from ._base import GraphCommand


class Command(GraphCommand):
    help = "Eccentricity of a given path (ids or labels, comma separated)."

    def add_options(self, parser):
        parser.add_argument("path", help="path specification, e.g. 0,1,2 or v0,v1,v2")

    def run(self, graph, labels, **options):
        return ecc_report(graph, parse_path_spec(options["path"], labels)).render()
