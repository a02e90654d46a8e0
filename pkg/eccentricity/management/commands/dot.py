from eccentricity.formats import parse_highlight, write_dot

from ._base import GraphCommand


class Command(GraphCommand):
    help = "Graphviz DOT rendering with highlighted paths."

    def add_options(self, parser):
        parser.add_argument(
            "--highlight",
            action="append",
            default=[],
            metavar="SPEC[:COLOR]",
            help="path to highlight, e.g. x,c,e,v5,v6,y:thick (repeatable)",
        )
        parser.add_argument("-o", "--output", default=None, help="write to this file instead of stdout")

    def run(self, graph, labels, **options):
        highlights = [parse_highlight(spec, labels) for spec in options["highlight"]]
        text = write_dot(graph, highlights, labels)
        if options["output"]:
            with open(options["output"], "w", encoding="utf-8") as handle:
                handle.write(text)
            return None
        return text
