import logging
import sys

from django.core.management.base import BaseCommand, CommandError

from eccentricity.exceptions import MespError
from eccentricity.formats import parse_edge_list_document

logger = logging.getLogger(__name__)


class GraphCommand(BaseCommand):
    """
    A command reading one edge-list document (a path, or '-' for standard
    input) and printing a report. Library errors exit with status 1.
    """

    stealth_options = ("stdin",)

    def add_arguments(self, parser):
        parser.add_argument("file", help="edge-list file, '-' reads standard input")
        self.add_options(parser)

    def add_options(self, parser):
        pass

    def read_document(self, name, stdin=None):
        if name == "-":
            return (stdin or sys.stdin).read()
        try:
            with open(name, encoding="utf-8") as handle:
                return handle.read()
        except OSError as exc:
            raise CommandError(f"cannot read {name}: {exc.strerror}", returncode=1) from exc

    def run(self, graph, labels, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        text = self.read_document(options["file"], options.get("stdin"))
        try:
            graph, labels = parse_edge_list_document(text)
            output = self.run(graph, labels, **options)
        except MespError as exc:
            logger.warning(f"{self.__module__.rsplit('.', 1)[-1]} failed: {exc}")
            raise CommandError(str(exc), returncode=1) from exc
        except CommandError:
            raise
        except Exception:
            logger.exception("Unexpected error while running the command.")
            raise
        if output:
            self.stdout.write(output, ending="")


def add_oracle_options(parser):
    parser.add_argument("--max-n", type=int, default=None, help="refuse graphs with more vertices")
    parser.add_argument("--path-cap", type=int, default=None, help="shortest paths allowed per vertex pair")
