import logging

from django.core.management.base import BaseCommand, CommandError

from eccentricity.exceptions import MespError
from eccentricity.formats import serialize_edge_list
from eccentricity.generators import FAMILIES, instance_by_name

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Write a generated instance as an edge list, labels included as comments."

    def add_arguments(self, parser):
        parser.add_argument("family", choices=FAMILIES)
        parser.add_argument("--k", type=int, default=1, help="family parameter for gk, hk and jk")
        parser.add_argument("--n", type=int, default=10, help="vertex count for random")
        parser.add_argument("--p", type=float, default=0.3, help="edge probability for random")
        parser.add_argument("--seed", type=int, default=0, help="seed for random")
        parser.add_argument("-o", "--output", default=None, help="write to this file instead of stdout")

    def handle(self, *args, **options):
        try:
            instance = instance_by_name(
                options["family"], k=options["k"], n=options["n"], p=options["p"], seed=options["seed"]
            )
        except MespError as exc:
            logger.warning(f"gen failed: {exc}")
            raise CommandError(str(exc), returncode=1) from exc

        text = serialize_edge_list(instance.graph, instance.labels, comments=[instance.name])
        if options["output"]:
            with open(options["output"], "w", encoding="utf-8") as handle:
                handle.write(text)
            logger.info(f"wrote {instance.name} to {options['output']}")
        else:
            self.stdout.write(text, ending="")
