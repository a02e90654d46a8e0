from django.core.management.base import CommandError

from eccentricity.reports import verify_report

from ._base import GraphCommand, add_oracle_options


class Command(GraphCommand):
    help = "Check every approximation and laminarity bound that applies; exit 1 on a violation."

    def add_options(self, parser):
        add_oracle_options(parser)

    def run(self, graph, labels, **options):
        report, passed = verify_report(
            graph, options["max_n"], options["path_cap"], labelled=bool(labels)
        )
        self.stdout.write(report.render(), ending="")
        if not passed:
            raise CommandError("verification failed", returncode=1)
        return None
