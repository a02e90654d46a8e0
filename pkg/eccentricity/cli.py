"""
Command-line entry point: ``python -m eccentricity <command> ...``.

Each command is a Django management command of this app; this wrapper only
restricts the surface to those commands and turns SystemExit into a return code.
"""
import os
import sys

from django.core.management import execute_from_command_line
from dotenv import load_dotenv

COMMANDS = ("ecc", "spread", "approx3k", "exact", "laminarity", "gen", "verify", "dot")

USAGE = f"usage: mesp {{{','.join(COMMANDS)}}} [options]\n"


def cli_main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in COMMANDS:
        sys.stderr.write(USAGE)
        if argv:
            sys.stderr.write(f"mesp: unknown command {argv[0]!r}\n")
        return 2

    load_dotenv()
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "mesplab.settings")
    try:
        execute_from_command_line(["mesp", *argv])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0
