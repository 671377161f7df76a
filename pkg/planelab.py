# planelab.py

import argparse
import importlib
import logging
import os
import sys

from utils.errors import PlaneLabError
from utils.logger import setup_logging

logger = logging.getLogger("planelab")

EPILOG = """\
output lines (standard output):
  MEMBER yes|no ...       class membership, then WITNESS lines
  SAT / UNSAT ...         coloring and C0 superextension verdicts
  NEG, SUM, PROFILE       discharging audit, plus UNCLASSIFIED, CROWDED, NOTE
  MATCH <lemma> <key>     one reducible configuration found by a scan
  LEMMA <lemma> ...       recipe verification, plus FINDING and DISCREPANCY
  RECORD <i> ...          one sweep record; FINDING flags a negative charge
  TOTAL, MATCHES          sweep summary counts

exit codes:
  0  success, every checked instance holds
  1  a negative verdict: non-member, UNSAT, negative charge or finding
  2  usage, input or I/O error
"""


def load_commands(subparsers):
    """Register every commands/<name>.py exposing setup(subparsers)"""
    base_dir = os.path.dirname(os.path.abspath(__file__))
    commands_dir = os.path.join(base_dir, "commands")

    loaded, failed = [], []
    for filename in sorted(os.listdir(commands_dir)):
        if filename.endswith(".py") and filename != "__init__.py":
            try:
                module = importlib.import_module(f"commands.{filename[:-3]}")
                parser = module.setup(subparsers)
                parser.add_argument("--verbose", "-v", action="store_true",
                                    help="INFO logging and tables on standard error")
                loaded.append(filename)
            except Exception:
                failed.append(filename)
                logger.exception("Failed to load %s", filename)

    logger.info("loaded: %d, failed: %d", len(loaded), len(failed))
    return loaded, failed


def build_parser():
    parser = argparse.ArgumentParser(
        prog="planelab",
        description="Plane graphs with no 5-cycles and disjoint triangles: membership, "
                    "defective coloring, discharging and reducible configurations",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    load_commands(subparsers)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    except PlaneLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    setup_logging(args.verbose)
    try:
        return args.handler(args)
    except PlaneLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
