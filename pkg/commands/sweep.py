# commands/sweep.py

from commands import add_input, emit, load_graphs, show_table
from corpus.enumerate import enumerate_up_to
from corpus.sweep import CHECKS, RUNNERS, sweep
from utils import config
from utils.errors import PlaneLabError


def _checks(text):
    chosen = tuple(c for c in text.split(",") if c)
    unknown = [c for c in chosen if c not in RUNNERS]
    if unknown:
        raise PlaneLabError(f"unknown sweep checks: {', '.join(unknown)}")
    return chosen


def run(args):
    if args.enumerate:
        stream = enumerate_up_to(args.enumerate)
    elif args.input is not None:
        stream = load_graphs(args)
    else:
        raise PlaneLabError("sweep needs an input corpus or --enumerate N")

    checks = _checks(args.checks)
    records, summary = sweep(stream, checks, args.output, args.workers)
    emit(summary)
    findings = [r for r in records if r.finding]
    unsat = [r for r in records
             if r.verdicts.get("color_200") == "UNSAT" and r.verdicts.get("membership") == "yes"]
    show_table(args, [[r.index, *r.verdicts.values()] for r in findings + unsat], ["index", *checks])
    return 1 if findings or unsat else 0


def setup(subparsers):
    parser = subparsers.add_parser("sweep", help="run checks over a corpus of graphs")
    add_input(parser, optional=True)
    parser.add_argument("--enumerate", type=int, default=None, metavar="N",
                        help="sweep every connected planar graph on at most N vertices")
    parser.add_argument("--checks", default=",".join(CHECKS))
    parser.add_argument("--output", default="sweep.out")
    parser.add_argument("--workers", type=int, default=config.WORKERS)
    parser.set_defaults(handler=run)
    return parser
