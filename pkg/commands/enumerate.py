# commands/enumerate.py

import sys

from commands import FORMATS, write_graphs
from corpus.enumerate import enumerate_small, enumerate_up_to


def run(args):
    graphs = list(enumerate_up_to(args.n) if args.up_to else enumerate_small(args.n))
    write_graphs(args, graphs)
    print(f"enumerated {len(graphs)} graphs", file=sys.stderr)
    return 0


def setup(subparsers):
    parser = subparsers.add_parser("enumerate", help="connected planar graphs on n vertices")
    parser.add_argument("n", type=int)
    parser.add_argument("--up-to", action="store_true", help="every order from 1 to n")
    parser.add_argument("--format", choices=FORMATS, default="rotlist")
    parser.add_argument("--output", default=None)
    parser.set_defaults(handler=run)
    return parser
