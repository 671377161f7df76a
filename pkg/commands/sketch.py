# commands/sketch.py

import sys

from commands import FORMATS, write_graphs
from corpus.sketch import sketches
from utils import config


def run(args):
    graphs = list(sketches(args.count, args.max_side, args.seed))
    write_graphs(args, graphs)
    print(f"sketched {len(graphs)} graphs", file=sys.stderr)
    return 0


def setup(subparsers):
    parser = subparsers.add_parser("sketch", help="seeded random plane graphs drawn on a lattice")
    parser.add_argument("count", type=int)
    parser.add_argument("--max-side", type=int, default=8, help="lattice side; 8 gives up to 64 vertices")
    parser.add_argument("--seed", type=int, default=config.RANDOM_SEED)
    parser.add_argument("--format", choices=FORMATS, default="planar_code")
    parser.add_argument("--output", default=None)
    parser.set_defaults(handler=run)
    return parser
