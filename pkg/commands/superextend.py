# commands/superextend.py

from commands import add_c0, add_dv, add_input, dv_of, emit, load_graph, pick_c0, show_table
from core.coloring import c0_pinnings, format_assignment, parse_pin, superextend
from utils.errors import InvalidPin


def run(args):
    graph = load_graph(args)
    dv = dv_of(args)
    c0 = pick_c0(graph, args.c0 or "auto-triangle")
    pins = [parse_pin(args.pin)] if args.pin else c0_pinnings(graph, c0, dv)
    if not pins:
        raise InvalidPin(f"C0 {c0} has no valid coloring under {dv}")

    failures, rows = 0, []
    for pin in pins:
        found = superextend(graph, c0, pin, dv)
        if found is None:
            failures += 1
            emit([f"UNSAT C0={c0} pin={format_assignment(pin)}"])
        else:
            emit([f"SAT C0={c0} pin={format_assignment(pin)}", format_assignment(found)])
        rows.append([format_assignment(pin), "UNSAT" if found is None else "SAT"])
    show_table(args, rows, ["pin", "verdict"])
    return 1 if failures else 0


def setup(subparsers):
    parser = subparsers.add_parser("superextend", help="extend a precoloring of C0")
    add_input(parser)
    add_c0(parser)
    add_dv(parser)
    parser.add_argument("--pin", default=None,
                        help="C0 coloring v=c,...; every valid one when omitted (64 sampled for a 7-cycle)")
    parser.set_defaults(handler=run)
    return parser
