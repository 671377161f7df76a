# commands/discharge.py

from commands import add_c0, add_input, emit, load_graph, root_at_c0, show_table
from core.discharging import audit, fmt, label


def run(args):
    graph, c0 = root_at_c0(load_graph(args), args.c0)
    report = audit(graph, c0)
    emit(report.to_lines())
    show_table(
        args,
        [[t.rule, label(t.giver), label(t.receiver), fmt(t.amount)] for t in report.ledger.transfers],
        ["rule", "giver", "receiver", "amount"],
    )
    return 0 if report.clean else 1


def setup(subparsers):
    parser = subparsers.add_parser("discharge", help="apply the discharging rules and audit charges")
    add_input(parser)
    add_c0(parser)
    parser.set_defaults(handler=run)
    return parser
