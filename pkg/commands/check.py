# commands/check.py

from commands import add_input, emit, load_graph, show_table
from core.class_g import check_membership


def run(args):
    graph = load_graph(args)
    report = check_membership(graph, cap=args.witnesses)
    emit(report.to_lines())
    show_table(
        args,
        [[len(report.five_cycles), report.triangle_count, report.is_member]],
        ["5-cycles shown", "triangles", "member"],
    )
    return 0 if report.is_member else 1


def setup(subparsers):
    parser = subparsers.add_parser("check", help="class membership: no 5-cycle, disjoint triangles")
    add_input(parser)
    parser.add_argument("--witnesses", type=int, default=None, help="5-cycle witnesses to print")
    parser.set_defaults(handler=run)
    return parser
