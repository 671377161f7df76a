# commands/color.py

from commands import add_dv, add_input, dv_of, emit, load_graph, show_table
from core.coloring import ExtensionProblem, format_assignment, solve, vertex_status


def run(args):
    graph = load_graph(args)
    dv = dv_of(args)
    found = solve(ExtensionProblem(graph, dv, break_symmetry=True))
    if found is None:
        emit([f"UNSAT dv={dv}"])
        return 1
    emit([f"SAT dv={dv}", format_assignment(found)])
    rows = []
    for v in graph.vertices():
        status = vertex_status(graph, found, v, dv)
        rows.append([v, found[v], status.kind, status.same, status.allowance])
    show_table(args, rows, ["vertex", "color", "status", "same", "allowance"])
    return 0


def setup(subparsers):
    parser = subparsers.add_parser("color", help="find a (c1,...,ck)-coloring")
    add_input(parser)
    add_dv(parser)
    parser.set_defaults(handler=run)
    return parser
