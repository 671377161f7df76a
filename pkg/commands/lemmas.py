# commands/lemmas.py

from commands import add_c0, add_input, emit, load_graph, root_at_c0, show_table
from core.context import PlaneContext
from reducible.detectors import CONSTRUCTIVE, LEMMA_IDS, scan_configurations
from reducible.gadgets import GADGETS, all_gadgets, gadget
from reducible.verify import verify_reduction
from utils import config
from utils.errors import PlaneLabError


def _verdict_row(name, verdict):
    return [
        name,
        verdict.lemma_id,
        verdict.instances_tested,
        verdict.recipe_successes,
        verdict.oracle_successes,
        len(verdict.discrepancies),
    ]


def _report(verdict, name, rows):
    emit([verdict.to_line()])
    if verdict.finding:
        emit([f"FINDING {verdict.lemma_id} {name}: {verdict.finding}"])
    for d in verdict.discrepancies:
        emit([f"DISCREPANCY {verdict.lemma_id} base={d.index} oracle={'SAT' if d.oracle_ok else 'UNSAT'}: {d.reason}"])
    rows.append(_verdict_row(name, verdict))
    return bool(verdict.discrepancies)


def run_gadgets(args):
    chosen = all_gadgets() if args.gadget == "all" else [gadget(args.gadget)]
    rows, bad = [], False
    for g in chosen:
        ctx = g.context()
        verdict = verify_reduction(g.graph, g.c0, g.match(ctx), args.samples, ctx=ctx, seed=args.seed)
        bad |= _report(verdict, g.name, rows)
    show_table(args, rows, ["gadget", "lemma", "tested", "ok", "oracle_ok", "discrepancies"])
    return 1 if bad else 0


def run(args):
    if args.gadget:
        return run_gadgets(args)
    if args.input is None:
        raise PlaneLabError("lemmas needs an input graph or --gadget")

    graph, c0 = root_at_c0(load_graph(args), args.c0)
    ctx = PlaneContext(graph, c0)
    matches = scan_configurations(graph, lemmas=args.lemma, ctx=ctx)
    emit(m.to_line() for m in matches)
    if not args.verify:
        show_table(args, [[m.lemma_id, " ".join(map(str, m.key))] for m in matches], ["lemma", "key"])
        return 0

    rows, bad = [], False
    for m in matches:
        if m.lemma_id not in CONSTRUCTIVE:
            continue
        verdict = verify_reduction(graph, c0, m, args.samples, ctx=ctx, seed=args.seed)
        bad |= _report(verdict, " ".join(map(str, m.key)), rows)
    show_table(args, rows, ["key", "lemma", "tested", "ok", "oracle_ok", "discrepancies"])
    return 1 if bad else 0


def setup(subparsers):
    parser = subparsers.add_parser("lemmas", help="scan for reducible configurations")
    add_input(parser, optional=True)
    add_c0(parser)
    parser.add_argument("--lemma", action="append", choices=LEMMA_IDS, default=None)
    parser.add_argument("--verify", action="store_true", help="check every recoloring recipe")
    parser.add_argument("--gadget", choices=[*GADGETS, "all"], default=None)
    parser.add_argument("--samples", type=int, default=config.SAMPLE_BUDGET,
                        help="base colorings drawn when the reduced graph is too large to enumerate")
    parser.add_argument("--seed", type=int, default=config.RANDOM_SEED)
    parser.set_defaults(handler=run)
    return parser
