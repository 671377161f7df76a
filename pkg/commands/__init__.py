# commands/__init__.py

import sys

from tabulate import tabulate

from core.coloring import DeficiencyVector, default_dv
from core.plane_graph import Cycle, as_cycle, cycles_up_to, facial_cycle, reroot
from corpus.planar_code import parse_planar_code, write_planar_code
from corpus.rotlist import emit_rotlist, parse_rotlists
from utils.errors import C0NotOuter, CorpusError, NotACycle, SweepIoError

FORMATS = ("rotlist", "planar_code")
AUTO_C0 = {"auto-triangle": 3, "auto-7cycle": 7}


def add_input(parser, optional=False):
    parser.add_argument("input", nargs="?" if optional else None, default=None,
                        help="graph file, or - for standard input")
    parser.add_argument("--format", choices=FORMATS, default="rotlist")


def add_c0(parser):
    parser.add_argument("--c0", default=None,
                        help="C0 as a vertex list 1,2,3 or auto-triangle / auto-7cycle")


def add_dv(parser):
    parser.add_argument("--dv", type=DeficiencyVector.parse, default=None,
                        help="deficiency vector, e.g. 2,0,0")


def dv_of(args):
    return args.dv if args.dv is not None else default_dv()


# ─── Input ─────────────────────────────────────────────────────────────────
def _read(path, binary):
    if path in (None, "-"):
        return sys.stdin.buffer.read() if binary else sys.stdin.read()
    try:
        with open(path, "rb" if binary else "r") as fh:
            return fh.read()
    except OSError as e:
        raise CorpusError(f"cannot read {path}: {e}") from e


def load_graphs(args):
    if args.format == "planar_code":
        return parse_planar_code(_read(args.input, True))
    return parse_rotlists(_read(args.input, False))


def load_graph(args):
    graph = next(iter(load_graphs(args)), None)
    if graph is None:
        raise CorpusError("input holds no graph")
    return graph


# ─── C0 ────────────────────────────────────────────────────────────────────
def parse_vertices(text):
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(","))
    except ValueError as e:
        raise NotACycle(f"bad vertex list {text!r}") from e


def pick_c0(graph, text):
    """A triangle or 7-cycle of the graph, facial or not"""
    if text in AUTO_C0:
        length = AUTO_C0[text]
        found = [c for c in cycles_up_to(graph, length) if c.length == length]
        if not found:
            raise NotACycle(f"graph has no {length}-cycle")
        return found[0]
    cycle = as_cycle(graph, parse_vertices(text))
    if cycle.length not in (3, 7):
        raise NotACycle(f"C0 {cycle} is neither a triangle nor a 7-cycle")
    return cycle


def root_at_c0(graph, text):
    """(graph, c0) with C0 the outer face; no --c0 keeps the given outer face"""
    if text is None:
        return graph, None
    if text in AUTO_C0:
        face = facial_cycle(graph, AUTO_C0[text])
        if face is None:
            raise C0NotOuter(f"no facial {AUTO_C0[text]}-cycle to serve as C0")
        return reroot(graph, face), tuple(face.boundary)
    cycle = pick_c0(graph, text)
    for face in graph.faces:
        if face.is_cycle and Cycle.canonical(face.boundary) == cycle:
            return reroot(graph, face), cycle.vertices
    raise C0NotOuter(f"C0 {cycle} bounds no face")


# ─── Output ────────────────────────────────────────────────────────────────
def emit(lines):
    for line in lines:
        print(line)


def write_graphs(args, graphs):
    if args.format == "planar_code":
        data = write_planar_code(graphs)
    else:
        data = "".join(emit_rotlist(g) for g in graphs).encode()

    if args.output:
        try:
            with open(args.output, "wb") as fh:
                fh.write(data)
        except OSError as e:
            raise SweepIoError(f"cannot write {args.output}: {e}") from e
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def show_table(args, rows, headers):
    if getattr(args, "verbose", False) and rows:
        print(tabulate(rows, headers=headers), file=sys.stderr)
