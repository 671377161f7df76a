# corpus/rotlist.py

from core.plane_graph import build_from_rotation
from utils.errors import GraphError, RotlistSyntaxError


def emit_rotlist(graph):
    """Text form: `n <n> outer <u> <v>` then one `<v>: <w1> ... <wk>` line per vertex"""
    head = f"n {graph.vertex_count}"
    if graph.outer_edge is not None:
        head += f" outer {graph.outer_edge[0]} {graph.outer_edge[1]}"
    lines = [head]
    for v in graph.vertices():
        ws = " ".join(str(w) for w in graph.rotation(v))
        lines.append(f"{v}: {ws}".rstrip())
    return "\n".join(lines) + "\n"


def _ints(tokens, line):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise RotlistSyntaxError(line, f"expected integers, got {' '.join(tokens)!r}") from None


def _header(text_line, line):
    tokens = text_line.split()
    if len(tokens) == 2 and tokens[0] == "n":
        (n,) = _ints(tokens[1:], line)
        return n, None
    if len(tokens) == 5 and tokens[0] == "n" and tokens[2] == "outer":
        n, u, v = _ints([tokens[1], tokens[3], tokens[4]], line)
        return n, (u, v)
    raise RotlistSyntaxError(line, "header must read `n <n> outer <u> <v>`")


def parse_rotlist(text):
    rows = [(i + 1, raw.strip()) for i, raw in enumerate(text.splitlines())]
    rows = [(i, s) for i, s in rows if s and not s.startswith("#")]
    if not rows:
        raise RotlistSyntaxError(1, "empty input")

    n, outer = _header(rows[0][1], rows[0][0])
    if n < 1:
        raise RotlistSyntaxError(rows[0][0], "a plane graph needs at least one vertex")
    rotation = {}
    for line, s in rows[1:]:
        vertex, sep, rest = s.partition(":")
        if not sep:
            raise RotlistSyntaxError(line, "expected `<v>: <w1> ... <wk>`")
        (v,) = _ints([vertex.strip()], line)
        ws = _ints(rest.split(), line)
        if v in rotation:
            raise RotlistSyntaxError(line, f"vertex {v} listed twice")
        if not 1 <= v <= n:
            raise RotlistSyntaxError(line, f"vertex {v} out of range 1..{n}")
        if len(set(ws)) != len(ws):
            raise RotlistSyntaxError(line, f"vertex {v} repeats a neighbor")
        rotation[v] = ws
    if len(rotation) != n:
        raise RotlistSyntaxError(rows[-1][0], f"expected {n} rotation lines, got {len(rotation)}")

    try:
        return build_from_rotation(n, rotation, outer)
    except GraphError as e:
        raise RotlistSyntaxError(rows[0][0], str(e)) from e


def parse_rotlists(text):
    """Several rotlist graphs back to back; each starts at its `n ...` header line"""
    chunk, start = [], 1
    for i, line in enumerate(text.splitlines(), 1):
        if line.strip().startswith("n ") and any(s.strip() for s in chunk):
            yield _offset(chunk, start)
            chunk, start = [], i
        chunk.append(line)
    if any(s.strip() for s in chunk):
        yield _offset(chunk, start)


def _offset(lines, start):
    try:
        return parse_rotlist("\n".join(lines))
    except RotlistSyntaxError as e:
        raise RotlistSyntaxError(e.line + start - 1, str(e).partition(": ")[2]) from e
