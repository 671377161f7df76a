# corpus/planar_code.py

import logging

from core.plane_graph import build_from_rotation
from utils import config
from utils.errors import BadHeader, GraphError, InvalidRotation, TooLarge, TruncatedRecord
from utils.logger import log_event

logger = logging.getLogger("planelab.corpus")

HEADER = b">>planar_code<<"


def decode_record(n, rotation, index=0):
    try:
        return build_from_rotation(n, rotation)
    except GraphError as e:
        raise InvalidRotation(f"planar_code record {index}: {e}") from e


def parse_planar_code(data):
    """Stream PlaneGraphs out of planar_code bytes; records failing validation are skipped"""
    data = bytes(data)
    if not data.startswith(HEADER):
        raise BadHeader(f"missing {HEADER.decode()} header")
    pos = len(HEADER)
    index = loaded = failed = 0
    while pos < len(data):
        n = data[pos]
        pos += 1
        rotation = {}
        for v in range(1, n + 1):
            end = data.find(b"\x00", pos)
            if end < 0:
                raise TruncatedRecord(f"record {index}: vertex {v} of {n} has no terminator")
            rotation[v] = tuple(data[pos:end])
            pos = end + 1
        try:
            graph = decode_record(n, rotation, index)
        except InvalidRotation as e:
            failed += 1
            log_event(f"{e}; skipped")
        else:
            loaded += 1
            yield graph
        index += 1
    logger.info("loaded: %d, failed: %d", loaded, failed)


def write_planar_code(graphs):
    out = bytearray(HEADER)
    for graph in graphs:
        n = graph.vertex_count
        if n > config.PLANAR_CODE_LIMIT:
            raise TooLarge(f"{n} vertices exceeds the one-byte planar_code limit")
        out.append(n)
        for v in graph.vertices():
            out.extend(graph.rotation(v))
            out.append(0)
    return bytes(out)


def read_planar_code(path):
    with open(path, "rb") as fh:
        return list(parse_planar_code(fh.read()))
