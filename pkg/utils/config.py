# utils/config.py

import os, json
from dotenv import load_dotenv

load_dotenv()

def get_int(key, default=None):
    v = os.getenv(key)
    return int(v) if v and v.isdigit() else default

def get_json(key, default=None):
    v = os.getenv(key)
    try:
        return json.loads(v) if v else default
    except json.JSONDecodeError:
        return default

# ── Coloring ────────────────────────────────────────
DEFAULT_DEFICIENCY   = tuple(get_json("PLANELAB_DEFICIENCY", [2, 0, 0]))
ENUMERATION_CAP      = get_int("PLANELAB_ENUMERATION_CAP", 12)
SEVEN_CYCLE_PINNINGS = get_int("PLANELAB_SEVEN_CYCLE_PINNINGS", 64)

# ── Reports & Verification ──────────────────────────
WITNESS_CAP    = get_int("PLANELAB_WITNESS_CAP", 16)
SAMPLE_BUDGET  = get_int("PLANELAB_SAMPLE_BUDGET", 500)
RANDOM_SEED    = get_int("PLANELAB_SEED", 20)

# ── Graph Limits ────────────────────────────────────
MAX_CYCLE_LENGTH   = 8
SMALL_GRAPH_LIMIT  = 8
PLANAR_CODE_LIMIT  = 255

# ── Corpus Sweeps ───────────────────────────────────
WORKERS = get_int("PLANELAB_WORKERS", 1)
SWEEP_CHECKS = (
    "membership",
    "color_200",
    "superextend_all_triangles",
    "discharge_audit",
    "lemma_scan",
)

# ── Logging ─────────────────────────────────────────
LOG_FILE = os.getenv("PLANELAB_LOG_FILE")
