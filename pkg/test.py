# test.py

import contextlib
import io
import os
import tempfile
import traceback

import logging
logging.getLogger().handlers.clear()
logging.basicConfig(level=logging.ERROR)

from dotenv import load_dotenv
load_dotenv()

from core.plane_graph import build_from_drawing
from corpus.rotlist import emit_rotlist
from planelab import run
from reducible.gadgets import gadget

# ────────────────────────────────────────────────────────────────────────────────
# 1) FIXTURE GRAPHS (written to a scratch directory as rotlist files)
# ────────────────────────────────────────────────────────────────────────────────

CUBE = build_from_drawing(
    {1: (0, 0), 2: (10, 0), 3: (10, 10), 4: (0, 10), 5: (3, 3), 6: (7, 3), 7: (7, 7), 8: (3, 7)},
    [(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 8), (8, 5), (1, 5), (2, 6), (3, 7), (4, 8)],
)
K4 = build_from_drawing(
    {1: (0, 0), 2: (10, 0), 3: (5, 9), 4: (5, 3)},
    [(1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4)],
)
C5 = build_from_drawing(
    {1: (0, 10), 2: (9, 3), 3: (6, -8), 4: (-6, -8), 5: (-9, 3)},
    [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
)


def write(directory, name, graph):
    path = os.path.join(directory, name)
    with open(path, "w") as fh:
        fh.write(emit_rotlist(graph))
    return path


def call(argv):
    """Run one subcommand, returning (exit code, stdout lines)"""
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = run(argv)
    return code, out.getvalue().splitlines()


# ────────────────────────────────────────────────────────────────────────────────
# 2) MAIN: WALK THROUGH EVERY SUBCOMMAND
# ────────────────────────────────────────────────────────────────────────────────

def main():
    base = os.path.join(os.path.dirname(os.path.abspath(__file__)), "commands")
    names = sorted(fn[:-3] for fn in os.listdir(base) if fn.endswith(".py") and not fn.startswith("__"))
    print(f"[TEST] Subcommands: {', '.join(names)}")

    with tempfile.TemporaryDirectory() as tmp:
        cube = write(tmp, "cube.rot", CUBE)
        k4 = write(tmp, "k4.rot", K4)
        c5 = write(tmp, "c5.rot", C5)
        l38 = write(tmp, "l38.rot", gadget("L3.8").graph)

        steps = [
            ("CHECK: 3-cube is in the class", ["check", cube]),
            ("CHECK: C5 is not", ["check", c5]),
            ("COLOR: 3-cube under (2,0,0)", ["color", cube, "--dv", "2,0,0"]),
            ("COLOR: K4 properly", ["color", k4, "--dv", "0,0,0"]),
            ("SUPEREXTEND: L3.8 gadget, C0 all ones", ["superextend", l38, "--c0", "1,2,3", "--pin", "1=1,2=1,3=1"]),
            ("SUPEREXTEND: K4, every triangle pin", ["superextend", k4, "--c0", "1,2,3"]),
            ("DISCHARGE: L3.8 gadget", ["discharge", l38]),
            ("LEMMAS: scan the L3.8 gadget", ["lemmas", l38]),
            ("LEMMAS: verify the L3.8 gadget", ["lemmas", "--gadget", "L3.8"]),
            ("LEMMAS: verify the L3.12.2 gadget, 20 samples", ["lemmas", "--gadget", "L3.12.2", "--samples", "20"]),
            ("ENUMERATE: connected planar graphs on 5 vertices", ["enumerate", "5", "--output", os.path.join(tmp, "five.rot")]),
            ("SKETCH: 50 seeded lattice graphs", ["sketch", "50", "--output", os.path.join(tmp, "sketch.pc")]),
            ("SWEEP: every graph up to 5 vertices", ["sweep", "--enumerate", "5", "--output", os.path.join(tmp, "sweep.out")]),
            ("USAGE: unknown gadget", ["lemmas", "--gadget", "L9.9"]),
        ]

        print("\n=== Running individual command tests ===\n")
        for i, (title, argv) in enumerate(steps, 1):
            print(f"{i}) {title}")
            try:
                code, lines = call(argv)
            except SystemExit as e:
                code, lines = e.code, []
            except Exception:
                traceback.print_exc()
                continue
            for line in lines[:6]:
                print("   →", line)
            if len(lines) > 6:
                print(f"   → … {len(lines) - 6} more lines")
            print("   → exit code:", code)

    print("\n\n=== ALL TESTS COMPLETED ===\n")


if __name__ == "__main__":
    main()
