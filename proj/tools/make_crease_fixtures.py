"""Writes the crease-pattern fixtures in tests/data as FOLD JSON.

Each pattern is a list of polylines with exact rational vertices. Polylines
are cut at every mutual intersection so the output is pre-subdivided, and
coordinates are written as "p/q" strings.
"""
import json
import sys
from fractions import Fraction as F
from pathlib import Path


def seg_intersection(p, q, r, s):
    d = (q[0] - p[0]) * (s[1] - r[1]) - (q[1] - p[1]) * (s[0] - r[0])
    if d == 0:
        return None
    t = ((r[0] - p[0]) * (s[1] - r[1]) - (r[1] - p[1]) * (s[0] - r[0])) / d
    u = ((r[0] - p[0]) * (q[1] - p[1]) - (r[1] - p[1]) * (q[0] - p[0])) / d
    if 0 <= t <= 1 and 0 <= u <= 1:
        return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))
    return None


def on_segment(x, p, q):
    cross = (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0])
    return cross == 0 and min(p[0], q[0]) <= x[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= x[1] <= max(p[1], q[1])


def build(polylines):
    segs = []
    for line in polylines:
        pts = [(F(x), F(y)) for x, y in line]
        segs += list(zip(pts, pts[1:]))
    points = set()
    for p, q in segs:
        points.add(p)
        points.add(q)
    for i, (p, q) in enumerate(segs):
        for r, s in segs[:i]:
            x = seg_intersection(p, q, r, s)
            if x is not None:
                points.add(x)
    points = sorted(points)
    index = {p: i for i, p in enumerate(points)}
    edges = set()
    for p, q in segs:
        on = sorted((x for x in points if on_segment(x, p, q)), key=lambda x: (x[0] - p[0]) ** 2 + (x[1] - p[1]) ** 2)
        for a, b in zip(on, on[1:]):
            edges.add(tuple(sorted((index[a], index[b]))))
    fmt = lambda v: str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return {
        "file_spec": 1.1,
        "frame_classes": ["creasePattern"],
        "vertices_coords": [[fmt(x), fmt(y)] for x, y in points],
        "edges_vertices": [list(e) for e in sorted(edges)],
    }


def diamond(cx, cy, rx, ry):
    return [(cx, cy - ry), (cx + rx, cy), (cx, cy + ry), (cx - rx, cy), (cx, cy - ry)]


H = F(1, 2)
PATTERNS = {
    # both diagonals: one degree-4 vertex
    "crease_diagonals": [[(0, 0), (1, 1)], [(1, 0), (0, 1)]],
    "crease_single": [[(0, H), (1, H)]],
    # degree-3 interior vertex
    "crease_y": [[(H, 0), (H, H)], [(H, H), (0, 1)], [(H, H), (1, 1)]],
    # preliminary base: diagonals and midlines, one degree-8 vertex
    "crease_preliminary": [[(0, 0), (1, 1)], [(1, 0), (0, 1)], [(H, 0), (H, 1)], [(0, H), (1, H)]],
    # closed diamond K crossed by both midlines at its corners
    "crease_diamond": [diamond(H, H, F(3, 10), F(3, 10)), [(H, 0), (H, 1)], [(0, H), (1, H)]],
    # self-crossing closed curve (not flat-foldable) with lines through its corners
    "crease_bowtie": [
        [(F(1, 4), F(3, 10)), (F(3, 4), F(7, 10)), (F(3, 4), F(3, 10)), (F(1, 4), F(7, 10)), (F(1, 4), F(3, 10))],
        [(0, F(1, 20)), (F(19, 20), 1)],
        [(F(1, 20), 0), (1, F(19, 20))],
        [(F(1, 20), 1), (1, F(1, 20))],
        [(0, F(19, 20)), (F(19, 20), 0)],
    ],
    # open curve with one self-crossing
    "crease_alpha": [[(0, F(1, 5)), (F(7, 10), F(7, 10)), (H, F(9, 10)), (F(3, 10), F(7, 10)), (1, F(1, 5))]],
    "crease_grid": [[(F(1, 3), 0), (F(1, 3), 1)], [(F(2, 3), 0), (F(2, 3), 1)], [(0, F(1, 3)), (1, F(1, 3))], [(0, F(2, 3)), (1, F(2, 3))]],
    # contact-tangles: a diamond touching the bottom edge
    "crease_t1": [diamond(H, F(3, 10), F(3, 10), F(3, 10)), [(0, F(3, 10)), (1, F(3, 10))]],
    # two overlapping diamonds on the sheet edge: no even component, yet some lamps are stuck
    "crease_t2": [diamond(F(3, 5), F(3, 10), F(2, 5), F(3, 10)), diamond(H, F(1, 10), F(3, 10), F(1, 10))],
    "crease_t3": [diamond(H, F(3, 10), F(3, 10), F(3, 10)), [(H, 0), (H, 1)], [(0, F(4, 5)), (1, F(4, 5))]],
    # self-crossing closed curve touching the sheet edge once
    "crease_contact_bowtie": [[(F(1, 5), 0), (F(4, 5), F(3, 5)), (F(4, 5), F(1, 5)), (F(1, 5), F(4, 5)), (F(1, 5), 0)]],
}


# Boards on the diamond pattern. Sites 0, 1, 3, 4 are the corners of K where
# it crosses the midlines; site 2 is the centre.
BOARDS = {
    # one stuck lamp between K and a midline: no solution
    "board_unsolvable": ("crease_diamond", {"0": 0}),
    # lamps OFF, ON, OFF, ON going round K: lamp-linking number 0
    "board_linking_zero": ("crease_diamond", {"0": 0, "1": 1, "4": 0, "3": 1}),
}


def main(out_dir):
    out = Path(out_dir)
    for name, lines in PATTERNS.items():
        (out / f"{name}.fold").write_text(json.dumps(build(lines), indent=1) + "\n")
    for name, (pattern, lamps) in BOARDS.items():
        board = {"diagram": build(PATTERNS[pattern]), "lamps": lamps}
        (out / f"{name}.json").write_text(json.dumps(board, indent=1) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "data")
