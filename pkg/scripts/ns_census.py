"""Realizability census of all boundary-run labels of a polygon.

A run is the efficient set of some pointed two-objective bundle exactly when
the exterior angles of its interior vertices add up to less than a half-turn.
"""

from __future__ import annotations

import argparse
import math
from pathlib import Path

from molpsens import ProblemFile
from molpsens.classify import classify, enumerate_ns, realize

DEFAULT = Path(__file__).resolve().parent.parent / "data" / "example5.molp"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("file", nargs="?", default=str(DEFAULT))
    args = ap.parse_args()
    poly = ProblemFile.load(args.file).polygon()
    n = poly.n
    print("exterior angles:", ", ".join(f"v{j} {math.degrees(poly.exterior_angle(j)):.3f}" for j in range(1, n + 1)))
    table = {}
    for label in enumerate_ns(poly):
        w = realize(poly, label)
        if w.realizable:
            assert classify(poly, w.bundle) == label
        table[label.j0, label.j] = w
    print(f"\n{n * n} labels; rows j0, columns count j; '.' realizable, else sweep in degrees")
    print("j0\\j " + "".join(f"{j:>8}" for j in range(1, n + 1)))
    for j0 in range(1, n + 1):
        cells = []
        for j in range(1, n + 1):
            w = table[j0, j]
            cells.append(f"{'.':>8}" if w.realizable else f"{math.degrees(w.sweep):8.2f}")
        print(f"{j0:>4} " + "".join(cells))
    for j in range(1, n + 1):
        ok = sum(table[j0, j].realizable for j0 in range(1, n + 1))
        print(f"count {j}: {ok}/{n} realizable")


if __name__ == "__main__":
    main()
