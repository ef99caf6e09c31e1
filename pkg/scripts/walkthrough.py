"""Step-by-step analysis of a problem file (defaults to the nine-vertex example)."""

from __future__ import annotations

import argparse
import math
from pathlib import Path

from molpsens import (
    ProblemFile,
    classify,
    edge_angles,
    efficient_chain,
    extreme_rays,
    molp_sensitivity,
    sample_member,
    to_polar,
)
from molpsens.efficient_set import reduce_to_tolp
from molpsens.sensitivity import is_equivalent

DEFAULT = Path(__file__).resolve().parent.parent / "data" / "example5.molp"


def deg(x: float) -> str:
    return f"{math.degrees(x):8.3f}"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("file", nargs="?", default=str(DEFAULT))
    args = ap.parse_args()

    prob = ProblemFile.load(args.file)
    poly, bundle = prob.polygon(), prob.bundle()
    print(f"vertices ({poly.n}):")
    for j, v in enumerate(poly.vertices, start=1):
        print(f"  v{j} = ({v[0]:g}, {v[1]:g})")

    cone = extreme_rays(bundle)
    print("\ngradients in polar form (branch centred on the cone bisector):")
    for k, g in enumerate(bundle.gradients, start=1):
        p = to_polar(g, cone.center)
        print(f"  c{k}: r = {p.r:.6f}  phi = {deg(p.phi)} deg")
    print(f"extreme rays: k1 = {cone.k1}, k2 = {cone.k2}, width {deg(cone.width)} deg")

    es = efficient_chain(poly, bundle)
    print(f"\nefficient vertices: {', '.join(f'v{j}' for j in es.vs)}")
    print(f"chain: {es.chain}   class label: {classify(poly, bundle)}")

    first, last = es.chain.start, es.chain.end(poly)
    t1, _, r1, _ = edge_angles(poly, first, cone.center)
    _, t2, _, r2 = edge_angles(poly, last, cone.center)
    print(f"\nincoming edge at v{first}: {r1:.6f} at {deg(t1)} deg")
    print(f"outgoing edge at v{last}: {r2:.6f} at {deg(t2)} deg")

    cls = molp_sensitivity(poly, bundle)
    print(f"tolerance interval: {cls.tolerance}")
    print(f"pointed sub-window: {cls.pointed}")
    print("member template:", cls.template())

    tolp = reduce_to_tolp(bundle)
    print(f"\ntwo-objective reduction {tolp.gradients} equivalent: {is_equivalent(poly, bundle, tolp)}")
    mid = cls.pointed.midpoint
    member = sample_member(cls, 3, [mid])
    print(f"member with an extra gradient at {deg(mid).strip()} deg keeps the chain: "
          f"{efficient_chain(poly, member).chain == es.chain}")


if __name__ == "__main__":
    main()
