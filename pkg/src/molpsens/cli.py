"""Command-line front end.

Exit status: 0 success, 1 output file not writable, 2 unreadable/malformed
input, 3 geometric failure (empty/unbounded region, wide cone, ...),
4 pipeline/oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

import numpy as np

from .angles import EPS, to_polar
from .classify import classify, enumerate_ns, realize
from .cone import extreme_rays
from .efficient_set import efficient_chain
from .errors import GeometryError, ParseError
from .instances import random_instance
from .oracle import bruteforce_efficient, face_vertices
from .polytope import boundary_curve
from .problem import ProblemFile, _format
from .sensitivity import is_equivalent, molp_sensitivity, sample_member
from .svg import FileWriteError, emit_svg

EXIT_OK, EXIT_WRITE, EXIT_PARSE, EXIT_GEOMETRY, EXIT_MISMATCH = 0, 1, 2, 3, 4


def _d(rad: float) -> str:
    return f"{math.degrees(rad):.3f}\N{DEGREE SIGN}"


def _pt(p) -> str:
    return f"({_format(round(p[0], 12))}, {_format(round(p[1], 12))})"


class Report:
    def __init__(self):
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, s: str = "") -> None:
        self.lines.append(s)


def cmd_vertices(args, rep: Report) -> int:
    prob = ProblemFile.load(args.file)
    poly = prob.polygon(args.epsilon)
    rep.data["vertices"] = [list(v) for v in poly.vertices]
    rep.line(f"|V(S)| = {poly.n}")
    for j, v in enumerate(poly.vertices, start=1):
        rep.line(f"v{j} = {_pt(v)}")
    return EXIT_OK


def cmd_cone(args, rep: Report) -> int:
    prob = ProblemFile.load(args.file)
    bundle = prob.bundle()
    cone = extreme_rays(bundle, args.epsilon)
    rep.data.update(k1=cone.k1, k2=cone.k2, phi1=cone.phi1, phi2=cone.phi2, width=cone.width)
    rep.data["phi"] = [to_polar(g, cone.center).phi for g in bundle.gradients]
    for k, g in enumerate(bundle.gradients, start=1):
        pv = to_polar(g, cone.center)
        rep.line(f"c{k} = {pv.r:.6g} (cos {_d(pv.phi)}, sin {_d(pv.phi)})")
    rep.line(f"k1 = {cone.k1}  phi(k1) = {_d(cone.phi1)}")
    rep.line(f"k2 = {cone.k2}  phi(k2) = {_d(cone.phi2)}")
    rep.line(f"cone width = {_d(cone.width)}")
    return EXIT_OK


def cmd_efficient(args, rep: Report) -> int:
    prob = ProblemFile.load(args.file)
    poly, bundle = prob.polygon(args.epsilon), prob.bundle()
    es = efficient_chain(poly, bundle, args.epsilon)
    segs = boundary_curve(poly, es.chain)
    rep.data.update(
        vs=list(es.vs),
        chain={"start": es.chain.start, "count": es.chain.count},
        segments=[[list(a), list(b)] for a, b in segs],
        k1=es.cone.k1,
        k2=es.cone.k2,
    )
    rep.line(f"extreme rays: c{es.cone.k1}, c{es.cone.k2}")
    rep.line("VS = {" + ", ".join(f"v{j}" for j in es.vs) + "}")
    for j in es.vs:
        rep.line(f"  v{j} = {_pt(poly.vertex(j))}")
    if segs:
        pieces = [f"H{{v{a}, v{b}}}" for a, b in zip(es.vs, es.vs[1:])]
        rep.line(f"S = {es.chain} = " + " u ".join(pieces))
    else:
        rep.line(f"S = {es.chain} = {{v{es.chain.start}}}")
    if args.svg:
        emit_svg(poly, es.cone, es.chain, bundle, args.svg)
        rep.line(f"wrote {args.svg}")
    return EXIT_OK


def cmd_sensitivity(args, rep: Report) -> int:
    prob = ProblemFile.load(args.file)
    poly, bundle = prob.polygon(args.epsilon), prob.bundle()
    cls = molp_sensitivity(poly, bundle, args.epsilon)
    rep.data.update(
        g1=list(cls.g1),
        g2=list(cls.g2),
        phi1=cls.phi1,
        phi2=cls.phi2,
        tolerance=[cls.tolerance.lo, cls.tolerance.hi],
        pointed=[cls.pointed.lo, cls.pointed.hi],
        chain={"start": cls.chain.start, "count": cls.chain.count},
    )
    rep.line(f"generators: g1 = {_pt(cls.g1)} (phi = {_d(cls.phi1)}), "
             f"g2 = {_pt(cls.g2)} (phi = {_d(cls.phi2)})")
    rep.line(f"\N{LATIN CAPITAL LETTER I WITH CIRCUMFLEX} = {cls.tolerance.format()}")
    rep.line(f"pointed sub-window = {cls.pointed.format()}")
    rep.line(f"efficient set = {cls.chain}")
    rep.line("members: " + cls.template())
    return EXIT_OK


def cmd_classify(args, rep: Report) -> int:
    prob = ProblemFile.load(args.file)
    poly, bundle = prob.polygon(args.epsilon), prob.bundle()
    label = classify(poly, bundle, args.epsilon)
    idx = label.chain.indices(poly)
    rep.data.update(j0=label.j0, j=label.j, vertices=idx)
    rep.line(f"class {label}  (j0 = {label.j0}, j = {label.j})")
    rep.line("chain: " + " - ".join(f"v{j}" for j in idx))
    return EXIT_OK


def cmd_classes(args, rep: Report) -> int:
    prob = ProblemFile.load(args.file)
    poly = prob.polygon(args.epsilon)
    labels = enumerate_ns(poly)
    rows = []
    for lab in labels:
        w = realize(poly, lab)
        rows.append({"j0": lab.j0, "j": lab.j, "realizable": w.realizable, "sweep": w.sweep})
        status = "realizable" if w.realizable else f"unrealizable (needs {_d(w.sweep)} >= 180\N{DEGREE SIGN})"
        rep.line(f"{str(lab):>8}  {status}")
    rep.data["labels"] = rows
    rep.line(f"{len(labels)} labels = {poly.n}^2; "
             f"{sum(r['realizable'] for r in rows)} realizable by a pointed cone")
    return EXIT_OK


def _parse_angles(text: str) -> list[float]:
    if not text.strip():
        return []
    try:
        return [math.radians(float(t)) for t in text.split(",")]
    except ValueError:
        raise ParseError(f"--angles must be comma-separated degrees, got {text!r}") from None


def cmd_member(args, rep: Report) -> int:
    prob = ProblemFile.load(args.file)
    poly, bundle = prob.polygon(args.epsilon), prob.bundle()
    angles = _parse_angles(args.angles)
    if args.k < 2 or len(angles) != args.k - 2:
        raise ParseError(f"--k {args.k} needs exactly K-2 angles, got {len(angles)}")
    cls = molp_sensitivity(poly, bundle, args.epsilon)
    member = sample_member(cls, args.k, angles, args.epsilon)
    rep.data["gradients"] = [list(g) for g in member.gradients]
    for g in member.gradients:
        rep.line(f"{g[0]!r} {g[1]!r}")
    return EXIT_OK


def cmd_equiv(args, rep: Report) -> int:
    a, b = ProblemFile.load(args.file_a), ProblemFile.load(args.file_b)
    poly = a.polygon(args.epsilon)
    poly_b = b.polygon(args.epsilon)
    same = poly_b.n == poly.n and np.allclose(
        poly_b.as_array(), poly.as_array(), atol=args.epsilon, rtol=0
    )
    if not same:
        raise GeometryError("the two files describe different feasible polygons")
    eq = is_equivalent(poly, a.bundle(), b.bundle(), args.epsilon)
    rep.data["equivalent"] = eq
    rep.line(f"equivalent: {'true' if eq else 'false'}")
    return EXIT_OK


def _compare(poly, bundle, grid, eps):
    es = efficient_chain(poly, bundle, eps)
    oracle = face_vertices(bruteforce_efficient(poly, bundle, grid, eps))
    return set(es.vs), oracle


def _trial(seed_grid_eps):
    seed, grid, eps = seed_grid_eps
    rng = np.random.default_rng(seed)
    poly, bundle = random_instance(rng)
    pipe, orc = _compare(poly, bundle, grid, eps)
    return seed, pipe == orc


def cmd_verify(args, rep: Report) -> int:
    ok = True
    results = []
    for f in args.files:
        prob = ProblemFile.load(f)
        poly, bundle = prob.polygon(args.epsilon), prob.bundle()
        pipe, orc = _compare(poly, bundle, args.grid, args.epsilon)
        match = pipe == orc
        ok &= match
        results.append({"file": f, "match": match, "pipeline": sorted(pipe), "oracle": sorted(orc)})
        rep.line(f"{f}: {'ok' if match else 'MISMATCH'}  pipeline {sorted(pipe)}  oracle {sorted(orc)}")
    if args.trials:
        jobs = [(args.seed + i, args.grid, args.epsilon) for i in range(args.trials)]
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as ex:
                outcomes = sorted(ex.map(_trial, jobs))
        else:
            outcomes = [_trial(j) for j in jobs]
        bad = [s for s, m in outcomes if not m]
        ok &= not bad
        rep.line(f"random trials: {args.trials - len(bad)}/{args.trials} agree"
                 + (f"; mismatching seeds {bad}" if bad else ""))
        rep.data["trials"] = {"count": args.trials, "mismatched_seeds": bad}
    rep.data["files"] = results
    rep.data["ok"] = ok
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_plot(args, rep: Report) -> int:
    prob = ProblemFile.load(args.file)
    poly, bundle = prob.polygon(args.epsilon), prob.bundle()
    es = efficient_chain(poly, bundle, args.epsilon)
    emit_svg(poly, es.cone, es.chain, bundle, args.output)
    rep.data["output"] = str(args.output)
    rep.line(f"wrote {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="molpsens",
        description="Geometric sensitivity analysis of 2D multiobjective linear programs.",
    )
    p.add_argument("--epsilon", type=float, default=EPS, help="global tolerance (default 1e-9)")
    p.add_argument("--json", action="store_true", help="structured output (angles in radians)")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file")
        sp.set_defaults(func=func)
        return sp

    with_file("vertices", cmd_vertices, "list the polygon vertices in CCW order")
    with_file("cone", cmd_cone, "gradient polar forms and the two extreme rays")
    sp = with_file("efficient", cmd_efficient, "efficient extreme points and chain")
    sp.add_argument("--svg", help="also write an SVG sketch to this path")
    with_file("sensitivity", cmd_sensitivity, "tolerance interval of the objective bundle")
    with_file("classify", cmd_classify, "class label (j0, j) of the instance")
    with_file("classes", cmd_classes, "all boundary-run labels of the polygon")
    sp = with_file("member", cmd_member, "emit a bundle from the sensitivity class")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--angles", default="", help="K-2 comma-separated absolute angles in degrees")
    sp = sub.add_parser("equiv", help="do two instances share the efficient set?")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.set_defaults(func=cmd_equiv)
    sp = sub.add_parser("verify", help="compare the pipeline with the brute-force oracle")
    sp.add_argument("files", nargs="*")
    sp.add_argument("--grid", type=int, default=500)
    sp.add_argument("--trials", type=int, default=0, help="also run N random instances")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)
    sp = with_file("plot", cmd_plot, "write an SVG sketch")
    sp.add_argument("-o", "--output", required=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    rep = Report()
    try:
        status = args.func(args, rep)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except FileWriteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WRITE
    if args.json:
        print(json.dumps({"command": args.command, **rep.data}, indent=2))
    else:
        print("\n".join(rep.lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
