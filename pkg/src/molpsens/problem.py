"""Text problem files.

Format (``#`` starts a comment, blank lines ignored)::

    m K
    nonneg 1          # optional, defaults to 1
    a1 a2 b           # m half-planes a1*x1 + a2*x2 <= b
    ...
    c1 c2             # K objective gradients, all maximized
    ...

Numbers may be decimals or fractions such as ``4/3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .cone import ObjectiveBundle
from .errors import ParseError
from .polytope import HalfPlane, Polygon, enumerate_vertices
from .angles import EPS, Vec


def _number(tok: str, line: int) -> float:
    try:
        if "/" in tok:
            return float(Fraction(tok))
        return float(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a number: {tok!r}", line) from None


def _format(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    frac = Fraction(x).limit_denominator(1000)
    if float(frac) == x:
        return f"{frac.numerator}/{frac.denominator}"
    return repr(x)


@dataclass(frozen=True)
class ProblemFile:
    constraints: tuple[HalfPlane, ...]
    nonneg: bool
    gradients: tuple[Vec, ...]

    @classmethod
    def parse(cls, text: str) -> "ProblemFile":
        lines = []
        for no, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0].strip()
            if body:
                lines.append((no, body.split()))
        if not lines:
            raise ParseError("empty problem file")
        no, head = lines[0]
        if len(head) != 2:
            raise ParseError("header must be 'm K'", no)
        try:
            m, K = int(head[0]), int(head[1])
        except ValueError:
            raise ParseError("header must hold two integers 'm K'", no) from None
        if m < 1:
            raise ParseError(f"need at least one constraint, got m={m}", no)
        if K < 2:
            raise ParseError(f"need at least two objectives, got K={K}", no)
        rest = lines[1:]
        nonneg = True
        if rest and rest[0][1][0].lower() == "nonneg":
            no, toks = rest[0]
            if len(toks) != 2 or toks[1] not in ("0", "1"):
                raise ParseError("flag line must be 'nonneg 0' or 'nonneg 1'", no)
            nonneg = toks[1] == "1"
            rest = rest[1:]
        if len(rest) != m + K:
            raise ParseError(
                f"expected {m} constraint lines and {K} gradient lines, found {len(rest)} lines",
                rest[-1][0] if rest else no,
            )
        constraints = []
        for i, (no, toks) in enumerate(rest[:m], start=1):
            if len(toks) != 3:
                raise ParseError(f"constraint {i} needs 'a1 a2 b'", no)
            a1, a2, b = (_number(t, no) for t in toks)
            if a1 == 0 and a2 == 0:
                raise ParseError(f"constraint {i} has a zero normal", no)
            constraints.append(HalfPlane(a1, a2, b))
        gradients = []
        for k, (no, toks) in enumerate(rest[m:], start=1):
            if len(toks) != 2:
                raise ParseError(f"gradient {k} needs 'c1 c2'", no)
            gradients.append((_number(toks[0], no), _number(toks[1], no)))
        return cls(tuple(constraints), nonneg, tuple(gradients))

    @classmethod
    def load(cls, path: str | Path) -> "ProblemFile":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from None
        return cls.parse(text)

    def dumps(self) -> str:
        out = [f"{len(self.constraints)} {len(self.gradients)}", f"nonneg {int(self.nonneg)}"]
        out += [f"{_format(h.a1)} {_format(h.a2)} {_format(h.b)}" for h in self.constraints]
        out += [f"{_format(c1)} {_format(c2)}" for c1, c2 in self.gradients]
        return "\n".join(out) + "\n"

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())

    def polygon(self, eps: float = EPS) -> Polygon:
        return enumerate_vertices(self.constraints, self.nonneg, eps)

    def bundle(self) -> ObjectiveBundle:
        return ObjectiveBundle(self.gradients)
