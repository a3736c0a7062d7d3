"""Line-oriented text formats for systems, generator sets and hypergraphs.

H-representation::

    tropical-hrep 1
    d 3
    n 4
    A
    -inf -inf 0
    ...
    B
    2 -inf -inf
    ...

V-representation (``count`` section for cones; ``points``/``rays`` sections
for dehomogenized output)::

    tropical-vrep 1
    d 3
    count 4
    -inf 0 -inf
    ...

Hypergraph (``nodes`` takes either a count or a list of labels)::

    hypergraph 1
    nodes u v w
    u -> v
    v w -> u

Blank lines and lines starting with ``#`` are ignored by the parsers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cone import IneqSystem
from .hypergraph import Hypergraph
from .maxplus import Vector, format_vector, parse_scalar


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class _Lines:
    def __init__(self, text: str):
        self.items = []
        for no, raw in enumerate(text.splitlines(), start=1):
            s = raw.strip()
            if s and not s.startswith("#"):
                col = len(raw) - len(raw.lstrip()) + 1
                self.items.append((no, col, raw))
        self.pos = 0
        self.last_line = len(text.splitlines())

    def next(self, what: str):
        if self.pos >= len(self.items):
            raise ParseError(f"unexpected end of input, expected {what}", self.last_line + 1)
        item = self.items[self.pos]
        self.pos += 1
        return item

    def done(self):
        if self.pos < len(self.items):
            no, col, _ = self.items[self.pos]
            raise ParseError("trailing content", no, col)


def _tokens(raw: str):
    """Tokens with their 1-based columns."""
    out, i = [], 0
    while i < len(raw):
        if raw[i].isspace():
            i += 1
            continue
        j = i
        while j < len(raw) and not raw[j].isspace():
            j += 1
        out.append((raw[i:j], i + 1))
        i = j
    return out


def _expect_header(lines: _Lines, magic: str):
    no, col, raw = lines.next(f"'{magic} 1'")
    toks = _tokens(raw)
    if [t for t, _ in toks] != [magic, "1"]:
        raise ParseError(f"expected header '{magic} 1'", no, col)


def _keyword_int(lines: _Lines, key: str, minimum: int = 0) -> int:
    no, col, raw = lines.next(f"'{key} <int>'")
    toks = _tokens(raw)
    if len(toks) != 2 or toks[0][0] != key:
        raise ParseError(f"expected '{key} <int>'", no, col)
    try:
        value = int(toks[1][0])
    except ValueError:
        raise ParseError(f"'{toks[1][0]}' is not an integer", no, toks[1][1]) from None
    if value < minimum:
        raise ParseError(f"{key} must be at least {minimum}", no, toks[1][1])
    return value


def _row(lines: _Lines, d: int, what: str) -> Vector:
    no, col, raw = lines.next(what)
    toks = _tokens(raw)
    if len(toks) != d:
        raise ParseError(f"expected {d} scalars, found {len(toks)}", no, col)
    out = []
    for tok, c in toks:
        try:
            out.append(parse_scalar(tok))
        except ValueError:
            raise ParseError(f"invalid scalar '{tok}'", no, c) from None
    return tuple(out)


def _marker(lines: _Lines, word: str):
    no, col, raw = lines.next(f"'{word}'")
    if raw.strip() != word:
        raise ParseError(f"expected '{word}'", no, col)


def parse_hrep(text: str) -> IneqSystem:
    lines = _Lines(text)
    _expect_header(lines, "tropical-hrep")
    d = _keyword_int(lines, "d", 1)
    n = _keyword_int(lines, "n", 0)
    _marker(lines, "A")
    A = tuple(_row(lines, d, "a row of A") for _ in range(n))
    _marker(lines, "B")
    B = tuple(_row(lines, d, "a row of B") for _ in range(n))
    lines.done()
    return IneqSystem(A, B, d)


def format_hrep(S: IneqSystem) -> str:
    out = ["tropical-hrep 1", f"d {S.d}", f"n {S.n}", "A"]
    out += [format_vector(r) for r in S.A]
    out.append("B")
    out += [format_vector(r) for r in S.B]
    return "\n".join(out) + "\n"


@dataclass
class VRep:
    d: int
    rays: list[Vector]
    points: list[Vector] | None = None

    @property
    def affine(self) -> bool:
        return self.points is not None


def parse_vrep(text: str) -> VRep:
    lines = _Lines(text)
    _expect_header(lines, "tropical-vrep")
    d = _keyword_int(lines, "d", 1)
    save = lines.pos
    no, col, raw = lines.next("'count', 'points' or 'rays'")
    key = _tokens(raw)[0][0]
    lines.pos = save
    if key == "count":
        k = _keyword_int(lines, "count")
        rays = [_row(lines, d, "a generator") for _ in range(k)]
        lines.done()
        return VRep(d, rays)
    if key != "points":
        raise ParseError("expected 'count' or 'points'", no, col)
    p = _keyword_int(lines, "points")
    points = [_row(lines, d, "a point") for _ in range(p)]
    r = _keyword_int(lines, "rays")
    rays = [_row(lines, d, "a ray") for _ in range(r)]
    lines.done()
    return VRep(d, rays, points)


def format_vrep(v: VRep) -> str:
    out = ["tropical-vrep 1", f"d {v.d}"]
    if v.points is None:
        out.append(f"count {len(v.rays)}")
        out += [format_vector(r) for r in v.rays]
    else:
        out.append(f"points {len(v.points)}")
        out += [format_vector(r) for r in v.points]
        out.append(f"rays {len(v.rays)}")
        out += [format_vector(r) for r in v.rays]
    return "\n".join(out) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _Lines(text)
    _expect_header(lines, "hypergraph")
    no, col, raw = lines.next("'nodes ...'")
    toks = _tokens(raw)
    if not toks or toks[0][0] != "nodes":
        raise ParseError("expected 'nodes <count or labels>'", no, col)
    names = [t for t, _ in toks[1:]]
    if len(names) == 1 and names[0].isdigit():
        labels = [str(i) for i in range(int(names[0]))]
        symbolic = False
    else:
        labels = names
        symbolic = True
    ids: dict[str, int] = {}
    for (name, c) in toks[1:] if symbolic else []:
        if name == "->":
            raise ParseError("'->' cannot be a node label", no, c)
        if name in ids:
            raise ParseError(f"duplicate node label '{name}'", no, c)
        ids[name] = len(ids)
    if not symbolic:
        ids = {s: i for i, s in enumerate(labels)}
    edges = []
    while lines.pos < len(lines.items):
        no, col, raw = lines.next("an edge")
        toks = _tokens(raw)
        arrows = [k for k, (t, _) in enumerate(toks) if t == "->"]
        if len(arrows) != 1:
            raise ParseError("an edge needs exactly one '->'", no, col)
        k = arrows[0]
        side = []
        for part, where in ((toks[:k], "tail"), (toks[k + 1:], "head")):
            if not part:
                raise ParseError(f"empty {where}", no, toks[k][1])
            nodes = []
            for name, c in part:
                if name not in ids:
                    raise ParseError(f"unknown node '{name}'", no, c)
                nodes.append(ids[name])
            side.append(nodes)
        edges.append((side[0], side[1]))
    return Hypergraph.from_edges(len(labels), edges, labels=labels if symbolic else None)


def format_hypergraph(H: Hypergraph) -> str:
    if H.labels is None:
        out = ["hypergraph 1", f"nodes {H.node_count}"]
    else:
        out = ["hypergraph 1", "nodes " + " ".join(H.labels)]
    for t, h in H.edges:
        out.append(" ".join(H.label(v) for v in t) + " -> " + " ".join(H.label(v) for v in h))
    return "\n".join(out) + "\n"


def parse_vector(text: str) -> Vector:
    """Vector literal such as ``2,2,0``, ``(2, 5/2, -inf)`` or ``2 2 0``."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = [p for p in s.replace(",", " ").split() if p]
    if not parts:
        raise ValueError("empty vector literal")
    return tuple(parse_scalar(p) for p in parts)


def format_rays(rays: Iterable[Sequence]) -> list[str]:
    return [format_vector(r) for r in rays]
