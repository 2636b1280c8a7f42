"""The line-oriented instance text format.

    # free comment lines
    p em <n> <m>
    v <id> <weight>          one per vertex, weight as num or num/den
    e <u> <v> <demand>       one per edge
    i <id> <a> <b>           optional interval realization, all vertices
    t <cotree-expression>    optional cotree certificate

Ids are 0-based.  Parsing reports the offending line number; emission is
canonical (comments, then p, v, e, i, t with sorted ids), so a parsed
canonical file re-emits byte-identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cographs import Cotree
from .core import Edge, Graph, Instance, ParseError
from .intervals import IntervalRealization


@dataclass(frozen=True)
class InstanceDocument:
    """A parsed instance file: the instance plus optional certificates and
    the comment lines that belong to it."""

    instance: Instance
    realization: IntervalRealization | None = None
    cotree: Cotree | None = None
    comments: tuple[str, ...] = ()


def _parse_weight(token: str, line_no: int) -> Fraction:
    try:
        if "/" in token:
            num, den = token.split("/", 1)
            w = Fraction(int(num), int(den))
        else:
            w = Fraction(int(token))
    except (ValueError, ZeroDivisionError):
        raise ParseError(line_no, f"bad weight {token!r}") from None
    if w < 0:
        raise ParseError(line_no, f"negative weight {token!r}")
    return w


def _int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, f"bad {what} {token!r}") from None


def parse_instance_text(text: str) -> InstanceDocument:
    n = m = None
    comments: list[str] = []
    weights: dict[int, Fraction] = {}
    edge_rows: list[tuple[int, Edge, int]] = []
    interval_rows: dict[int, tuple[int, int]] = {}
    cotree_text: str | None = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line)
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "em":
                raise ParseError(line_no, "expected 'p em <n> <m>'")
            n = _int(parts[2], line_no, "vertex count")
            m = _int(parts[3], line_no, "edge count")
            if n < 0 or m < 0:
                raise ParseError(line_no, "counts must be non-negative")
            continue
        if n is None:
            raise ParseError(line_no, "problem line must come first")
        if tag == "v":
            if len(parts) != 3:
                raise ParseError(line_no, "expected 'v <id> <weight>'")
            vid = _int(parts[1], line_no, "vertex id")
            if not 0 <= vid < n:
                raise ParseError(line_no, f"vertex id {vid} out of range")
            if vid in weights:
                raise ParseError(line_no, f"duplicate weight for vertex {vid}")
            weights[vid] = _parse_weight(parts[2], line_no)
        elif tag == "e":
            if len(parts) != 4:
                raise ParseError(line_no, "expected 'e <u> <v> <c>'")
            u = _int(parts[1], line_no, "vertex id")
            v = _int(parts[2], line_no, "vertex id")
            c = _int(parts[3], line_no, "demand")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(line_no, f"edge ({u}, {v}) out of range")
            if u == v:
                raise ParseError(line_no, f"loop edge at {u}")
            if c < 0:
                raise ParseError(line_no, "demands must be non-negative")
            e = (u, v) if u < v else (v, u)
            if any(e == prev for _, prev, _ in edge_rows):
                raise ParseError(line_no, f"duplicate edge {e}")
            edge_rows.append((line_no, e, c))
        elif tag == "i":
            if len(parts) != 4:
                raise ParseError(line_no, "expected 'i <id> <a> <b>'")
            vid = _int(parts[1], line_no, "vertex id")
            a = _int(parts[2], line_no, "endpoint")
            b = _int(parts[3], line_no, "endpoint")
            if not 0 <= vid < n:
                raise ParseError(line_no, f"vertex id {vid} out of range")
            if vid in interval_rows:
                raise ParseError(line_no, f"duplicate interval for vertex {vid}")
            if a > b:
                raise ParseError(line_no, f"reversed interval [{a}, {b}]")
            interval_rows[vid] = (a, b)
        elif tag == "t":
            if cotree_text is not None:
                raise ParseError(line_no, "duplicate cotree line")
            cotree_text = line[1:].strip()
            if not cotree_text:
                raise ParseError(line_no, "empty cotree expression")
        else:
            raise ParseError(line_no, f"unknown directive {tag!r}")

    if n is None:
        raise ParseError(1, "missing problem line 'p em <n> <m>'")
    if len(edge_rows) != m:
        raise ParseError(1, f"problem line promises {m} edges, found {len(edge_rows)}")
    graph = Graph.from_edges(n, [e for _, e, _ in edge_rows])
    demand = {e: c for _, e, c in edge_rows}
    weight = {v: weights.get(v, Fraction(1)) for v in range(n)}
    instance = Instance.make(graph, demand=demand, weight=weight)

    realization = None
    if interval_rows:
        missing = [v for v in range(n) if v not in interval_rows]
        if missing:
            raise ParseError(
                1, f"interval lines must cover every vertex (missing {missing})"
            )
        realization = IntervalRealization(
            tuple(interval_rows[v] for v in range(n))
        )

    cotree = None
    if cotree_text is not None:
        cotree = Cotree.from_expr(cotree_text)
        if sorted(cotree.leaves()) != list(range(n)):
            raise ParseError(1, "cotree leaves must be exactly 0..n-1")

    return InstanceDocument(
        instance=instance,
        realization=realization,
        cotree=cotree,
        comments=tuple(comments),
    )


def format_instance_text(doc: InstanceDocument) -> str:
    inst = doc.instance
    g = inst.graph
    lines = list(doc.comments)
    lines.append(f"p em {g.n} {g.m}")
    for v in range(g.n):
        lines.append(f"v {v} {inst.weights[v]}")
    for (u, v), c in zip(g.edges, inst.demands):
        lines.append(f"e {u} {v} {c}")
    if doc.realization is not None:
        for v, (a, b) in enumerate(doc.realization.intervals):
            lines.append(f"i {v} {a} {b}")
    if doc.cotree is not None:
        lines.append(f"t {doc.cotree.to_expr()}")
    return "\n".join(lines) + "\n"
