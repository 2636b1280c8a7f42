"""Cotree recursion for 1-uniform monitoring on cographs.

A cograph decomposes into single vertices under disjoint union and join.
Monitoring a join costs either a full solution of one side (legal only
when that side has no isolated vertex) or a total dominating set of one
side plus any single vertex of the other, so both optima are carried
bottom-up in one pass.

The total-domination recursion used here (any cross pair totally dominates
a join; a one-sided set must totally dominate its own side) is not part of
the monitoring formula itself and is gated by oracle equivalence in the
test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Graph, InputError, Instance, Solution, is_monitoring_set


@dataclass(frozen=True)
class Cotree:
    """Rooted decomposition tree: leaves are vertices, internal nodes are
    labeled union or join and have at least two children."""

    kind: str
    vertex: int | None
    children: tuple["Cotree", ...]

    @staticmethod
    def leaf(v: int) -> "Cotree":
        return Cotree("leaf", v, ())

    @staticmethod
    def node(kind: str, children: Sequence["Cotree"]) -> "Cotree":
        if kind not in ("union", "join"):
            raise InputError(f"unknown cotree node kind {kind!r}")
        if len(children) < 2:
            raise InputError("internal cotree nodes need at least two children")
        return Cotree(kind, None, tuple(children))

    def leaves(self) -> tuple[int, ...]:
        if self.kind == "leaf":
            return (self.vertex,)
        out: list[int] = []
        for child in self.children:
            out.extend(child.leaves())
        return tuple(out)

    def realize(self, n: int) -> Graph:
        """The graph this tree describes; leaves must be exactly 0..n-1."""
        leaves = self.leaves()
        if sorted(leaves) != list(range(n)):
            raise InputError("cotree leaves must be exactly 0..n-1")
        edges: list[tuple[int, int]] = []

        def walk(node: Cotree) -> tuple[int, ...]:
            if node.kind == "leaf":
                return (node.vertex,)
            parts = [walk(child) for child in node.children]
            if node.kind == "join":
                for a in range(len(parts)):
                    for b in range(a + 1, len(parts)):
                        edges.extend(
                            (u, v) for u in parts[a] for v in parts[b]
                        )
            return tuple(v for part in parts for v in part)

        walk(self)
        return Graph.from_edges(n, edges)

    def to_expr(self) -> str:
        if self.kind == "leaf":
            return f"(leaf {self.vertex})"
        inner = " ".join(child.to_expr() for child in self.children)
        return f"({self.kind} {inner})"

    @staticmethod
    def from_expr(text: str) -> "Cotree":
        tokens = text.replace("(", " ( ").replace(")", " ) ").split()
        pos = 0

        def parse() -> Cotree:
            nonlocal pos
            if pos >= len(tokens) or tokens[pos] != "(":
                raise InputError("cotree expression: expected '('")
            pos += 1
            if pos >= len(tokens):
                raise InputError("cotree expression: truncated")
            head = tokens[pos]
            pos += 1
            if head == "leaf":
                if pos >= len(tokens) or not tokens[pos].lstrip("-").isdigit():
                    raise InputError("cotree expression: leaf needs a vertex id")
                v = int(tokens[pos])
                pos += 1
                if pos >= len(tokens) or tokens[pos] != ")":
                    raise InputError("cotree expression: expected ')'")
                pos += 1
                return Cotree.leaf(v)
            children = []
            while pos < len(tokens) and tokens[pos] == "(":
                children.append(parse())
            if pos >= len(tokens) or tokens[pos] != ")":
                raise InputError("cotree expression: expected ')'")
            pos += 1
            return Cotree.node(head, children)

        tree = parse()
        if pos != len(tokens):
            raise InputError("cotree expression: trailing tokens")
        return tree


def cotree_build(g: Graph) -> Cotree | None:
    """Decompose by connectivity of the graph and of its complement;
    returns None when the graph is not a cograph (an induced P4 survives)."""

    def components_within(vs: tuple[int, ...], complement: bool):
        vset = set(vs)
        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        for start in vs:
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                x = stack.pop()
                comp.append(x)
                if complement:
                    nxt = vset - g.neighbors(x) - {x}
                else:
                    nxt = g.neighbors(x) & vset
                for y in nxt:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(tuple(sorted(comp)))
        comps.sort()
        return comps

    def build(vs: tuple[int, ...]) -> Cotree | None:
        if len(vs) == 1:
            return Cotree.leaf(vs[0])
        comps = components_within(vs, complement=False)
        if len(comps) > 1:
            kind = "union"
        else:
            comps = components_within(vs, complement=True)
            if len(comps) == 1:
                return None
            kind = "join"
        children = []
        for comp in comps:
            child = build(comp)
            if child is None:
                return None
            children.append(child)
        return Cotree.node(kind, children)

    if g.n == 0:
        raise InputError("cannot build a cotree for the empty graph")
    if g.n == 1:
        return Cotree.leaf(0)
    return build(tuple(range(g.n)))


@dataclass(frozen=True)
class NodeSummary:
    """Everything a parent node needs about a subtree's realized graph."""

    gamma_m: Solution
    gamma_t: Solution
    w_min: tuple[Fraction, int]
    has_isolated: bool
    size: int


def _sum_solutions(a: Solution, b: Solution) -> Solution:
    if not (a.feasible and b.feasible):
        return Solution.infeasible()
    return Solution.of(a.vertices + b.vertices, a.value + b.value)


def _join_gamma_t(a: NodeSummary, b: NodeSummary) -> Solution:
    # any cross pair totally dominates the join; a one-sided set must
    # totally dominate its own side
    best = Solution.of((a.w_min[1], b.w_min[1]), a.w_min[0] + b.w_min[0])
    for side in (a.gamma_t, b.gamma_t):
        if side.feasible and side.value < best.value:
            best = side
    return best


def _join_gamma_m(a: NodeSummary, b: NodeSummary) -> Solution:
    candidates: list[Solution] = []
    if a.gamma_t.feasible:
        candidates.append(
            Solution.of(
                a.gamma_t.vertices + (b.w_min[1],),
                a.gamma_t.value + b.w_min[0],
            )
        )
    if b.gamma_t.feasible:
        candidates.append(
            Solution.of(
                b.gamma_t.vertices + (a.w_min[1],),
                b.gamma_t.value + a.w_min[0],
            )
        )
    if not a.has_isolated and a.gamma_m.feasible:
        candidates.append(a.gamma_m)
    if not b.has_isolated and b.gamma_m.feasible:
        candidates.append(b.gamma_m)
    best: Solution | None = None
    for cand in candidates:
        if best is None or cand.value < best.value:
            best = cand
    return best if best is not None else Solution.infeasible()


def _combine(kind: str, a: NodeSummary, b: NodeSummary) -> NodeSummary:
    w_min = min(a.w_min, b.w_min)
    if kind == "union":
        return NodeSummary(
            gamma_m=_sum_solutions(a.gamma_m, b.gamma_m),
            gamma_t=_sum_solutions(a.gamma_t, b.gamma_t),
            w_min=w_min,
            has_isolated=a.has_isolated or b.has_isolated,
            size=a.size + b.size,
        )
    return NodeSummary(
        gamma_m=_join_gamma_m(a, b),
        gamma_t=_join_gamma_t(a, b),
        w_min=w_min,
        has_isolated=False,
        size=a.size + b.size,
    )


def _summarize(node: Cotree, weights: Sequence[Fraction]) -> NodeSummary:
    if node.kind == "leaf":
        v = node.vertex
        return NodeSummary(
            gamma_m=Solution.of((), 0),
            gamma_t=Solution.infeasible(),
            w_min=(Fraction(weights[v]), v),
            has_isolated=True,
            size=1,
        )
    acc = _summarize(node.children[0], weights)
    for child in node.children[1:]:
        acc = _combine(node.kind, acc, _summarize(child, weights))
    return acc


def gamma_t_cograph(tree: Cotree, weights: Sequence[Fraction]) -> Solution:
    """Minimum-weight total dominating set of the realized cograph."""
    return _summarize(tree, weights).gamma_t


def solve_cograph(inst: Instance, tree: Cotree | None = None) -> Solution:
    """Exact 1-uniform minimum-weight monitoring set of a cograph.

    A cotree certificate may be supplied; otherwise one is built from the
    graph.  Non-1-uniform demands are out of contract for this recursion.
    """
    if not inst.is_uniform(1):
        raise InputError("cograph recursion applies to 1-uniform demands only")
    if tree is None:
        tree = cotree_build(inst.graph)
        if tree is None:
            raise InputError("graph is not a cograph")
    realized = tree.realize(inst.graph.n)
    if realized.edges != inst.graph.edges:
        raise InputError("cotree does not realize the instance graph")
    result = _summarize(tree, inst.weights).gamma_m
    if result.feasible:
        assert is_monitoring_set(inst, result.vertices)
        assert inst.weight_of(result.vertices) == result.value
    return result
