"""Instance model and monitoring-set semantics.

A vertex v monitors an edge {a, b} when {a, b, v} induces a triangle.  A
vertex set S satisfies an instance when every edge e has at least c(e)
monitors inside S.  Vertex weights are exact non-negative rationals;
solution values are always compared exactly, never through floats.

Graphs are immutable after construction.  Every operation in this module
is a pure function of its arguments, so concurrent use on shared instances
is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

Edge = tuple[int, int]


class InputError(ValueError):
    """An argument violates a documented precondition."""


class ParseError(InputError):
    """Malformed instance text; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class BudgetExceeded(RuntimeError):
    """A solver refused an instance larger than its search budget."""


class GenerationError(RuntimeError):
    """A generator could not satisfy its constraints within bounded retries."""


def normalize_edge(u: int, v: int) -> Edge:
    """Unordered pair as (min, max); loops are rejected."""
    if u == v:
        raise InputError(f"loop edge ({u}, {v}) is not allowed")
    return (u, v) if u < v else (v, u)


def as_weight(x) -> Fraction:
    """Coerce to a non-negative exact rational."""
    w = Fraction(x)
    if w < 0:
        raise InputError(f"negative weight {w}")
    return w


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    `edges` is the sorted tuple of normalized pairs and `adjacency[v]` the
    neighbor set of v; the two views are kept consistent by construction.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[frozenset[int], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise InputError("vertex count must be non-negative")
        seen: set[Edge] = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            e = normalize_edge(u, v)
            if not (0 <= e[0] and e[1] < n):
                raise InputError(f"edge {e} out of range for n={n}")
            if e in seen:
                raise InputError(f"duplicate edge {e}")
            seen.add(e)
            adj[e[0]].add(e[1])
            adj[e[1]].add(e[0])
        return Graph(
            n=n,
            edges=tuple(sorted(seen)),
            adjacency=tuple(frozenset(a) for a in adj),
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(
            self.has_edge(vs[i], vs[j])
            for i in range(len(vs))
            for j in range(i + 1, len(vs))
        )

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def induced(self, vs: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabeled to 0..k-1, plus the old-id lookup."""
        old_ids = tuple(sorted(set(vs)))
        if old_ids and not (0 <= old_ids[0] and old_ids[-1] < self.n):
            raise InputError("induced vertex set out of range")
        new_of = {old: new for new, old in enumerate(old_ids)}
        sub_edges = [
            (new_of[u], new_of[v])
            for u, v in self.edges
            if u in new_of and v in new_of
        ]
        return Graph.from_edges(len(old_ids), sub_edges), old_ids

    def connected_components(self) -> tuple[tuple[int, ...], ...]:
        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        for start in range(self.n):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)


@dataclass(frozen=True)
class Instance:
    """A graph with per-edge demands and per-vertex rational weights.

    `demands[i]` is the demand of `graph.edges[i]`; use `demand(u, v)` for
    keyed access.  Weights default to 1 everywhere.
    """

    graph: Graph
    demands: tuple[int, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.demands) != self.graph.m:
            raise InputError("demand table does not match the edge set")
        if any(c < 0 for c in self.demands):
            raise InputError("demands must be non-negative integers")
        if len(self.weights) != self.graph.n:
            raise InputError("weight table does not match the vertex set")
        if any(w < 0 for w in self.weights):
            raise InputError("weights must be non-negative")
        object.__setattr__(
            self,
            "_edge_index",
            {e: i for i, e in enumerate(self.graph.edges)},
        )

    @staticmethod
    def make(graph: Graph, demand=1, weight=1) -> "Instance":
        """Build from a constant or per-edge mapping demand and a constant,
        sequence, or per-vertex mapping weight."""
        if isinstance(demand, Mapping):
            table = {normalize_edge(*e): int(c) for e, c in demand.items()}
            missing = set(graph.edges) - set(table)
            extra = set(table) - set(graph.edges)
            if missing or extra:
                raise InputError(
                    f"demand map mismatch (missing {sorted(missing)}, "
                    f"unknown {sorted(extra)})"
                )
            demands = tuple(table[e] for e in graph.edges)
        else:
            demands = tuple(int(demand) for _ in graph.edges)
        if isinstance(weight, Mapping):
            weights = tuple(as_weight(weight.get(v, 1)) for v in range(graph.n))
        elif isinstance(weight, (list, tuple)):
            if len(weight) != graph.n:
                raise InputError("weight sequence does not match n")
            weights = tuple(as_weight(w) for w in weight)
        else:
            weights = tuple(as_weight(weight) for _ in range(graph.n))
        return Instance(graph=graph, demands=demands, weights=weights)

    def demand(self, u: int, v: int) -> int:
        e = normalize_edge(u, v)
        idx = self._edge_index.get(e)
        if idx is None:
            raise InputError(f"unknown edge {e}")
        return self.demands[idx]

    def demand_map(self) -> dict[Edge, int]:
        return dict(zip(self.graph.edges, self.demands))

    def weight_of(self, vs: Iterable[int]) -> Fraction:
        return sum((self.weights[v] for v in vs), Fraction(0))

    def is_uniform(self, k: int | None = None) -> bool:
        """True when all demands are equal (to k, if given); vacuously true
        on edgeless graphs."""
        if not self.demands:
            return True
        lvl = self.demands[0]
        if any(c != lvl for c in self.demands):
            return False
        return k is None or lvl == k

    def induced(self, vs: Iterable[int]) -> tuple["Instance", tuple[int, ...]]:
        """Sub-instance on `vs`, relabeled; demands and weights restricted."""
        sub, old_ids = self.graph.induced(vs)
        new_of = {old: new for new, old in enumerate(old_ids)}
        demands = tuple(
            self.demand(old_ids[u], old_ids[v]) for u, v in sub.edges
        )
        weights = tuple(self.weights[old] for old in old_ids)
        return Instance(graph=sub, demands=demands, weights=weights), old_ids


@dataclass(frozen=True)
class Solution:
    """Outcome of a minimization: a vertex set and its exact weight, or the
    infeasible marker (the optimum is unbounded / +infinity)."""

    feasible: bool
    vertices: tuple[int, ...]
    value: Fraction | None

    @staticmethod
    def of(vertices: Iterable[int], value) -> "Solution":
        return Solution(True, tuple(sorted(set(vertices))), Fraction(value))

    @staticmethod
    def infeasible() -> "Solution":
        return Solution(False, (), None)

    @property
    def status(self) -> str:
        return "feasible" if self.feasible else "infeasible"


class DominationPredicates(NamedTuple):
    dominating: bool
    total: bool
    double: bool


def _check_vertex_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range")
    return s


def monitors(g: Graph, e: tuple[int, int]) -> tuple[int, ...]:
    """The vertices forming a triangle with edge e, in ascending order."""
    u, v = normalize_edge(*e)
    if not g.has_edge(u, v):
        raise InputError(f"unknown edge {(u, v)}")
    return tuple(sorted((g.neighbors(u) & g.neighbors(v)) - {u, v}))


def monitor_table(inst: Instance) -> dict[Edge, frozenset[int]]:
    """Monitor sets of all edges, precomputed once for solver loops."""
    g = inst.graph
    return {
        (u, v): frozenset((g.neighbors(u) & g.neighbors(v)) - {u, v})
        for u, v in g.edges
    }


def is_monitoring_set(inst: Instance, s: Iterable[int]) -> bool:
    """True iff every edge e has at least c(e) monitors inside s."""
    s = _check_vertex_set(inst.graph, s)
    g = inst.graph
    for (u, v), c in zip(g.edges, inst.demands):
        if c == 0:
            continue
        if len((g.neighbors(u) & g.neighbors(v)) & s) < c:
            return False
    return True


def max_demand(inst: Instance) -> int:
    """Largest edge demand; 0 on edgeless graphs."""
    return max(inst.demands, default=0)


def domination_predicates(g: Graph, s: Iterable[int]) -> DominationPredicates:
    """(dominating, total, double): N[s]=V, every vertex has a neighbor in s,
    and every vertex has at least two closed neighbors in s."""
    s = _check_vertex_set(g, s)
    dominating = all(v in s or g.neighbors(v) & s for v in range(g.n))
    total = all(g.neighbors(v) & s for v in range(g.n))
    double = all(len(g.closed_neighbors(v) & s) >= 2 for v in range(g.n))
    return DominationPredicates(dominating, total, double)


def feasibility_precheck(inst: Instance) -> bool:
    """True iff no edge demands more monitors than it has.

    Equivalent to `is_monitoring_set(inst, V)`: taking every vertex is
    feasible exactly when each demand fits inside the edge's monitor set.
    """
    g = inst.graph
    for (u, v), c in zip(g.edges, inst.demands):
        if c > len((g.neighbors(u) & g.neighbors(v)) - {u, v}):
            return False
    return True
