"""Layered (1+epsilon)-approximation for planar-like instances.

Vertices are grouped into breadth-first layers; every edge stays inside a
layer or crosses to the next one.  For a width k, each band of k
consecutive layers is solved exactly inside its two-layer-padded region,
the per-band optima are unioned, and the best of the k possible band
offsets is returned.  Any band's subproblem is solved by the exact
branch-and-bound engine rather than a tree-decomposition routine; the
approximation factor (k+2)/k only needs band optimality, so the guarantee
is unaffected while worst-case polynomiality is given up.  Planarity
itself is trusted, with an edge-count sanity warning.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .core import (
    Graph,
    InputError,
    Instance,
    Solution,
    feasibility_precheck,
    is_monitoring_set,
    monitor_table,
)
from .oracle import BudgetExceeded, SearchBudget, minimum_weight_cover


@dataclass(frozen=True)
class Layering:
    """Breadth-first layers from a root; layers[i] holds the vertices at
    distance i, and every edge spans at most one level."""

    root: int
    layers: tuple[frozenset[int], ...]
    unreached: frozenset[int]

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def slice(self, lo: int, hi: int) -> frozenset[int]:
        """Union of layers lo..hi, indices outside the range being empty."""
        out: set[int] = set()
        for i in range(max(lo, 0), min(hi, self.depth) + 1):
            out |= self.layers[i]
        return frozenset(out)


def bfs_layering(g: Graph, root: int) -> Layering:
    if not (0 <= root < g.n):
        raise InputError(f"root {root} out of range")
    level = {root: 0}
    frontier = [root]
    layers: list[frozenset[int]] = []
    while frontier:
        layers.append(frozenset(frontier))
        nxt: list[int] = []
        for u in frontier:
            for v in sorted(g.neighbors(u)):
                if v not in level:
                    level[v] = level[u] + 1
                    nxt.append(v)
        frontier = nxt
    for u, v in g.edges:
        if u in level and v in level:
            assert abs(level[u] - level[v]) <= 1
    return Layering(
        root=root,
        layers=tuple(layers),
        unreached=frozenset(set(range(g.n)) - set(level)),
    )


def solve_band(
    inst: Instance,
    band: frozenset[int],
    region: frozenset[int],
    budget: SearchBudget | None = None,
) -> Solution:
    """Exact cheapest set inside `region` covering every demand on edges
    that touch `band`; edges entirely outside the band are ignored."""
    band, region = frozenset(band), frozenset(region)
    if not band <= region:
        raise InputError("band must be contained in its region")
    mon = monitor_table(inst)
    constraints = [
        (mon[e] & region, c)
        for e, c in zip(inst.graph.edges, inst.demands)
        if c > 0 and (e[0] in band or e[1] in band)
    ]
    try:
        return minimum_weight_cover(
            inst.weights, constraints, allowed=region, budget=budget
        )
    except BudgetExceeded as exc:
        raise BudgetExceeded(f"band region of {len(region)} vertices: {exc}") from exc


def ptas_planar(
    inst: Instance, epsilon, budget: SearchBudget | None = None
) -> Solution:
    """(k+2)/k-approximation with k = ceil(2/epsilon), per component.

    A failed demand precheck means no monitoring set exists at all.  After
    it passes, every band subproblem is feasible, each offset's union
    monitors the whole component, and the cheapest offset is kept."""
    eps = Fraction(epsilon)
    if eps <= 0:
        raise InputError("epsilon must be positive")
    k = ceil(Fraction(2) / eps)
    g = inst.graph
    if not feasibility_precheck(inst):
        return Solution.infeasible()
    if g.n >= 3 and g.m > 3 * g.n - 6:
        warnings.warn("edge count exceeds the planar bound 3n-6", stacklevel=2)

    total = Fraction(0)
    witness: set[int] = set()
    for comp in g.connected_components():
        layering = bfs_layering(g, comp[0])
        depth = layering.depth
        best_w: Fraction | None = None
        best_set: set[int] | None = None
        for offset in range(k):
            picked: set[int] = set()
            covered: set[int] = set()
            for j in range(-1, -(-depth // k) + 1):
                start = offset + k * j
                band = layering.slice(start, start + k - 1)
                region = layering.slice(start - 1, start + k)
                covered |= band
                if not region:
                    continue
                sol = solve_band(inst, band, region, budget)
                assert sol.feasible, "precheck guarantees band feasibility"
                picked |= set(sol.vertices)
            assert covered == set(comp), "bands of one offset must cover all layers"
            w = inst.weight_of(picked)
            if best_w is None or w < best_w:
                best_w, best_set = w, picked
        total += best_w
        witness |= best_set

    assert inst.weight_of(witness) == total
    assert is_monitoring_set(inst, witness)
    return Solution.of(witness, total)
