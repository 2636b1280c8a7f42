"""Solvers specific to complete graphs.

On a complete graph every vertex other than an edge's endpoints monitors
that edge, so any C+2 vertices form a monitoring set (C the largest
demand) and the optimum never needs more.  That bound drives everything
here: bounded exhaustive search, the sorted-prefix rule for uniform
demands, the parameterized recursion through independent sets, and the
approximation scheme for the weighted problem.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import ceil

from .core import (
    Graph,
    InputError,
    Instance,
    Solution,
    is_monitoring_set,
    max_demand,
    monitor_table,
)
from .oracle import exists_independent_set


def _require_complete(inst: Instance) -> None:
    if not inst.graph.is_complete():
        raise InputError("solver requires a complete graph")


def gamma_bounds(inst: Instance) -> tuple[int, int]:
    """(C, C+2) bracket for the optimum size; requires |V| >= C+2.

    Also certifies the upper bound by checking one concrete set of size
    C+2 against the demands.
    """
    _require_complete(inst)
    cmax = max_demand(inst)
    if inst.graph.n < cmax + 2:
        raise InputError(
            f"bounds need |V| >= C+2 = {cmax + 2}; the instance may be infeasible"
        )
    assert is_monitoring_set(inst, range(cmax + 2))
    return cmax, cmax + 2


def _enumerate_min_monitoring(
    inst: Instance, cap: int, force: int | None = None
) -> Solution:
    """Minimum-weight monitoring set of size <= cap, by exhaustive search in
    ascending cardinality then lexicographic order; the first set attaining
    the minimum weight is kept."""
    g = inst.graph
    mon = monitor_table(inst)
    demands = list(zip(g.edges, inst.demands))
    best: Solution | None = None
    others = [v for v in range(g.n) if v != force]
    for size in range(min(cap, g.n) + 1):
        if force is None:
            pool = combinations(range(g.n), size)
        elif size == 0:
            continue
        else:
            pool = ((force,) + rest for rest in combinations(others, size - 1))
        for chosen in pool:
            s = frozenset(chosen)
            if all(c == 0 or len(mon[e] & s) >= c for e, c in demands):
                w = inst.weight_of(s)
                if best is None or w < best.value:
                    best = Solution.of(s, w)
    return best if best is not None else Solution.infeasible()


def solve_complete_cbounded(inst: Instance, force: int | None = None) -> Solution:
    """Exact optimum by enumerating sets of size at most C+2; with `force`
    set, the optimum among monitoring sets containing that vertex."""
    _require_complete(inst)
    if force is not None and not (0 <= force < inst.graph.n):
        raise InputError(f"forced vertex {force} out of range")
    return _enumerate_min_monitoring(inst, max_demand(inst) + 2, force)


def solve_complete_uniform(inst: Instance) -> Solution:
    """Quasi-linear rule for k-uniform demands, k > 0: the k+2 cheapest
    vertices (ties by id) are optimal, and fewer than k+2 never suffice."""
    _require_complete(inst)
    if not inst.demands:
        raise InputError("uniform rule needs at least one edge")
    k = inst.demands[0]
    if k == 0 or not inst.is_uniform(k):
        raise InputError("uniform rule requires k-uniform demands with k > 0")
    if inst.graph.n < k + 2:
        return Solution.infeasible()
    order = sorted(range(inst.graph.n), key=lambda v: (inst.weights[v], v))
    chosen = order[: k + 2]
    return Solution.of(chosen, inst.weight_of(chosen))


def fpt_monitoring_complete(inst: Instance, k: int) -> bool:
    """Whether some monitoring set of size at most k exists.

    Recursion: demands above k kill the instance; otherwise try k-1, and
    failing that look for an independent set of size k among the vertices
    untouched by demand-k edges, using only the demand-(k-1) edges.
    """
    _require_complete(inst)
    if k < 0:
        raise InputError("k must be non-negative")
    cmax = max_demand(inst)
    if cmax > k:
        return False
    if k == 0:
        return True
    if fpt_monitoring_complete(inst, k - 1):
        return True
    blocked: set[int] = set()
    for (u, v), c in zip(inst.graph.edges, inst.demands):
        if c == k:
            blocked.add(u)
            blocked.add(v)
    survivors = [v for v in range(inst.graph.n) if v not in blocked]
    new_of = {old: new for new, old in enumerate(survivors)}
    level_edges = [
        (new_of[u], new_of[v])
        for (u, v), c in zip(inst.graph.edges, inst.demands)
        if c == k - 1 and u in new_of and v in new_of
    ]
    reduced = Graph.from_edges(len(survivors), level_edges)
    found, _ = exists_independent_set(reduced, k)
    return found


def ptas_complete(inst: Instance, epsilon) -> Solution:
    """Feasibility-exact (1+epsilon)-approximation for weighted complete
    instances.

    With k = ceil(2/epsilon): small demands are solved exactly by bounded
    enumeration; when even |V| vertices cannot meet the top demand the
    instance is infeasible; otherwise candidates mixing the C+2 cheapest
    vertices with up to k outsiders are scanned, which contains either the
    optimum or a set within the ratio.
    """
    _require_complete(inst)
    eps = Fraction(epsilon)
    if eps <= 0:
        raise InputError("epsilon must be positive")
    k = ceil(Fraction(2) / eps)
    cmax = max_demand(inst)
    n = inst.graph.n
    if cmax <= k:
        return _enumerate_min_monitoring(inst, k + 2)
    if n < cmax + 2:
        return Solution.infeasible()
    order = sorted(range(n), key=lambda v: (inst.weights[v], v))
    first = order[: cmax + 2]
    outside = sorted(set(range(n)) - set(first))
    mon = monitor_table(inst)
    demands = list(zip(inst.graph.edges, inst.demands))
    best: Solution | None = None
    for core_size in range(cmax + 3):
        for core_part in combinations(sorted(first), core_size):
            lo = max(0, cmax - core_size)
            hi = min(k, cmax + 2 - core_size, len(outside))
            for extra_size in range(lo, hi + 1):
                for extra in combinations(outside, extra_size):
                    s = frozenset(core_part + extra)
                    if all(
                        c == 0 or len(mon[e] & s) >= c for e, c in demands
                    ):
                        w = inst.weight_of(s)
                        if best is None or w < best.value:
                            best = Solution.of(s, w)
    assert best is not None, "the C+2 cheapest vertices always qualify"
    return best
