"""Exact baselines used as ground truth by every other solver.

The monitoring, total-domination and double-domination optima are all
instances of one weighted multi-cover problem: pick a minimum-weight vertex
set S meeting |S ∩ cand_j| >= need_j for a list of constraints.  A single
branch-and-bound engine solves that form; the public wrappers just phrase
their problem as constraints.

Determinism: among minimum-weight solutions the engine reports the
lexicographically smallest sorted vertex tuple, so golden values and
witnesses are stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    BudgetExceeded,
    Graph,
    Instance,
    Solution,
    monitor_table,
)

GAMMA_M_BUDGET = 20
DOMINATION_BUDGET = 24


@dataclass(frozen=True)
class SearchBudget:
    """Hard limits for the exact searches; instances beyond them are refused."""

    max_vertices: int = GAMMA_M_BUDGET
    node_limit: int | None = None


def _default(budget: SearchBudget | None, max_vertices: int) -> SearchBudget:
    return budget if budget is not None else SearchBudget(max_vertices=max_vertices)


def minimum_weight_cover(
    weights: Sequence[Fraction],
    constraints: Sequence[tuple[frozenset[int], int]],
    allowed: Iterable[int] | None = None,
    budget: SearchBudget | None = None,
) -> Solution:
    """Minimum-weight S ⊆ allowed with |S ∩ cand| >= need for every constraint.

    Branches on the constraint with the largest unmet residual demand,
    including or excluding its smallest undecided candidate.  The weight
    bound is the best single-constraint completion cost (sum of the
    residual-many cheapest remaining candidates); branches that cannot beat
    the incumbent are cut, equal-weight branches are kept so the
    lexicographic tie-break stays exact.
    """
    budget = budget if budget is not None else SearchBudget()
    universe = (
        frozenset(range(len(weights))) if allowed is None else frozenset(allowed)
    )
    if len(universe) > budget.max_vertices:
        raise BudgetExceeded(
            f"{len(universe)} candidate vertices exceed budget "
            f"{budget.max_vertices}"
        )
    cons = [(cand & universe, int(need)) for cand, need in constraints if need > 0]
    if any(len(cand) < need for cand, need in cons):
        return Solution.infeasible()

    nodes = 0
    best_w: Fraction | None = None
    best_set: tuple[int, ...] | None = None

    def consider(in_set: frozenset[int], w: Fraction) -> None:
        nonlocal best_w, best_set
        tup = tuple(sorted(in_set))
        if best_w is None or w < best_w or (w == best_w and tup < best_set):
            best_w, best_set = w, tup

    def recurse(in_set: frozenset[int], out_set: frozenset[int], w: Fraction):
        nonlocal nodes
        nodes += 1
        if budget.node_limit is not None and nodes > budget.node_limit:
            raise BudgetExceeded(f"node limit {budget.node_limit} exhausted")

        worst_need = 0
        worst_cands: list[int] | None = None
        bound = w
        for cand, need in cons:
            residual = need - len(cand & in_set)
            if residual <= 0:
                continue
            remaining = sorted(cand - in_set - out_set)
            if len(remaining) < residual:
                return  # constraint can no longer be met on this branch
            cheapest = sorted(weights[v] for v in remaining)[:residual]
            bound = max(bound, w + sum(cheapest, Fraction(0)))
            if residual > worst_need:
                worst_need, worst_cands = residual, remaining
        if worst_cands is None:
            consider(in_set, w)
            return
        if best_w is not None and bound > best_w:
            return
        v = worst_cands[0]
        recurse(in_set | {v}, out_set, w + weights[v])
        recurse(in_set, out_set | {v}, w)

    recurse(frozenset(), frozenset(), Fraction(0))
    if best_set is None:
        return Solution.infeasible()
    return Solution.of(best_set, best_w)


def exact_gamma_m(inst: Instance, budget: SearchBudget | None = None) -> Solution:
    """Minimum-weight monitoring set, or infeasible when some edge cannot
    gather enough monitors."""
    budget = _default(budget, GAMMA_M_BUDGET)
    mon = monitor_table(inst)
    constraints = [
        (mon[e], c) for e, c in zip(inst.graph.edges, inst.demands) if c > 0
    ]
    return minimum_weight_cover(inst.weights, constraints, budget=budget)


def exact_gamma_t(
    g: Graph, weights: Sequence[Fraction] | None = None,
    budget: SearchBudget | None = None,
) -> Solution:
    """Minimum-weight total dominating set (every vertex has a neighbor in S)."""
    budget = _default(budget, DOMINATION_BUDGET)
    weights = _unit_weights(g) if weights is None else tuple(weights)
    constraints = [(g.neighbors(v), 1) for v in range(g.n)]
    return minimum_weight_cover(weights, constraints, budget=budget)


def exact_double_dom(
    g: Graph, weights: Sequence[Fraction] | None = None,
    budget: SearchBudget | None = None,
) -> Solution:
    """Minimum-weight double dominating set (two closed neighbors in S each)."""
    budget = _default(budget, DOMINATION_BUDGET)
    weights = _unit_weights(g) if weights is None else tuple(weights)
    constraints = [(g.closed_neighbors(v), 2) for v in range(g.n)]
    return minimum_weight_cover(weights, constraints, budget=budget)


def _unit_weights(g: Graph) -> tuple[Fraction, ...]:
    return tuple(Fraction(1) for _ in range(g.n))


def exists_independent_set(
    g: Graph, k: int, budget: SearchBudget | None = None
) -> tuple[bool, tuple[int, ...] | None]:
    """Whether the graph has an independent set of size k, with a witness.

    Depth-first include/exclude over ascending vertex ids; the first hit is
    the lexicographically smallest independent set of size k.
    """
    budget = _default(budget, DOMINATION_BUDGET)
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceed budget {budget.max_vertices}")
    if k <= 0:
        return True, ()
    if k > g.n:
        return False, None

    witness: list[int] | None = None

    def search(chosen: list[int], banned: frozenset[int], next_v: int) -> bool:
        nonlocal witness
        if len(chosen) == k:
            witness = list(chosen)
            return True
        if len(chosen) + (g.n - next_v) < k:
            return False
        for v in range(next_v, g.n):
            if v in banned:
                continue
            if len(chosen) + 1 + (g.n - v - 1) < k:
                return False
            chosen.append(v)
            if search(chosen, banned | g.neighbors(v), v + 1):
                return True
            chosen.pop()
        return False

    found = search([], frozenset(), 0)
    return (True, tuple(witness)) if found else (False, None)


def maximum_independent_set(
    g: Graph, budget: SearchBudget | None = None
) -> tuple[int, ...]:
    """Lexicographically smallest maximum independent set."""
    budget = _default(budget, DOMINATION_BUDGET)
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceed budget {budget.max_vertices}")
    best: tuple[int, ...] = ()

    def search(chosen: list[int], banned: frozenset[int], next_v: int):
        nonlocal best
        if len(chosen) > len(best):
            best = tuple(chosen)
        for v in range(next_v, g.n):
            if v in banned:
                continue
            if len(chosen) + 1 + (g.n - v - 1) <= len(best):
                return
            chosen.append(v)
            search(chosen, banned | g.neighbors(v), v + 1)
            chosen.pop()

    search([], frozenset(), 0)
    return best


def exact_vertex_cover(g: Graph, budget: SearchBudget | None = None) -> Solution:
    """Minimum-cardinality vertex cover, as the complement of a maximum
    independent set."""
    mis = maximum_independent_set(g, budget)
    cover = tuple(sorted(set(range(g.n)) - set(mis)))
    return Solution.of(cover, Fraction(len(cover)))
