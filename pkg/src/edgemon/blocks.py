"""Exact solver for block graphs via leaf elimination on the block-cut tree.

Every triangle of a block graph lives inside one block, so a leaf block
can be settled by two bounded searches on its clique: the plain optimum
and the optimum forced through the articulation vertex.  The articulation
vertex then carries the price difference of those two into the remainder
as its new weight, and the remainder shrinks by one block.  Witnesses are
rebuilt afterwards by replaying the eliminations backwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Edge,
    Graph,
    InputError,
    Instance,
    Solution,
    is_monitoring_set,
    monitor_table,
    normalize_edge,
)
from .complete import solve_complete_cbounded


@dataclass(frozen=True)
class BlockCutTree:
    """Maximal biconnected components plus articulation vertices.

    Isolated vertices appear as singleton blocks.  Blocks that fail the
    clique test are flagged, not rejected, so callers decide whether the
    input qualifies as a block graph.
    """

    blocks: tuple[frozenset[int], ...]
    cutpoints: frozenset[int]
    non_clique_blocks: tuple[int, ...]

    def blocks_containing(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, blk in enumerate(self.blocks) if v in blk)


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Biconnected components by depth-first search with an edge stack."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    timer = 0
    edge_stack: list[Edge] = []
    blocks: list[frozenset[int]] = []
    cutpoints: set[int] = set()

    def pop_component(marker: Edge) -> None:
        members: set[int] = set()
        while True:
            e = edge_stack.pop()
            members.update(e)
            if e == marker:
                break
        blocks.append(frozenset(members))

    def dfs(root: int) -> None:
        nonlocal timer
        # iterative DFS; each frame is (vertex, parent, neighbor iterator)
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        root_children = 0
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    continue
                if v not in disc:
                    disc[v] = low[v] = timer
                    timer += 1
                    edge_stack.append(normalize_edge(u, v))
                    stack.append((v, u, iter(sorted(g.neighbors(v)))))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                if disc[v] < disc[u]:
                    edge_stack.append(normalize_edge(u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    if p != root or root_children > 1:
                        cutpoints.add(p)
                    pop_component(normalize_edge(p, u))

    for v in range(g.n):
        if v not in disc:
            dfs(v)
            if not g.neighbors(v):
                blocks.append(frozenset({v}))

    non_clique = tuple(
        i for i, blk in enumerate(blocks) if not g.is_clique(blk)
    )
    return BlockCutTree(
        blocks=tuple(blocks),
        cutpoints=frozenset(cutpoints),
        non_clique_blocks=non_clique,
    )


def _solve_leaf(
    inst: Instance,
    block: frozenset[int],
    weights: list[Fraction],
    force: int | None,
    uniform_rule: bool,
) -> Solution:
    """Optimum of the sub-instance induced by one clique block, under the
    current (possibly already modified) weights."""
    members = sorted(block)
    if uniform_rule:
        sol = _uniform_leaf(inst, members, weights, force)
        if sol is not None:
            return sol
    sub_graph, old_ids = inst.graph.induced(members)
    demands = tuple(
        inst.demand(old_ids[u], old_ids[v]) for u, v in sub_graph.edges
    )
    sub = Instance(
        graph=sub_graph,
        demands=demands,
        weights=tuple(weights[v] for v in old_ids),
    )
    new_force = old_ids.index(force) if force is not None else None
    sol = solve_complete_cbounded(sub, force=new_force)
    if not sol.feasible:
        return sol
    return Solution.of((old_ids[v] for v in sol.vertices), sol.value)


def _uniform_leaf(
    inst: Instance, members: list[int], weights: list[Fraction], force: int | None
) -> Solution | None:
    """Sorted-prefix shortcut when the block's demands are k-uniform with
    k > 0: the k+2 cheapest members win, or the forced vertex plus the k+1
    cheapest others.  Returns None when the shortcut does not apply."""
    levels = {
        inst.demand(u, v)
        for i, u in enumerate(members)
        for v in members[i + 1 :]
    }
    if len(levels) != 1:
        return None
    k = levels.pop()
    if k == 0:
        return None
    if len(members) < k + 2:
        return Solution.infeasible()
    order = sorted(members, key=lambda v: (weights[v], v))
    if force is None:
        chosen = order[: k + 2]
    else:
        chosen = [force] + [v for v in order if v != force][: k + 1]
    return Solution.of(chosen, sum((weights[v] for v in chosen), Fraction(0)))


def solve_block(
    inst: Instance, uniform_rule: bool = False, eliminate_last: bool = False
) -> Solution:
    """Exact minimum-weight monitoring set of a block graph.

    `uniform_rule` switches leaf solves to the sorted-prefix rule whenever
    a block is uniformly demanded; both paths must agree.
    `eliminate_last` picks the highest-index leaf block instead of the
    lowest at each step, exercising order independence.
    """
    g = inst.graph
    tree = block_cut_tree(g)
    if tree.non_clique_blocks:
        raise InputError(
            f"not a block graph: blocks {list(tree.non_clique_blocks)} are not cliques"
        )
    mon = monitor_table(inst)
    block_of_edge: dict[Edge, int] = {}
    for idx, blk in enumerate(tree.blocks):
        for u in blk:
            for v in blk:
                if u < v and g.has_edge(u, v):
                    block_of_edge[(u, v)] = idx
    for e in g.edges:
        # triangles never straddle blocks; a violation means bad input
        assert mon[e] <= tree.blocks[block_of_edge[e]]

    weights = list(inst.weights)
    total = Fraction(0)
    witness: set[int] = set()

    for comp in g.connected_components():
        comp_set = set(comp)
        active = {
            i for i, blk in enumerate(tree.blocks) if blk <= comp_set
        }
        steps: list[tuple[int, Solution, Solution]] = []
        infeasible = False
        while len(active) > 1:
            shared: dict[int, list[int]] = {}
            for i in active:
                shared[i] = [
                    v
                    for v in sorted(tree.blocks[i])
                    if sum(1 for j in active if v in tree.blocks[j]) >= 2
                ]
            leaves = sorted(i for i in active if len(shared[i]) == 1)
            leaf = leaves[-1] if eliminate_last else leaves[0]
            cut = shared[leaf][0]
            plain = _solve_leaf(inst, tree.blocks[leaf], weights, None, uniform_rule)
            if not plain.feasible:
                forced = _solve_leaf(
                    inst, tree.blocks[leaf], weights, cut, uniform_rule
                )
                assert not forced.feasible
                infeasible = True
                break
            forced = _solve_leaf(inst, tree.blocks[leaf], weights, cut, uniform_rule)
            assert forced.feasible, "forcing a vertex cannot lose feasibility"
            delta = forced.value - plain.value
            assert delta >= 0
            total += plain.value
            steps.append((cut, plain, forced))
            weights[cut] = delta
            active.remove(leaf)
        if infeasible:
            return Solution.infeasible()
        last = active.pop()
        final = _solve_leaf(inst, tree.blocks[last], weights, None, uniform_rule)
        if not final.feasible:
            return Solution.infeasible()
        total += final.value
        comp_witness = set(final.vertices)
        for cut, plain, forced in reversed(steps):
            if cut in comp_witness:
                comp_witness |= set(forced.vertices)
            else:
                comp_witness |= set(plain.vertices)
        witness |= comp_witness

    assert inst.weight_of(witness) == total
    assert is_monitoring_set(inst, witness)
    return Solution.of(witness, total)
