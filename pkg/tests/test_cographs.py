"""Cotree construction and the union/join recursions."""

import pytest
from fractions import Fraction

from edgemon import (
    Cotree,
    Graph,
    InputError,
    Instance,
    SplitMix64,
    cotree_build,
    domination_predicates,
    exact_gamma_m,
    exact_gamma_t,
    gamma_t_cograph,
    gen_cograph,
    is_monitoring_set,
    solve_cograph,
)

import bruteforce as bf

P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
K4 = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


class TestCotreeBuild:
    def test_p4_is_not_a_cograph(self):
        assert cotree_build(P4) is None

    def test_k4_is_a_join(self):
        tree = cotree_build(K4)
        assert tree is not None and tree.kind == "join"
        assert tree.realize(4).edges == K4.edges

    def test_c4_is_join_of_two_pairs(self):
        tree = cotree_build(C4)
        assert tree.kind == "join"
        assert all(child.kind == "union" for child in tree.children)
        assert tree.realize(4).edges == C4.edges

    def test_single_vertex(self):
        tree = cotree_build(Graph.from_edges(1, []))
        assert tree.kind == "leaf"

    @pytest.mark.parametrize("seed", range(10))
    def test_rebuilds_generated_cographs(self, seed):
        inst, _ = gen_cograph(8, seed=seed)
        tree = cotree_build(inst.graph)
        assert tree is not None
        assert tree.realize(inst.graph.n).edges == inst.graph.edges


class TestCotreeExpr:
    def test_round_trip(self):
        tree = Cotree.node(
            "join", [Cotree.leaf(0), Cotree.node("union", [Cotree.leaf(1), Cotree.leaf(2)])]
        )
        assert tree.to_expr() == "(join (leaf 0) (union (leaf 1) (leaf 2)))"
        assert Cotree.from_expr(tree.to_expr()) == tree

    def test_bad_expr_rejected(self):
        for text in ["(join (leaf 0))", "(leaf x)", "(union (leaf 0) (leaf 1)", "leaf 0"]:
            with pytest.raises(InputError):
                Cotree.from_expr(text)


class TestGammaTCograph:
    def test_k2_takes_both(self):
        tree = Cotree.node("join", [Cotree.leaf(0), Cotree.leaf(1)])
        sol = gamma_t_cograph(tree, [Fraction(3), Fraction(5)])
        assert sol.value == 8 and sol.vertices == (0, 1)

    def test_star_crosses_cheaply(self):
        tree = Cotree.node(
            "join",
            [Cotree.leaf(0), Cotree.node("union", [Cotree.leaf(1), Cotree.leaf(2)])],
        )
        sol = gamma_t_cograph(tree, [Fraction(2), Fraction(1), Fraction(1)])
        assert sol.value == 3
        assert bf.brute_gamma_t(
            tree.realize(3), [Fraction(2), Fraction(1), Fraction(1)]
        ).value == 3

    def test_single_leaf_infeasible(self):
        assert not gamma_t_cograph(Cotree.leaf(0), [Fraction(1)]).feasible

    @pytest.mark.parametrize("seed", range(20))
    def test_matches_oracle(self, seed):
        inst, tree = gen_cograph(3 + seed % 8, seed=seed, weight=(1, 3, 4))
        mine = gamma_t_cograph(tree, inst.weights)
        ref = exact_gamma_t(inst.graph, inst.weights)
        assert mine.feasible == ref.feasible
        if mine.feasible:
            assert mine.value == ref.value
            assert domination_predicates(inst.graph, mine.vertices).total


class TestSolveCograph:
    def test_k4_join_tree(self):
        tree = cotree_build(K4)
        sol = solve_cograph(Instance.make(K4, demand=1), tree)
        assert sol.value == 3

    def test_c4_infeasible(self):
        sol = solve_cograph(Instance.make(C4, demand=1))
        assert not sol.feasible

    def test_union_of_triangles_sums(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        sol = solve_cograph(Instance.make(g, demand=1))
        assert sol.value == 6

    def test_non_uniform_rejected(self):
        inst = Instance.make(K4, demand={e: 2 for e in K4.edges})
        with pytest.raises(InputError):
            solve_cograph(inst)

    def test_wrong_cotree_rejected(self):
        tree = Cotree.node("union", [Cotree.leaf(v) for v in range(4)])
        with pytest.raises(InputError):
            solve_cograph(Instance.make(K4, demand=1), tree)

    def test_p4_without_tree_rejected(self):
        with pytest.raises(InputError):
            solve_cograph(Instance.make(P4, demand=1))

    @pytest.mark.parametrize("seed", range(25))
    def test_matches_oracle(self, seed):
        n = 3 + seed % 9
        inst, tree = gen_cograph(n, seed=seed + 11, weight=(1, 3, 4))
        mine = solve_cograph(inst, tree)
        ref = exact_gamma_m(inst)
        assert mine.feasible == ref.feasible
        if mine.feasible:
            assert mine.value == ref.value


class TestJoinStructure:
    def _join_parts(self, seed):
        rng = SplitMix64(seed)
        n1, n2 = 2 + rng.below(3), 2 + rng.below(3)
        left, ltree = gen_cograph(n1, seed=seed + 1)
        right, rtree = gen_cograph(n2, seed=seed + 2)
        shift = n1
        edges = list(left.graph.edges)
        edges += [(u + shift, v + shift) for u, v in right.graph.edges]
        edges += [(u, v + shift) for u in range(n1) for v in range(n2)]
        g = Graph.from_edges(n1 + n2, edges)
        return g, n1, n2, rng

    @pytest.mark.parametrize("seed", range(12))
    def test_total_dominating_side_monitors_cross_edges(self, seed):
        g, n1, n2, rng = self._join_parts(seed)
        left_vertices = set(range(n1))
        for _ in range(6):
            s = {v for v in left_vertices if rng.below(2)}
            # s must totally dominate the left part (within the left part)
            if not all(g.neighbors(v) & s for v in left_vertices):
                continue
            for u in range(n1):
                for v in range(n1, n1 + n2):
                    m = set(bf.common_neighbors(g, u, v))
                    assert m & s, "cross edge must be monitored"

    @pytest.mark.parametrize("seed", range(12))
    def test_mixed_sets_monitor_iff_one_side_totally_dominates(self, seed):
        g, n1, n2, rng = self._join_parts(seed + 50)
        inst = Instance.make(g, demand=1)
        left = list(range(n1))
        right = list(range(n1, n1 + n2))
        for _ in range(8):
            s1 = {v for v in left if rng.below(2)}
            s2 = {v for v in right if rng.below(2)}
            if not s1 or not s2:
                continue
            s = s1 | s2
            left_total = all(
                any(x in s1 for x in g.neighbors(v) if x < n1) for v in left
            )
            right_total = all(
                any(x in s2 for x in g.neighbors(v) if x >= n1) for v in right
            )
            assert is_monitoring_set(inst, s) == (left_total or right_total)


class TestNodeSummaries:
    def test_has_isolated_tracking(self):
        from edgemon.cographs import _summarize

        w = [Fraction(1)] * 4
        leaf = Cotree.leaf(0)
        assert _summarize(leaf, w).has_isolated
        union = Cotree.node("union", [Cotree.leaf(0), Cotree.leaf(1)])
        assert _summarize(union, w).has_isolated
        join = Cotree.node("join", [Cotree.leaf(0), Cotree.leaf(1)])
        assert not _summarize(join, w).has_isolated
        mixed = Cotree.node("union", [join, Cotree.leaf(2)])
        assert _summarize(mixed, w).has_isolated
