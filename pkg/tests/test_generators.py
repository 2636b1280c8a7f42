"""Generator determinism and certificate validity."""

import pytest
from fractions import Fraction

from edgemon import (
    GenerationError,
    InputError,
    InstanceDocument,
    SplitMix64,
    block_cut_tree,
    format_instance_text,
    feasibility_precheck,
    gen_block_graph,
    gen_cograph,
    gen_complete,
    gen_interval,
    gen_planar,
    gen_split,
    gen_unit_disk,
)

# frozen output of gen_complete(6, demand=(0, 2), seed=7); any change to the
# PRNG or to the draw order is a compatibility break
GOLDEN_K6 = (
    "p em 6 15\n"
    "v 0 1\nv 1 1\nv 2 1\nv 3 1\nv 4 1\nv 5 1\n"
    "e 0 1 0\ne 0 2 0\ne 0 3 0\ne 0 4 0\ne 0 5 1\n"
    "e 1 2 0\ne 1 3 1\ne 1 4 0\ne 1 5 2\n"
    "e 2 3 2\ne 2 4 1\ne 2 5 1\n"
    "e 3 4 0\ne 3 5 1\n"
    "e 4 5 0\n"
)


class TestSplitMix64:
    def test_known_stream_is_stable(self):
        rng = SplitMix64(0)
        first = [rng.next64() for _ in range(3)]
        rng2 = SplitMix64(0)
        assert first == [rng2.next64() for _ in range(3)]
        assert all(0 <= x < 2**64 for x in first)

    def test_distinct_seeds_diverge(self):
        assert SplitMix64(1).next64() != SplitMix64(2).next64()

    def test_chance_is_exact(self):
        rng = SplitMix64(9)
        assert all(rng.chance(Fraction(1)) for _ in range(10))
        assert not any(rng.chance(Fraction(0)) for _ in range(10))


class TestComplete:
    def test_k3_unit(self):
        inst = gen_complete(3, demand=1)
        assert inst.graph.is_complete() and inst.graph.n == 3
        assert inst.demands == (1, 1, 1)

    def test_demand_three_leaves_headroom(self):
        inst = gen_complete(5, demand=3)
        assert inst.graph.n >= 3 + 2

    def test_golden_bytes(self):
        inst = gen_complete(6, demand=(0, 2), seed=7)
        assert format_instance_text(InstanceDocument(instance=inst)) == GOLDEN_K6

    def test_seed_determinism(self):
        a = gen_complete(7, demand=(0, 3), weight=(1, 2, 8), seed=42)
        b = gen_complete(7, demand=(0, 3), weight=(1, 2, 8), seed=42)
        assert a == b
        c = gen_complete(7, demand=(0, 3), weight=(1, 2, 8), seed=43)
        assert a != c


class TestBlockGraph:
    def test_two_triangles_make_a_bowtie(self):
        inst = gen_block_graph([3, 3], seed=0)
        tree = block_cut_tree(inst.graph)
        assert len(tree.blocks) == 2
        assert all(len(b) == 3 for b in tree.blocks)
        assert len(tree.cutpoints) == 1

    def test_single_k2(self):
        inst = gen_block_graph([2])
        assert inst.graph.edges == ((0, 1),)

    def test_blocks_verify_as_cliques(self):
        inst = gen_block_graph([4, 3, 2], seed=1)
        tree = block_cut_tree(inst.graph)
        assert tree.non_clique_blocks == ()
        assert sorted(len(b) for b in tree.blocks) == [2, 3, 4]

    def test_size_one_rejected(self):
        with pytest.raises(InputError):
            gen_block_graph([3, 1])


class TestInterval:
    def test_mutual_overlap_is_k3(self):
        _, real = gen_interval(3, seed=0)
        inst, real = gen_interval(3, seed=0)
        assert real.endpoints_distinct()

    def test_certificate_matches_recomputed_intersections(self):
        inst, real = gen_interval(10, seed=3)
        g = inst.graph
        for i in range(g.n):
            for j in range(i + 1, g.n):
                a_i, b_i = real.intervals[i]
                a_j, b_j = real.intervals[j]
                assert g.has_edge(i, j) == (a_i <= b_j and a_j <= b_i)

    def test_unit_variant_equal_lengths(self):
        inst, real = gen_interval(9, lengths="unit", seed=4)
        assert real.unit_lengths()
        assert real.endpoints_distinct()
        assert inst.graph.n == 9

    @pytest.mark.parametrize("seed", range(6))
    def test_endpoints_always_distinct(self, seed):
        for lengths in ("random", "unit"):
            _, real = gen_interval(8, lengths=lengths, seed=seed)
            assert real.endpoints_distinct()


class TestCograph:
    def test_small_shapes(self):
        inst, tree = gen_cograph(2, seed=0)
        assert tree.kind in ("union", "join")
        assert sorted(tree.leaves()) == [0, 1]

    def test_realized_graph_is_p4_free(self):
        inst, _ = gen_cograph(8, seed=5)
        g = inst.graph
        from itertools import combinations, permutations

        for quad in combinations(range(g.n), 4):
            for perm in permutations(quad):
                if perm[0] > perm[3]:
                    continue
                path_edges = {
                    (min(a, b), max(a, b))
                    for a, b in zip(perm, perm[1:])
                }
                induced = {
                    (a, b)
                    for a, b in combinations(sorted(quad), 2)
                    if g.has_edge(a, b)
                }
                assert induced != path_edges, f"induced P4 at {perm}"

    def test_certificate_realizes_instance(self):
        inst, tree = gen_cograph(9, seed=2)
        assert tree.realize(9).edges == inst.graph.edges


class TestSplit:
    def test_pure_clique(self):
        inst = gen_split(3, 0)
        assert inst.graph.is_complete() and inst.graph.n == 3

    def test_star_from_full_cross(self):
        inst = gen_split(1, 2, edge_prob=Fraction(1))
        assert inst.graph.edges == ((0, 1), (0, 2))

    def test_min_degree_enforced(self):
        inst = gen_split(4, 3, edge_prob=Fraction(3, 5), seed=9, min_degree=2)
        assert all(inst.graph.degree(v) >= 2 for v in range(inst.graph.n))

    def test_impossible_degree_raises(self):
        with pytest.raises(GenerationError):
            gen_split(3, 2, edge_prob=Fraction(0), seed=0, min_degree=2, max_tries=5)

    def test_structure(self):
        inst = gen_split(4, 4, edge_prob=Fraction(1, 2), seed=5)
        g = inst.graph
        assert g.is_clique(range(4))
        assert not any(g.has_edge(a, b) for a in range(4, 8) for b in range(a + 1, 8))


class TestPlanar:
    def test_1x2_is_k2(self):
        inst = gen_planar(1, 2)
        assert inst.graph.edges == ((0, 1),)

    def test_2x2_triangulated_counts(self):
        inst = gen_planar(2, 2, triangulate=True, seed=0)
        g = inst.graph
        assert g.n == 4 and g.m == 5
        triangles = sum(
            1
            for a in range(4)
            for b in range(a + 1, 4)
            for c in range(b + 1, 4)
            if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        )
        assert triangles == 2

    def test_4x4_precheck_depends_on_boundary(self):
        inst = gen_planar(4, 4, triangulate=True, demand=1, seed=3)
        g = inst.graph
        bare = [e for e in g.edges if not (g.neighbors(e[0]) & g.neighbors(e[1]))]
        assert feasibility_precheck(inst) == (not bare)

    def test_planar_edge_budget(self):
        inst = gen_planar(5, 5, triangulate=True, seed=2)
        g = inst.graph
        assert g.m <= 3 * g.n - 6


class TestUnitDisk:
    def test_close_pair(self):
        inst, coords = gen_unit_disk(2, box=1, seed=0)
        dx = coords[0][0] - coords[1][0]
        dy = coords[0][1] - coords[1][1]
        assert inst.graph.has_edge(0, 1) == (dx * dx + dy * dy <= 4)

    def test_edges_match_distance_threshold_exactly(self):
        inst, coords = gen_unit_disk(12, box=10, seed=2)
        g = inst.graph
        for i in range(g.n):
            for j in range(i + 1, g.n):
                dx = coords[i][0] - coords[j][0]
                dy = coords[i][1] - coords[j][1]
                assert g.has_edge(i, j) == (dx * dx + dy * dy <= 4)

    def test_coordinates_are_rational(self):
        _, coords = gen_unit_disk(5, seed=1)
        assert all(isinstance(x, Fraction) for pt in coords for x in pt)


class TestDrawSpecs:
    def test_demand_range_respected(self):
        inst = gen_complete(8, demand=(1, 3), seed=11)
        assert all(1 <= c <= 3 for c in inst.demands)

    def test_weight_lattice_respected(self):
        inst = gen_complete(8, weight=(Fraction(1), Fraction(3), 4), seed=11)
        assert all(1 <= w <= 3 and (w * 4).denominator == 1 for w in inst.weights)

    def test_constant_weight_as_string(self):
        inst = gen_complete(3, weight="2/3")
        assert set(inst.weights) == {Fraction(2, 3)}
