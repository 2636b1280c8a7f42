"""Instance transformers with machine-checkable optimum relations.

Each construction rewrites a source graph into a 1-uniform, unit-weight
monitoring instance whose optimum is pinned to a classical quantity of the
source: total domination plus three (triangle-apex construction), total
domination plus one (universal vertex over a bipartite graph), independent
sets of complete demand-graded instances, and vertex cover through
diamond-chain gadgets that embed as unit disks.  The split-graph search
exploits that a clique-side double dominating set of size at least three
is already a monitoring set.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .core import (
    Edge,
    Graph,
    InputError,
    Instance,
    Solution,
    is_monitoring_set,
)
from .oracle import DOMINATION_BUDGET, SearchBudget, minimum_weight_cover

Point = tuple[Fraction, Fraction]


def reduce_tds_to_em(g: Graph) -> Instance:
    """Attach a triangle {u, v, w} with u adjacent to every original vertex;
    monitoring the result costs exactly total domination of g plus 3."""
    if any(not g.neighbors(v) for v in range(g.n)):
        raise InputError("source graph must have no isolated vertices")
    u, v, w = g.n, g.n + 1, g.n + 2
    edges = list(g.edges)
    edges += [(x, u) for x in range(g.n)]
    edges += [(u, v), (u, w), (v, w)]
    return Instance.make(Graph.from_edges(g.n + 3, edges), demand=1, weight=1)


def reduce_is_to_em(g: Graph, k: int) -> Instance:
    """Complete graph keeping demand k-1 on original edges and 0 elsewhere;
    a monitoring set of size <= k exists iff g has an independent set of
    size k."""
    if k < 1:
        raise InputError("k must be at least 1")
    if len(g.connected_components()) != 1:
        raise InputError("source graph must be connected")
    edges = [(a, b) for a in range(g.n) for b in range(a + 1, g.n)]
    original = set(g.edges)
    demand = {e: (k - 1 if e in original else 0) for e in edges}
    return Instance.make(Graph.from_edges(g.n, edges), demand=demand, weight=1)


def _two_color(g: Graph) -> bool:
    color: dict[int, int] = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            x = queue.pop()
            for y in g.neighbors(x):
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def reduce_bip_tds_to_comparability(g: Graph) -> Instance:
    """Add one universal vertex to a bipartite graph; the image is a
    comparability graph whose monitoring optimum is total domination of g
    plus 1."""
    if any(not g.neighbors(v) for v in range(g.n)):
        raise InputError("source graph must have no isolated vertices")
    if not _two_color(g):
        raise InputError("source graph must be bipartite")
    hub = g.n
    edges = list(g.edges) + [(x, hub) for x in range(g.n)]
    return Instance.make(Graph.from_edges(g.n + 1, edges), demand=1, weight=1)


def reduce_planar_vc_to_udg(
    g: Graph,
    chain_lengths: int | Mapping[Edge, int] = 1,
    embedding: Mapping[Edge, list[tuple[int, int]]] | None = None,
) -> tuple[Instance, dict[int, Point] | None]:
    """Replace each edge by a chain of 2n_i+1 diamonds.

    Edge {u, v} becomes a path of hub vertices u = a_0, ..., a_{2n_i+1} = v
    where consecutive hubs are joined through a pendant pair b, b' (each
    adjacent to both hubs and to each other); the original edge disappears.
    Monitoring the image costs vertex cover of g plus the sum of 5n_i+2.

    With an embedding (an axis-parallel polyline per edge, total length
    3*(2n_i+1), corners only at multiples of 3 along the line), vertex
    coordinates are computed and validated against the distance-2
    adjacency rule.  Straight or well-separated polylines validate; the
    exact check rejects layouts whose diamonds collide (sharp corners
    do).  The instance itself never needs coordinates.
    """
    if any(g.degree(v) > 3 for v in range(g.n)):
        raise InputError("source graph must have maximum degree 3")
    lengths: dict[Edge, int] = {}
    for e in g.edges:
        ni = chain_lengths[e] if isinstance(chain_lengths, Mapping) else chain_lengths
        if ni < 1:
            raise InputError("chain lengths must be at least 1")
        lengths[e] = int(ni)

    edges: list[Edge] = []
    next_id = g.n
    chains: dict[Edge, tuple[list[int], list[int], list[int]]] = {}
    for e in g.edges:
        u, v = e
        ni = lengths[e]
        hubs = [u] + list(range(next_id, next_id + 2 * ni)) + [v]
        next_id += 2 * ni
        pend, pend2 = [], []
        for j in range(2 * ni + 1):
            b, b2 = next_id, next_id + 1
            next_id += 2
            pend.append(b)
            pend2.append(b2)
            edges += [
                (hubs[j], b),
                (hubs[j], b2),
                (b, hubs[j + 1]),
                (b2, hubs[j + 1]),
                (b, b2),
            ]
        chains[e] = (hubs, pend, pend2)
    image = Instance.make(Graph.from_edges(next_id, edges), demand=1, weight=1)
    if embedding is None:
        return image, None
    coords = _embed_chains(image.graph, chains, lengths, embedding)
    return image, coords


def _embed_chains(
    gimage: Graph,
    chains: dict[Edge, tuple[list[int], list[int], list[int]]],
    lengths: dict[Edge, int],
    embedding: Mapping[Edge, list[tuple[int, int]]],
) -> dict[int, Point]:
    coords: dict[int, Point] = {}

    def place(vertex: int, point: Point) -> None:
        if vertex in coords and coords[vertex] != point:
            raise InputError(f"conflicting positions for vertex {vertex}")
        coords[vertex] = point

    for e, (hubs, pend, pend2) in chains.items():
        line = embedding.get(e)
        if line is None:
            raise InputError(f"embedding missing polyline for edge {e}")
        segs: list[tuple[Point, Point, int]] = []
        total = 0
        for (x1, y1), (x2, y2) in zip(line, line[1:]):
            if (x1 != x2) == (y1 != y2):
                raise InputError("polyline segments must be axis-parallel")
            if total % 3 != 0:
                raise InputError("polyline corners must sit at multiples of 3")
            length = abs(x2 - x1) + abs(y2 - y1)
            segs.append(((Fraction(x1), Fraction(y1)), (Fraction(x2), Fraction(y2)), length))
            total += length
        needed = 3 * (2 * lengths[e] + 1)
        if total != needed:
            raise InputError(
                f"polyline for {e} has length {total}, the chain needs {needed}"
            )

        def at(dist: Fraction) -> tuple[Point, Point]:
            """Point at arclength `dist`, plus the unit direction there."""
            left = dist
            for (sx, sy), (ex, ey), length in segs:
                if left <= length:
                    dx = (ex > sx) - (ex < sx)
                    dy = (ey > sy) - (ey < sy)
                    return (sx + dx * left, sy + dy * left), (Fraction(dx), Fraction(dy))
                left -= length
            raise InputError("arclength beyond polyline")

        for t, hub in enumerate(hubs):
            place(hub, at(Fraction(3 * t))[0])
        for j, (b, b2) in enumerate(zip(pend, pend2)):
            (mx, my), (dx, dy) = at(Fraction(6 * j + 3, 2))
            place(b, (mx - dy, my + dx))
            place(b2, (mx + dy, my - dx))

    if len(coords) != gimage.n:
        raise InputError("embedding does not place every vertex")
    for i in range(gimage.n):
        for j in range(i + 1, gimage.n):
            dx = coords[i][0] - coords[j][0]
            dy = coords[i][1] - coords[j][1]
            close = dx * dx + dy * dy <= 4
            if close != gimage.has_edge(i, j):
                raise InputError(
                    f"embedding breaks the unit-disk rule between {i} and {j}"
                )
    return coords


def split_partition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Clique/independent partition of a split graph via the degree
    sequence criterion; None when the graph is not split."""
    if g.n == 0:
        return (), ()
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = max((i for i in range(1, g.n + 1) if degs[i - 1] >= i - 1), default=0)
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None

    def valid(k_side: list[int]) -> bool:
        i_side = [v for v in range(g.n) if v not in set(k_side)]
        return g.is_clique(k_side) and not any(
            g.has_edge(a, b) for x, a in enumerate(i_side) for b in i_side[x + 1 :]
        )

    k_side = order[:m]
    if valid(k_side):
        return tuple(sorted(k_side)), tuple(sorted(set(range(g.n)) - set(k_side)))
    # equal-degree vertices at the boundary may need swapping
    boundary = degs[m - 1]
    ins = [v for v in k_side if g.degree(v) == boundary]
    outs = [v for v in order[m:] if g.degree(v) == boundary]
    for a in ins:
        for b in outs:
            candidate = [v for v in k_side if v != a] + [b]
            if valid(candidate):
                return (
                    tuple(sorted(candidate)),
                    tuple(sorted(set(range(g.n)) - set(candidate))),
                )
    return None


def split_gamma_m(
    g: Graph,
    clique: Iterable[int],
    independent: Iterable[int],
    budget: SearchBudget | None = None,
) -> Solution:
    """Minimum 1-uniform monitoring set of a split graph.

    Searches clique-side double dominating sets of size at least 3, which
    are exactly the clique-side monitoring sets: three clique vertices
    cover every clique edge, and double domination of an independent
    vertex leaves a second neighbor for each of its edges.  Needs minimum
    degree 2 and a clique side of size at least 3.
    """
    clique = frozenset(clique)
    independent = frozenset(independent)
    if clique & independent or clique | independent != set(range(g.n)):
        raise InputError("clique and independent sides must partition the vertices")
    if not g.is_clique(clique):
        raise InputError("clique side is not a clique")
    if any(
        g.has_edge(a, b) for a in independent for b in independent if a < b
    ):
        raise InputError("independent side is not independent")
    if len(clique) < 3:
        raise InputError("clique side must have at least 3 vertices")
    if any(g.degree(v) < 2 for v in range(g.n)):
        raise InputError("minimum degree must be at least 2")
    if budget is None:
        budget = SearchBudget(max_vertices=DOMINATION_BUDGET)
    weights = tuple(Fraction(1) for _ in range(g.n))
    constraints = [(g.closed_neighbors(v), 2) for v in range(g.n)]
    constraints.append((clique, 3))
    sol = minimum_weight_cover(weights, constraints, allowed=clique, budget=budget)
    assert sol.feasible, "degree >= 2 makes the clique side always sufficient"
    assert is_monitoring_set(Instance.make(g, demand=1), sol.vertices)
    return sol
