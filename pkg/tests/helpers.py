"""Independent brute-force oracles used to check the library's fast paths.

Everything here deliberately avoids the algorithms under test: subsets are
enumerated with itertools, isomorphism is checked by trying every
permutation, and reconfiguration-graph invariants are evaluated straight
from their definitions.
"""

import itertools
from collections import deque

from hypothesis import strategies as st

from igraphkit.graphs import Graph


def brute_independent(g: Graph, s) -> bool:
    return all(not g.has_edge(u, v) for u, v in itertools.combinations(s, 2))


def brute_dominating(g: Graph, s) -> bool:
    covered = set(s)
    for v in s:
        covered.update(g.neighbors(v))
    return len(covered) == g.n


def brute_isets(g: Graph):
    """(i(G), all i-sets) by scanning subsets in increasing size."""
    for size in range(1, g.n + 1):
        hits = [
            c
            for c in itertools.combinations(range(g.n), size)
            if brute_independent(g, c) and brute_dominating(g, c)
        ]
        if hits:
            return size, hits
    raise AssertionError("every graph has a maximal independent set")


def brute_isomorphism(g: Graph, h: Graph):
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    for perm in itertools.permutations(range(g.n)):
        if all(
            g.has_edge(u, v) == h.has_edge(perm[u], perm[v])
            for u, v in itertools.combinations(range(g.n), 2)
        ):
            return list(perm)
    return None


def random_graph(rng, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def relabelled(rng, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                edges.append((u, v))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# structural invariants of reconfiguration graphs, straight from definitions


def skeleton_distances(skeleton: Graph) -> list[list[int]]:
    dist = [[-1] * skeleton.n for _ in range(skeleton.n)]
    for src in range(skeleton.n):
        dist[src][src] = 0
        dq = deque([src])
        while dq:
            v = dq.popleft()
            for u in skeleton.neighbors(v):
                if dist[src][u] == -1:
                    dist[src][u] = dist[src][v] + 1
                    dq.append(u)
    return dist


def check_distance_bound(ig) -> int:
    """Violations of: skeleton distance >= |X - Y|, with equality forced at
    distance exactly two."""
    sets = [set(s) for s in ig.catalog.isets]
    dist = skeleton_distances(ig.skeleton)
    bad = 0
    for j in range(len(sets)):
        for k in range(j + 1, len(sets)):
            d = dist[j][k]
            if d == -1:
                continue
            moved = len(sets[j] - sets[k])
            if d < moved:
                bad += 1
            if d == 2 and moved != 2:
                bad += 1
    return bad


def check_claw_condition(ig) -> int:
    """Violations of: for a path X-Y-Z, the edge XZ exists iff the vertex
    gained entering Y is the vertex dropped leaving Y."""
    bad = 0
    sk = ig.skeleton
    for y in range(sk.n):
        nbrs = sk.neighbors(y)
        for x in nbrs:
            for z in nbrs:
                if x >= z:
                    continue
                gained = ig.slides[(x, y)][1]
                dropped = ig.slides[(y, z)][0]
                if sk.has_edge(x, z) != (gained == dropped):
                    bad += 1
    return bad


def check_star_bound(ig) -> int:
    """Violations of the induced-star constraints: a skeleton vertex whose
    whole neighbourhood is independent has degree <= i(G), and its
    neighbours pairwise share i(G) - 2 tokens."""
    bad = 0
    sk = ig.skeleton
    i_num = ig.catalog.i_number
    sets = [set(s) for s in ig.catalog.isets]
    for x in range(sk.n):
        nbrs = sk.neighbors(x)
        if any(sk.has_edge(a, b) for a, b in itertools.combinations(nbrs, 2)):
            continue
        m = len(nbrs)
        if m < 2:
            continue
        if m > i_num:
            bad += 1
        for a, b in itertools.combinations(nbrs, 2):
            if len(sets[a] & sets[b]) != i_num - 2:
                bad += 1
    return bad


def check_square_structure(ig) -> int:
    """Violations of the induced-four-cycle pattern: opposite corners share
    all but two tokens overall, and the two diagonals swap the same pair."""
    bad = 0
    sk = ig.skeleton
    sets = [set(s) for s in ig.catalog.isets]
    i_num = ig.catalog.i_number
    for quad in itertools.combinations(range(sk.n), 4):
        present = [
            (a, b) for a, b in itertools.combinations(quad, 2) if sk.has_edge(a, b)
        ]
        if len(present) != 4:
            continue
        if any(len([e for e in present if v in e]) != 2 for v in quad):
            continue
        # induced C4: find the two non-adjacent pairs
        diag = [
            (a, b) for a, b in itertools.combinations(quad, 2) if not sk.has_edge(a, b)
        ]
        (x, y), (a, b) = diag
        if len(sets[x] & sets[y] & sets[a] & sets[b]) != i_num - 2:
            bad += 1
        if sets[x] ^ sets[y] != sets[a] ^ sets[b]:
            bad += 1
    return bad
