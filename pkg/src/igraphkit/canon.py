"""Isomorphism testing and canonical forms for small graphs.

The canonical form is the lexicographically smallest upper-triangle
adjacency bit string over all vertex orders compatible with the stable
colour-refinement partition (cells listed in canonical colour order,
vertices permuted freely inside each cell).  Backtracking over in-cell
orders is pruned by prefix comparison and by skipping interchangeable
twin vertices, which keeps highly symmetric graphs cheap.  Everything
here is tuned for the tiny graphs this package cares about (n <= ~30);
there is no ambition to compete on large instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, disjoint_union


def refine_colors(g: Graph) -> list[int]:
    """Stable colour refinement; colours are ints assigned from sorted signatures.

    Isomorphic graphs receive identical colour multisets round by round, so
    the final colouring is an isomorphism invariant.
    """
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        remap = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [remap[sigs[v]] for v in range(g.n)]
        if new == colors:
            return colors
        colors = new


@dataclass(frozen=True)
class CanonicalForm:
    """Permutation-invariant key: equal forms iff isomorphic graphs."""

    n: int
    canonical_edge_code: int


def _cells(colors: list[int]) -> list[list[int]]:
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    return [by_color[c] for c in sorted(by_color)]


def _canonical_order(g: Graph, cells: list[list[int]]) -> list[int]:
    """Vertex order minimising the column-wise adjacency bit string.

    Cells are consumed in the given order; only in-cell orders vary.  The
    incumbent best is kept as its per-position column bits (``best_cols``);
    a branch strictly below the incumbent rewrites it on the way down, a
    branch strictly above is pruned, ties descend for comparison deeper.
    """
    n = g.n
    adj = g.adj
    block_of: list[int] = []
    for ci, cell in enumerate(cells):
        block_of.extend([ci] * len(cell))
    best_cols: list[int | None] = [None] * n
    best_order: list[int] = [0] * n
    order = [0] * n
    remaining = [list(cell) for cell in cells]

    def interchangeable(u: int, w: int) -> bool:
        pair = (1 << u) | (1 << w)
        return (adj[u] & ~pair) == (adj[w] & ~pair)

    def dfs(p: int) -> None:
        if p == n:
            best_order[:] = order
            return
        cell = remaining[block_of[p]]
        tried: list[int] = []
        for idx in range(len(cell)):
            w = cell[idx]
            if any(interchangeable(w, t) for t in tried):
                continue
            tried.append(w)
            col = 0
            for q in range(p):
                col = (col << 1) | ((adj[order[q]] >> w) & 1)
            bc = best_cols[p]
            if bc is not None and col > bc:
                continue
            if bc is None or col < bc:
                best_cols[p] = col
                for q in range(p + 1, n):
                    best_cols[q] = None
            order[p] = w
            cell[idx], cell[-1] = cell[-1], cell[idx]
            popped = cell.pop()
            dfs(p + 1)
            cell.append(popped)
            cell[idx], cell[-1] = cell[-1], cell[idx]

    dfs(0)
    return best_order


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n == 0:
        return CanonicalForm(0, 0)
    colors = refine_colors(g)
    order = _canonical_order(g, _cells(colors))
    code = 0
    for p in range(g.n):
        for q in range(p):
            code = (code << 1) | (1 if g.has_edge(order[q], order[p]) else 0)
    return CanonicalForm(g.n, code)


def canonical_key(g: Graph) -> tuple[int, int]:
    form = canonical_form(g)
    return (form.n, form.canonical_edge_code)


# ---------------------------------------------------------------------------
# explicit isomorphisms


def _check_isomorphism(g: Graph, h: Graph, mapping: list[int]) -> bool:
    if sorted(mapping) != list(range(g.n)):
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) != h.has_edge(mapping[u], mapping[v]):
                return False
    return True


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A vertex bijection g -> h mapping edges to edges, or None.

    Colour refinement runs on the disjoint union so colours are comparable
    across the two graphs; backtracking then matches vertices colour class
    by colour class.
    """
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    if g.degree_sequence() != h.degree_sequence():
        return None
    if g.n == 0:
        return []
    joint = refine_colors(disjoint_union(g, h))
    gcol = joint[: g.n]
    hcol = joint[g.n :]
    if sorted(gcol) != sorted(hcol):
        return None

    # match high-degree, rare-colour vertices first, preferring those with
    # already-placed neighbours so adjacency constraints bite early
    color_count: dict[int, int] = {}
    for c in gcol:
        color_count[c] = color_count.get(c, 0) + 1
    g_order: list[int] = []
    placed_mask = 0
    left = set(range(g.n))
    while left:
        def score(v: int) -> tuple[int, int, int, int]:
            anchored = (g.adj[v] & placed_mask).bit_count()
            return (-anchored, color_count[gcol[v]], -g.degree(v), v)

        v = min(left, key=score)
        g_order.append(v)
        left.remove(v)
        placed_mask |= 1 << v

    mapping = [-1] * g.n
    used = [False] * h.n
    h_by_color: dict[int, list[int]] = {}
    for w, c in enumerate(hcol):
        h_by_color.setdefault(c, []).append(w)

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = g_order[i]
        for w in h_by_color[gcol[v]]:
            if used[w]:
                continue
            ok = True
            for u in g_order[:i]:
                if g.has_edge(u, v) != h.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if not extend(0):
        return None
    assert _check_isomorphism(g, h, mapping)
    return mapping


def find_induced_copy(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Host vertices inducing a subgraph isomorphic to ``pattern``, or None."""
    if pattern.n > host.n:
        raise ValueError("pattern larger than host")
    if pattern.n == 0:
        return ()
    # order pattern vertices so each one (after the first) touches a placed one
    order: list[int] = []
    left = set(range(pattern.n))
    placed_mask = 0
    while left:
        v = min(
            left,
            key=lambda v: (-(pattern.adj[v] & placed_mask).bit_count(), -pattern.degree(v), v),
        )
        order.append(v)
        left.remove(v)
        placed_mask |= 1 << v

    mapping = [-1] * pattern.n
    used = [False] * host.n

    def extend(i: int) -> bool:
        if i == pattern.n:
            return True
        v = order[i]
        for w in range(host.n):
            if used[w] or host.degree(w) < pattern.degree(v):
                continue
            ok = True
            for u in order[:i]:
                if pattern.has_edge(u, v) != host.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if not extend(0):
        return None
    return tuple(sorted(mapping))
