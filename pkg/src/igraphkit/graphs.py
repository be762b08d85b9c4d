"""Simple undirected graphs on contiguous integer vertices.

Adjacency is stored as one neighbour bitmask per vertex.  All graphs here
are desk scale (seeds rarely exceed a few dozen vertices), so Python ints
double as fast vertex sets throughout the package.

Vertex numbering of every family and combinator is fixed and documented,
so that recipes and golden files are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Malformed or unsupported graph6 input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertices ``0..n-1``, ``adj[v]`` a neighbour bitmask."""

    n: int
    adj: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the vertices")
        return Graph.from_edges(self.n, [(p[u], p[v]) for u, v in self.edges()])


def check_vertex_set(g: Graph, s: Iterable[int]) -> int:
    """Validate that ``s`` is a set of vertices of ``g`` and return its bitmask."""
    mask = 0
    for v in s:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


# ---------------------------------------------------------------------------
# standard families


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("empty: n must be >= 0")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete: n must be >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(k: int) -> Graph:
    """Path on vertices 0..k-1 in order."""
    if k < 1:
        raise ValueError("path: k must be >= 1")
    return Graph.from_edges(k, [(v, v + 1) for v in range(k - 1)])


def cycle(k: int) -> Graph:
    """Cycle 0-1-...-(k-1)-0."""
    if k < 3:
        raise ValueError("cycle: k must be >= 3")
    return Graph.from_edges(k, [(v, (v + 1) % k) for v in range(k)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite: sides must be >= 1")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star(m: int) -> Graph:
    """K_{1,m} with centre 0 and leaves 1..m."""
    if m < 1:
        raise ValueError("star: m must be >= 1")
    return Graph.from_edges(m + 1, [(0, v) for v in range(1, m + 1)])


def theta(j: int, k: int, l: int) -> Graph:
    """Three internally disjoint paths of lengths j <= k <= l between vertices 0 and 1.

    Internal path vertices are numbered 2, 3, ... path by path.  At most one
    path may have length 1, otherwise the graph would have a parallel edge.
    """
    if not (1 <= j <= k <= l):
        raise ValueError("theta: need 1 <= j <= k <= l")
    if k == 1:
        raise ValueError("theta: at most one path of length 1")
    edges = []
    nxt = 2
    for length in (j, k, l):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def house() -> Graph:
    """Square 0-1-2-3-0 with roof apex 4 adjacent to 0 and 1."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])


def k13_gadget() -> Graph:
    """The claw used as an attachment gadget: centre 0, leaves 1..3; leaf 1 is the hook."""
    return star(3)


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "empty": (empty_graph, 1),
    "theta": (theta, 3),
    "house": (house, 0),
    "k13_gadget": (k13_gadget, 0),
}


def build_family(name: str, *params: int) -> Graph:
    """Build a named family member, e.g. ``build_family("theta", 1, 2, 2)``."""
    if name not in _FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    fn, arity = _FAMILIES[name]
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s)")
    return fn(*params)


# ---------------------------------------------------------------------------
# combinators


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1's vertices first, then g2's shifted by ``g1.n``."""
    shift = g1.n
    edges = g1.edges() + [(u + shift, v + shift) for u, v in g2.edges()]
    return Graph.from_edges(g1.n + g2.n, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    shift = g1.n
    edges = disjoint_union(g1, g2).edges()
    edges += [(u, shift + v) for u in range(g1.n) for v in range(g2.n)]
    return Graph.from_edges(g1.n + g2.n, edges)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Box product; vertex (u, v) gets id ``u * g2.n + v`` (row-major)."""
    n2 = g2.n
    edges = []
    for u in range(g1.n):
        for v, w in g2.edges():
            edges.append((u * n2 + v, u * n2 + w))
    for u, w in g1.edges():
        for v in range(n2):
            edges.append((u * n2 + v, w * n2 + v))
    return Graph.from_edges(g1.n * n2, edges)


_COMBINERS = {
    "disjoint_union": disjoint_union,
    "join": join,
    "cartesian_product": cartesian_product,
}


def combine(op: str, g1: Graph, g2: Graph) -> Graph:
    if op not in _COMBINERS:
        raise ValueError(f"unknown combinator {op!r}")
    return _COMBINERS[op](g1, g2)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep``, plus the old->new vertex map.

    New ids follow the sorted order of ``keep``.
    """
    mask = check_vertex_set(g, keep)
    old = list(bits(mask))
    idx = {v: i for i, v in enumerate(old)}
    edges = [(idx[u], idx[v]) for u, v in g.edges() if u in idx and v in idx]
    return Graph.from_edges(len(old), edges), idx


# ---------------------------------------------------------------------------
# structure helpers


def connected_components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        frontier = 1 << v
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
        seen |= comp
        comps.append(list(bits(comp)))
    return comps


def cyclomatic_number(g: Graph) -> int:
    return g.edge_count() - g.n + len(connected_components(g))


def is_forest(g: Graph) -> bool:
    return cyclomatic_number(g) == 0


def blocks_and_cut_vertices(g: Graph) -> tuple[list[frozenset[int]], set[int]]:
    """Biconnected blocks (as vertex sets) and cut vertices.

    Isolated vertices count as single-vertex blocks, bridges as two-vertex
    blocks.  Standard lowpoint DFS with an edge stack.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[tuple[int, int]] = []
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    counter = 0

    def dfs(root: int) -> None:
        nonlocal counter
        work = [(root, -1, iter(g.neighbors(root)))]
        disc[root] = low[root] = counter
        counter += 1
        children = {root: 0}
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    stack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    children[v] = children.get(v, 0) + 1
                    work.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    block = set()
                    while stack and disc[stack[-1][0]] >= disc[v]:
                        e = stack.pop()
                        block.update(e)
                    if stack:
                        e = stack.pop()
                        block.update(e)
                    blocks.append(frozenset(block))
                    if pv != root or children[root] > 1:
                        cuts.add(pv)

    for v in range(g.n):
        if v not in disc:
            if g.degree(v) == 0:
                disc[v] = counter
                counter += 1
                blocks.append(frozenset([v]))
            else:
                dfs(v)

    # root cut-vertex rule: a DFS root is a cut vertex iff it lies in >= 2 blocks
    membership: dict[int, int] = {}
    for b in blocks:
        for v in b:
            membership[v] = membership.get(v, 0) + 1
    cuts = {v for v, c in membership.items() if c >= 2}
    return blocks, cuts


def bridges(g: Graph) -> set[tuple[int, int]]:
    """Edges whose removal disconnects their component (two-vertex blocks)."""
    blks, _ = blocks_and_cut_vertices(g)
    out = set()
    for b in blks:
        if len(b) == 2:
            u, v = sorted(b)
            if g.has_edge(u, v):
                out.add((u, v))
    return out


# ---------------------------------------------------------------------------
# graph6 interchange (format of the common small-graph corpora)

_G6_MAX = 258047


def emit_graph6(g: Graph) -> str:
    if g.n > _G6_MAX:
        raise GraphFormatError(f"graph6 emission supports n <= {_G6_MAX}, got {g.n}")
    if g.n <= 62:
        head = chr(g.n + 63)
    else:
        head = "~" + "".join(chr(((g.n >> s) & 63) + 63) for s in (12, 6, 0))
    bitstream = []
    for v in range(1, g.n):
        for u in range(v):
            bitstream.append(1 if g.has_edge(u, v) else 0)
    while len(bitstream) % 6:
        bitstream.append(0)
    chars = []
    for i in range(0, len(bitstream), 6):
        val = 0
        for b in bitstream[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise GraphFormatError(f"character {ch!r} outside graph6 alphabet")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise GraphFormatError("graph6 strings for n > 258047 are not supported")
        if len(s) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphFormatError(
            f"graph6 body has {len(body)} characters, expected {need} for n={n}"
        )
    bitstream = []
    for ch in body:
        val = ord(ch) - 63
        bitstream.extend((val >> s_) & 1 for s_ in (5, 4, 3, 2, 1, 0))
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream[i]:
                edges.append((u, v))
            i += 1
    if any(bitstream[i:]):
        raise GraphFormatError("nonzero padding bits in graph6 string")
    return Graph.from_edges(n, edges)
