"""Build the token-slide reconfiguration graph of the i-sets of a graph.

Skeleton vertex ``j`` is the j-th catalog entry; an edge joins two i-sets
that differ in a single token moved along an edge of the base graph.  The
token-jump variant drops the adjacency requirement on the swapped pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .domination import ISetCatalog, enumerate_isets, private_neighborhood
from .graphs import Graph, bits, emit_graph6, parse_graph6


@dataclass(eq=False)
class IGraph:
    """Reconfiguration graph with slide-labelled edges.

    ``slides[(j, k)] = (x, y)`` means i-set ``j`` turns into i-set ``k`` by
    moving the token at ``x`` to ``y``; both orientations are stored.
    Instances are treated as immutable.
    """

    base: Graph
    catalog: ISetCatalog
    skeleton: Graph
    slides: dict[tuple[int, int], tuple[int, int]] = field(repr=False)

    def slide(self, j: int, k: int) -> tuple[int, int]:
        return self.slides[(j, k)]


def _build(g: Graph, require_adjacent: bool) -> IGraph:
    catalog = enumerate_isets(g)
    masks = catalog.masks()
    count = len(masks)
    edges = []
    slides: dict[tuple[int, int], tuple[int, int]] = {}
    for j in range(count):
        for k in range(j + 1, count):
            diff = masks[j] ^ masks[k]
            if diff.bit_count() != 2:
                continue
            x = (diff & masks[j]).bit_length() - 1
            y = (diff & masks[k]).bit_length() - 1
            if require_adjacent and not g.has_edge(x, y):
                continue
            edges.append((j, k))
            slides[(j, k)] = (x, y)
            slides[(k, j)] = (y, x)
    return IGraph(g, catalog, Graph.from_edges(count, edges), slides)


def build_igraph(g: Graph) -> IGraph:
    """The slide-model reconfiguration graph of the i-sets of ``g``."""
    return _build(g, require_adjacent=True)


def build_jump_graph(g: Graph) -> IGraph:
    """Token-jump variant: i-sets adjacent whenever they differ in one swap."""
    return _build(g, require_adjacent=False)


def frozen_tokens(g: Graph, s: Iterable[int]) -> tuple[int, ...]:
    """Members of the i-set ``s`` whose token has no legal slide.

    A token at ``v`` can move exactly when some external private neighbour
    of ``v`` dominates the whole private neighbourhood of ``v``.
    """
    key = tuple(sorted(s))
    catalog = enumerate_isets(g)
    if key not in catalog.isets:
        raise ValueError(f"{key} is not a minimum independent dominating set")
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    frozen = []
    for v in key:
        pn, epn = private_neighborhood(g, key, v)
        pn_mask = sum(1 << u for u in pn)
        if not any(closed[u] & pn_mask == pn_mask for u in epn):
            frozen.append(v)
    return tuple(frozen)


# ---------------------------------------------------------------------------
# JSON interchange


def igraph_to_json(ig: IGraph) -> dict:
    edges = []
    for j, k in ig.skeleton.edges():
        x, y = ig.slides[(j, k)]
        edges.append({"a": j, "b": k, "slide": [x, y]})
    return {
        "seed": emit_graph6(ig.base),
        "i": ig.catalog.i_number,
        "isets": [list(s) for s in ig.catalog.isets],
        "edges": edges,
    }


def igraph_from_json(data: dict) -> IGraph:
    """Rebuild from the seed and check the serialised skeleton matches."""
    g = parse_graph6(data["seed"])
    ig = build_igraph(g)
    want = igraph_to_json(ig)
    if want != data:
        raise ValueError("serialised reconfiguration graph is inconsistent with its seed")
    return ig


def igraph_json_text(ig: IGraph) -> str:
    return json.dumps(igraph_to_json(ig), sort_keys=True, separators=(",", ":"))
