"""Independent domination: predicates, private neighbourhoods, and exact
enumeration of all minimum maximal independent sets.

Enumeration branches on the smallest undominated vertex; one of its closed
neighbours must join the set, and previously tried choices are excluded on
the remaining branches so every set is generated exactly once.  A greedy
maximal independent set seeds the size bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, bits, check_vertex_set


@dataclass(frozen=True)
class ISetCatalog:
    """All minimum maximal independent sets, in lexicographic member order."""

    i_number: int
    isets: tuple[tuple[int, ...], ...]

    def masks(self) -> list[int]:
        return [sum(1 << v for v in s) for s in self.isets]

    def index_of(self, s: Iterable[int]) -> int:
        key = tuple(sorted(s))
        try:
            return self.isets.index(key)
        except ValueError:
            raise KeyError(f"{key} is not a minimum independent dominating set") from None


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    mask = check_vertex_set(g, s)
    return all(not (g.adj[v] & mask) for v in bits(mask))


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    mask = check_vertex_set(g, s)
    covered = mask
    for v in bits(mask):
        covered |= g.adj[v]
    return covered == (1 << g.n) - 1


def private_neighborhood(
    g: Graph, s: Iterable[int], v: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(pn, epn) of ``v`` with respect to ``s``: closed neighbours of ``v``
    seen by no other member of ``s``."""
    mask = check_vertex_set(g, s)
    if not ((mask >> v) & 1):
        raise ValueError(f"vertex {v} is not a member of the set")
    others = mask & ~(1 << v)
    dominated_by_others = others
    for u in bits(others):
        dominated_by_others |= g.adj[u]
    pn = (g.adj[v] | (1 << v)) & ~dominated_by_others
    epn = pn & ~(1 << v)
    return tuple(bits(pn)), tuple(bits(epn))


def _minimum_independent_dominating_masks(g: Graph) -> list[int]:
    n = g.n
    adj = g.adj
    full = (1 << n) - 1
    closed = [adj[v] | (1 << v) for v in range(n)]
    max_cover = max(c.bit_count() for c in closed)

    # greedy maximal independent set: a valid upper bound on i(G)
    greedy = 0
    for v in range(n):
        if not (adj[v] & greedy):
            greedy |= 1 << v
    best = greedy.bit_count()
    sols: list[int] = []

    def dfs(s: int, size: int, dominated: int, excluded: int) -> None:
        nonlocal best, sols
        if dominated == full:
            if size < best:
                best = size
                sols = [s]
            elif size == best:
                sols.append(s)
            return
        need = (full & ~dominated).bit_count()
        if size + (need + max_cover - 1) // max_cover > best:
            return
        u = ((full & ~dominated) & -(full & ~dominated)).bit_length() - 1
        cand = closed[u] & ~excluded
        ex = excluded
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            if not (adj[w] & s):
                dfs(s | b, size + 1, dominated | closed[w], ex)
            ex |= b

    dfs(0, 0, 0, 0)
    return sols


def enumerate_isets(g: Graph) -> ISetCatalog:
    """i(G) together with every i-set, exhaustively."""
    if g.n == 0:
        raise ValueError("the empty graph has no independent dominating sets")
    masks = _minimum_independent_dominating_masks(g)
    isets = sorted(tuple(bits(m)) for m in masks)
    return ISetCatalog(len(isets[0]), tuple(isets))
