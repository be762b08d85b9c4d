"""Non-isomorphic small-graph generation, obstruction detection, and
bounded exhaustive realizability search.

A target is certified non-realizable up to ``max_n`` by checking every
isomorphism class of seeds on at most ``max_n`` vertices; it is certified
non-realizable outright when it contains one of the three known minimal
obstructions (all theta graphs).
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .canon import canonical_key, find_induced_copy, find_isomorphism
from .domination import enumerate_isets
from .graphs import Graph, complete_bipartite, emit_graph6, theta
from .recipes import RecipeStep, SeedRecipe, verify_recipe
from .reconf import build_igraph

MAX_SUPPORTED_N = 8

_REPS: dict[int, list[Graph]] = {}


def generate_nonisomorphic(n: int) -> list[Graph]:
    """One representative per isomorphism class of simple graphs on ``n``
    vertices, in a deterministic augmentation order."""
    if not (1 <= n <= MAX_SUPPORTED_N):
        raise ValueError(f"supported vertex counts are 1..{MAX_SUPPORTED_N}")
    if n in _REPS:
        return list(_REPS[n])
    if n == 1:
        reps = [Graph(1, (0,))]
    else:
        parents = generate_nonisomorphic(n - 1)
        seen: set[tuple[int, int]] = set()
        reps = []
        new = n - 1
        for parent in parents:
            base_edges = parent.edges()
            for mask in range(1 << new):
                extra = [(v, new) for v in range(new) if (mask >> v) & 1]
                g = Graph.from_edges(n, base_edges + extra)
                key = canonical_key(g)
                if key not in seen:
                    seen.add(key)
                    reps.append(g)
    _REPS[n] = reps
    return list(reps)


# the three minimal non-realizable targets
OBSTRUCTIONS: tuple[tuple[str, Graph], ...] = (
    ("diamond", theta(1, 2, 2)),
    ("k23", complete_bipartite(2, 3)),
    ("theta_2_2_3", theta(2, 2, 3)),
)


def find_obstruction(h: Graph) -> tuple[str, tuple[int, ...]] | None:
    """First induced copy of a known non-realizable pattern, if any.

    A hit certifies that ``h`` is not the reconfiguration graph of any seed;
    no hit makes no claim either way.
    """
    for name, pattern in OBSTRUCTIONS:
        if pattern.n > h.n:
            continue
        hit = find_induced_copy(h, pattern)
        if hit is not None:
            return name, hit
    return None


@dataclass(frozen=True)
class SearchOutcome:
    target: Graph
    witness: SeedRecipe | None
    max_n: int
    examined: dict[int, int]

    @property
    def found(self) -> bool:
        return self.witness is not None


def _star_bound(target: Graph) -> int:
    """Largest deg(X) over target vertices whose open neighbourhood is
    independent; any seed must have i >= that value."""
    best = 0
    for v in range(target.n):
        nbrs = target.neighbors(v)
        if all(not target.has_edge(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1 :]):
            best = max(best, len(nbrs))
    return best


def _try_candidate(g: Graph, target: Graph, star_bound: int) -> list[int] | None:
    catalog = enumerate_isets(g)
    if catalog.i_number < star_bound:
        return None
    if len(catalog.isets) != target.n:
        return None
    skeleton = build_igraph(g).skeleton
    if skeleton.edge_count() != target.edge_count():
        return None
    return find_isomorphism(skeleton, target)


def _worker(args: tuple[int, Graph, Graph, int]) -> tuple[int, list[int] | None]:
    idx, g, target, star_bound = args
    return idx, _try_candidate(g, target, star_bound)


def search_seed(
    target: Graph, max_n: int, jobs: int = 1, prune: bool = True
) -> SearchOutcome:
    """Scan every graph on 1..max_n vertices for one whose reconfiguration
    graph is isomorphic to ``target``.

    Deterministic: candidates are tried in generation order and the first
    hit wins, whether or not the scan runs in parallel.
    """
    if not (1 <= max_n <= MAX_SUPPORTED_N):
        raise ValueError(f"max_n must be in 1..{MAX_SUPPORTED_N}")
    if target.n < 1:
        raise ValueError("target must be nonempty")
    star_bound = _star_bound(target) if prune else 0
    examined: dict[int, int] = {}
    for n in range(1, max_n + 1):
        candidates = generate_nonisomorphic(n)
        hit: tuple[int, list[int]] | None = None
        if jobs <= 1:
            for idx, g in enumerate(candidates):
                iso = _try_candidate(g, target, star_bound)
                if iso is not None:
                    hit = (idx, iso)
                    break
        else:
            tasks = [(idx, g, target, star_bound) for idx, g in enumerate(candidates)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for idx, iso in pool.map(_worker, tasks, chunksize=16):
                    if iso is not None and (hit is None or idx < hit[0]):
                        hit = (idx, iso)
        if hit is not None:
            idx, iso = hit
            examined[n] = idx + 1
            witness = SeedRecipe(
                candidates[idx],
                target,
                (RecipeStep("search_witness", {"order": n, "index": idx}),),
                tuple(iso),
            )
            verify_recipe(witness)
            return SearchOutcome(target, witness, max_n, examined)
        examined[n] = len(candidates)
    return SearchOutcome(target, None, max_n, examined)


def outcome_to_json(outcome: SearchOutcome) -> dict:
    data = {
        "target": emit_graph6(outcome.target),
        "result": "found" if outcome.found else "exhausted",
        "max_n": outcome.max_n,
        "examined": {str(n): c for n, c in sorted(outcome.examined.items())},
    }
    if outcome.witness is not None:
        data["witness"] = {
            "seed": emit_graph6(outcome.witness.seed),
            "certificate": list(outcome.witness.certificate),
        }
    return data


def outcome_json_text(outcome: SearchOutcome) -> str:
    return json.dumps(outcome_to_json(outcome), sort_keys=True, separators=(",", ":"))
