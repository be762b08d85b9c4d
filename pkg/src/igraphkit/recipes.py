"""Certificate-producing seed recipes.

Every operation here returns a :class:`SeedRecipe` whose certificate (a
skeleton-vertex -> target-vertex array) has been verified edge by edge at
construction time.  Where the underlying transformation pins down exactly
how old i-sets turn into new ones, the certificate is built directly from
that correspondence and then checked, so a silent construction bug cannot
produce a bogus recipe: it raises :class:`CertificationError` instead.

Gadget vertices are always appended after existing ids, which keeps
certificates stable under composition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .canon import find_isomorphism
from .domination import enumerate_isets, private_neighborhood
from .graphs import (
    Graph,
    blocks_and_cut_vertices,
    bridges,
    cartesian_product,
    complete,
    cycle,
    cyclomatic_number,
    connected_components,
    disjoint_union,
    emit_graph6,
    empty_graph,
    house,
    induced_subgraph,
    join,
    parse_graph6,
)
from .reconf import IGraph, build_igraph


class CertificationError(Exception):
    """A recipe failed its eager isomorphism check."""


@dataclass(frozen=True)
class RecipeStep:
    rule: str
    params: dict

    def to_json(self) -> dict:
        return {"rule": self.rule, "params": self.params}


@dataclass(frozen=True)
class SeedRecipe:
    """A seed graph, the target it realises, provenance, and a verified
    isomorphism from the seed's reconfiguration skeleton onto the target."""

    seed: Graph
    target: Graph
    steps: tuple[RecipeStep, ...]
    certificate: tuple[int, ...]


def verify_recipe(r: SeedRecipe) -> None:
    """Re-run certification from scratch; raises on any mismatch."""
    ig = build_igraph(r.seed)
    cert = r.certificate
    if cert is None:
        raise CertificationError("recipe carries no certificate")
    if ig.skeleton.n != r.target.n or len(cert) != r.target.n:
        raise CertificationError(
            f"skeleton has {ig.skeleton.n} vertices, target has {r.target.n}"
        )
    if sorted(cert) != list(range(r.target.n)):
        raise CertificationError("certificate is not a bijection")
    for j in range(r.target.n):
        for k in range(j + 1, r.target.n):
            if ig.skeleton.has_edge(j, k) != r.target.has_edge(cert[j], cert[k]):
                raise CertificationError(
                    f"adjacency mismatch between skeleton pair ({j},{k}) "
                    f"and target pair ({cert[j]},{cert[k]})"
                )
    if not r.steps:
        raise CertificationError("recipe has no provenance steps")


def _certify(
    seed: Graph,
    target: Graph,
    mapping: dict[tuple[int, ...], int],
    steps: Sequence[RecipeStep],
    ig: IGraph | None = None,
) -> SeedRecipe:
    if ig is None:
        ig = build_igraph(seed)
    if ig.skeleton.n != target.n:
        raise CertificationError(
            f"seed has {ig.skeleton.n} i-sets but target has {target.n} vertices"
        )
    cert = []
    for s in ig.catalog.isets:
        if s not in mapping:
            raise CertificationError(f"unexpected i-set {s} in the new seed")
        cert.append(mapping[s])
    recipe = SeedRecipe(seed, target, tuple(steps), tuple(cert))
    verify_recipe(recipe)
    return recipe


def _cert_by_set(r: SeedRecipe) -> dict[tuple[int, ...], int]:
    ig = build_igraph(r.seed)
    if len(ig.catalog.isets) != len(r.certificate):
        raise CertificationError("certificate length does not match the catalog")
    return {s: r.certificate[j] for j, s in enumerate(ig.catalog.isets)}


def _relabel_target(r: SeedRecipe, perm: Sequence[int], rule: str) -> SeedRecipe:
    target = r.target.relabel(perm)
    cert = tuple(perm[t] for t in r.certificate)
    steps = r.steps + (RecipeStep(rule, {"perm": list(perm)}),)
    out = SeedRecipe(r.seed, target, steps, cert)
    verify_recipe(out)
    return out


def _i_number(g: Graph) -> int:
    return enumerate_isets(g).i_number


# ---------------------------------------------------------------------------
# basic families


def seed_complete(n: int) -> SeedRecipe:
    """K_n is its own reconfiguration graph: every singleton is an i-set."""
    g = complete(n)
    mapping = {(v,): v for v in range(n)}
    return _certify(g, complete(n), mapping, [RecipeStep("complete_seed", {"n": n})])


def seed_hypercube(n: int) -> SeedRecipe:
    """n disjoint edges act as n independent 0/1 switches."""
    if n < 1:
        raise ValueError("hypercube: n must be >= 1")
    r = seed_complete(2)
    for _ in range(n - 1):
        r = seed_cartesian(r, seed_complete(2))
    return r


def seed_cycle(k: int) -> SeedRecipe:
    """A certified seed for the k-cycle; the seed depends on k mod small cases."""
    if k < 3:
        raise ValueError("cycle: k must be >= 3")
    if k == 3:
        g = complete(3)
        case = "triangle"
    elif k == 4:
        g = disjoint_union(complete(2), complete(2))
        case = "two_switches"
    elif k == 5:
        g = cycle(5)
        case = "pentagon"
    elif k == 6:
        g = cartesian_product(complete(2), complete(3))
        case = "prism"
    else:
        # distance > 2 circulant: three consecutive tokens, ends slide by three
        edges = [
            (i, j)
            for i in range(k)
            for j in range(i + 1, k)
            if (j - i) % k not in (0, 1, 2, k - 1, k - 2)
        ]
        g = Graph.from_edges(k, edges)
        case = "wide_circulant"
    target = cycle(k)
    ig = build_igraph(g)
    iso = find_isomorphism(ig.skeleton, target)
    if iso is None:
        raise CertificationError(f"cycle seed for k={k} failed to certify")
    mapping = {s: iso[j] for j, s in enumerate(ig.catalog.isets)}
    return _certify(g, target, mapping, [RecipeStep("cycle_seed", {"k": k, "case": case})], ig)


def seed_house() -> SeedRecipe:
    """Triangle {2,3,4} with the tail 0-1-2 realises the house."""
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)])
    target = house()
    ig = build_igraph(g)
    iso = find_isomorphism(ig.skeleton, target)
    if iso is None:
        raise CertificationError("house seed failed to certify")
    mapping = {s: iso[j] for j, s in enumerate(ig.catalog.isets)}
    return _certify(g, target, mapping, [RecipeStep("house_seed", {})], ig)


_BASIC = {
    "complete": seed_complete,
    "hypercube": seed_hypercube,
    "cycle": seed_cycle,
    "house": seed_house,
}


def seed_basic(family: str, param: int | None = None) -> SeedRecipe:
    if family not in _BASIC:
        raise ValueError(f"unknown basic family {family!r}")
    if family == "house":
        if param is not None:
            raise ValueError("house takes no parameter")
        return seed_house()
    if param is None:
        raise ValueError(f"family {family!r} needs a parameter")
    return _BASIC[family](param)


# ---------------------------------------------------------------------------
# combining recipes


def seed_cartesian(r1: SeedRecipe, r2: SeedRecipe) -> SeedRecipe:
    """Disjoint union of seeds realises the box product of the targets."""
    c1 = _cert_by_set(r1)
    c2 = _cert_by_set(r2)
    seed = disjoint_union(r1.seed, r2.seed)
    target = cartesian_product(r1.target, r2.target)
    shift = r1.seed.n
    n2 = r2.target.n
    mapping = {}
    for s1, t1 in c1.items():
        for s2, t2 in c2.items():
            key = tuple(sorted(s1 + tuple(v + shift for v in s2)))
            mapping[key] = t1 * n2 + t2
    steps = r1.steps + r2.steps + (RecipeStep("cartesian_composition", {}),)
    return _certify(seed, target, mapping, steps)


def inflate(r: SeedRecipe, k: int) -> SeedRecipe:
    """Raise i(seed) to ``k`` with isolated vertices; the skeleton is untouched."""
    i0 = _i_number(r.seed)
    if k < i0:
        raise ValueError(f"cannot inflate down: i(seed)={i0}, requested {k}")
    if k == i0:
        return r
    extra = tuple(range(r.seed.n, r.seed.n + k - i0))
    seed = disjoint_union(r.seed, empty_graph(k - i0))
    mapping = {
        tuple(sorted(s + extra)): t for s, t in _cert_by_set(r).items()
    }
    steps = r.steps + (RecipeStep("inflate", {"isolates": list(extra)}),)
    return _certify(seed, r.target, mapping, steps)


def seed_union(r1: SeedRecipe, r2: SeedRecipe) -> SeedRecipe:
    """Join of (equal-i, i >= 2) seeds realises the disjoint union of targets."""
    k = max(_i_number(r1.seed), _i_number(r2.seed), 2)
    a = inflate(r1, k)
    b = inflate(r2, k)
    seed = join(a.seed, b.seed)
    target = disjoint_union(a.target, b.target)
    shift = a.seed.n
    t_shift = a.target.n
    mapping = {s: t for s, t in _cert_by_set(a).items()}
    for s, t in _cert_by_set(b).items():
        mapping[tuple(v + shift for v in s)] = t_shift + t
    steps = a.steps + b.steps + (RecipeStep("join_union", {"i": k}),)
    return _certify(seed, target, mapping, steps)


# ---------------------------------------------------------------------------
# growing targets vertex by vertex


def epn_normalize(g: Graph) -> Graph:
    """Pad ``g`` so every i-set member keeps an external private neighbour.

    For each catalogued (i-set, member) pair whose external private
    neighbourhood is empty, two fresh vertices are joined to the member's
    closed neighbourhood.  The i-set catalog is unchanged, which is checked
    before returning.
    """
    cat = enumerate_isets(g)
    cur = g
    for s in cat.isets:
        for v in s:
            _, epn = private_neighborhood(cur, s, v)
            if epn:
                continue
            closed = list(sorted(set(cur.neighbors(v)) | {v}))
            a, b = cur.n, cur.n + 1
            edges = cur.edges()
            edges += [(u, a) for u in closed]
            edges += [(u, b) for u in closed]
            cur = Graph.from_edges(cur.n + 2, edges)
    if enumerate_isets(cur).isets != cat.isets:
        raise CertificationError("padding changed the i-set catalog")
    return cur


def add_isolated_to_target(r: SeedRecipe) -> SeedRecipe:
    """Join an independent i(G)-set onto the seed: the target gains one
    isolated vertex whose i-set is exactly the joined set."""
    mapping_old = _cert_by_set(r)
    base = r.seed
    i0 = _i_number(base)
    params: dict = {}
    if i0 == 1:
        iso = base.n
        base = disjoint_union(base, empty_graph(1))
        mapping_old = {
            tuple(sorted(s + (iso,))): t for s, t in mapping_old.items()
        }
        i0 = 2
        params["spacer"] = iso
    w_set = tuple(range(base.n, base.n + i0))
    seed = join(base, empty_graph(i0))
    mapping = dict(mapping_old)
    mapping[w_set] = r.target.n
    target = disjoint_union(r.target, empty_graph(1))
    params["joined_set"] = list(w_set)
    steps = r.steps + (RecipeStep("isolated_target_vertex", params),)
    return _certify(seed, target, mapping, steps)


def add_pendant_to_target(r: SeedRecipe, w: int) -> SeedRecipe:
    """Grow the target by a pendant at vertex ``w``.

    The seed first gets private-neighbour padding, then one pendant per
    member of the i-set behind ``w``, a hub joined to those pendants, and a
    final leaf on the hub.  The new target vertex is the i-set (W + leaf);
    its unique neighbour is (W + hub).
    """
    if not (0 <= w < r.target.n):
        raise ValueError(f"target vertex {w} out of range")
    mapping_old = _cert_by_set(r)
    g = epn_normalize(r.seed)
    padding = g.n - r.seed.n
    w_set = next(s for s, t in mapping_old.items() if t == w)
    base = g.n
    xs = list(range(base, base + len(w_set)))
    hub = base + len(w_set)
    leaf = hub + 1
    edges = g.edges()
    edges += [(v, x) for v, x in zip(w_set, xs)]
    edges += [(x, hub) for x in xs]
    edges.append((hub, leaf))
    seed = Graph.from_edges(leaf + 1, edges)
    target = Graph.from_edges(r.target.n + 1, r.target.edges() + [(w, r.target.n)])
    mapping = {
        tuple(sorted(s + (hub,))): t for s, t in mapping_old.items()
    }
    mapping[tuple(sorted(w_set + (leaf,)))] = r.target.n
    steps = r.steps + (
        RecipeStep(
            "pendant_target_vertex",
            {"stem": w, "padding": padding, "pendants": xs, "hub": hub, "leaf": leaf},
        ),
    )
    return _certify(seed, target, mapping, steps)


def seed_forest(f: Graph) -> SeedRecipe:
    """Certified recipe whose target is exactly the forest ``f``."""
    if f.n == 0:
        raise ValueError("forest must be nonempty")
    if cyclomatic_number(f) != 0:
        raise ValueError("input has a cycle")
    comps = connected_components(f)
    r = _certify(
        empty_graph(2),
        empty_graph(1),
        {(0, 1): 0},
        [RecipeStep("isolated_pair_base", {})],
    )
    for _ in range(len(comps) - 1):
        r = add_isolated_to_target(r)
    idx: dict[int, int] = {}
    for j, comp in enumerate(comps):
        idx[min(comp)] = j
    for comp in comps:
        root = min(comp)
        seen = {root}
        queue = [root]
        while queue:
            p = queue.pop(0)
            for v in f.neighbors(p):
                if v in seen:
                    continue
                seen.add(v)
                r = add_pendant_to_target(r, idx[p])
                idx[v] = r.target.n - 1
                queue.append(v)
    perm = [0] * f.n
    for v, t in idx.items():
        perm[t] = v
    r = _relabel_target(r, perm, "relabel_to_input")
    if r.target != f:
        raise CertificationError("forest reconstruction does not match the input")
    return r


# ---------------------------------------------------------------------------
# seed-side surgery that fixes the target


def attach_k13(r: SeedRecipe, v: int) -> SeedRecipe:
    """Hang a claw off seed vertex ``v``: i goes up by one, target unchanged.

    The claw centre joins every new i-set, so the skeleton and its labels
    (restricted to old vertices) are preserved.
    """
    if not (0 <= v < r.seed.n):
        raise ValueError(f"seed vertex {v} out of range")
    n = r.seed.n
    centre, hook, l2, l3 = n, n + 1, n + 2, n + 3
    edges = r.seed.edges() + [(centre, hook), (centre, l2), (centre, l3), (v, hook)]
    seed = Graph.from_edges(n + 4, edges)
    mapping = {
        tuple(sorted(s + (centre,))): t for s, t in _cert_by_set(r).items()
    }
    steps = r.steps + (
        RecipeStep("claw_attachment", {"at": v, "centre": centre, "hook": hook}),
    )
    return _certify(seed, r.target, mapping, steps)


# ---------------------------------------------------------------------------
# target surgery


def max_clique_replace(r: SeedRecipe, clique: Iterable[int]) -> SeedRecipe:
    """Cap a maximal clique of the target with one new vertex.

    Seed side: a new vertex joined to everything outside the common core of
    the clique's i-sets becomes the i-set of the capping vertex.
    """
    cl = sorted(set(clique))
    if not cl:
        raise ValueError("clique must be nonempty")
    for c in cl:
        if not (0 <= c < r.target.n):
            raise ValueError(f"target vertex {c} out of range")
    for a in cl:
        for b in cl:
            if a < b and not r.target.has_edge(a, b):
                raise ValueError("chosen set is not a clique in the target")
    for u in range(r.target.n):
        if u not in cl and all(r.target.has_edge(u, c) for c in cl):
            raise ValueError("clique is not maximal in the target")
    if _i_number(r.seed) < 2:
        r = inflate(r, 2)
    mapping_old = _cert_by_set(r)
    by_target = {t: s for s, t in mapping_old.items()}
    member_sets = [set(by_target[c]) for c in cl]
    i0 = len(member_sets[0])
    if len(cl) >= 2:
        core = set.intersection(*member_sets)
        if len(core) != i0 - 1:
            raise CertificationError("clique i-sets do not share a common core")
        cores = [core]
    else:
        cores = [member_sets[0] - {u} for u in sorted(member_sets[0])]
    last_err: CertificationError | None = None
    for core in cores:
        w = r.seed.n
        edges = r.seed.edges() + [(u, w) for u in range(r.seed.n) if u not in core]
        seed = Graph.from_edges(w + 1, edges)
        target = Graph.from_edges(
            r.target.n + 1, r.target.edges() + [(c, r.target.n) for c in cl]
        )
        mapping = dict(mapping_old)
        mapping[tuple(sorted(core | {w}))] = r.target.n
        steps = r.steps + (
            RecipeStep("clique_cap", {"clique": cl, "core": sorted(core), "new": w}),
        )
        try:
            return _certify(seed, target, mapping, steps)
        except CertificationError as err:
            last_err = err
    raise last_err if last_err is not None else CertificationError("clique cap failed")


def delete_vertex_from_target(r: SeedRecipe, x: int) -> SeedRecipe:
    """Remove one target vertex; surviving i-set labels are unchanged.

    Seed side: a new vertex adjacent to everything outside the doomed i-set
    kills exactly that i-set.
    """
    if r.target.n < 2:
        raise ValueError("target must be nontrivial")
    if not (0 <= x < r.target.n):
        raise ValueError(f"target vertex {x} out of range")
    mapping_old = _cert_by_set(r)
    doomed = next(s for s, t in mapping_old.items() if t == x)
    z = r.seed.n
    doomed_set = set(doomed)
    edges = r.seed.edges() + [(u, z) for u in range(r.seed.n) if u not in doomed_set]
    seed = Graph.from_edges(z + 1, edges)
    target, idx = induced_subgraph(r.target, [v for v in range(r.target.n) if v != x])
    mapping = {s: idx[t] for s, t in mapping_old.items() if s != doomed}
    steps = r.steps + (RecipeStep("delete_target_vertex", {"vertex": x, "blocker": z}),)
    return _certify(seed, target, mapping, steps)


def _restrict_target(r: SeedRecipe, keep: Iterable[int]) -> SeedRecipe:
    kept = sorted(set(keep))
    drop = [v for v in range(r.target.n) if v not in kept]
    for v in sorted(drop, reverse=True):
        r = delete_vertex_from_target(r, v)
    return r


def identify_vertices_target(
    r1: SeedRecipe, x: int, r2: SeedRecipe, y: int
) -> SeedRecipe:
    """One-point union of the targets, glueing ``x`` of ``r1`` onto ``y`` of ``r2``.

    Runs through the box product of the two targets and deletes everything
    outside the cross through (x, y).  Final numbering: r1's target keeps
    its labels, r2's target (minus ``y``) follows in id order.
    """
    n1, n2 = r1.target.n, r2.target.n
    if not (0 <= x < n1):
        raise ValueError(f"target vertex {x} out of range")
    if not (0 <= y < n2):
        raise ValueError(f"target vertex {y} out of range")
    k = max(_i_number(r1.seed), _i_number(r2.seed), 2)
    rc = seed_cartesian(inflate(r1, k), inflate(r2, k))
    keep = {a * n2 + y for a in range(n1)} | {x * n2 + b for b in range(n2)}
    r = _restrict_target(rc, keep)
    perm = []
    for pid in sorted(keep):
        a, b = divmod(pid, n2)
        if b == y:
            perm.append(a)
        else:
            perm.append(n1 + (b if b < y else b - 1))
    r = _relabel_target(r, perm, "relabel_one_point_union")
    expected = _fuse_targets(r1.target, x, r2.target, y)
    if r.target != expected:
        raise CertificationError("one-point union has unexpected adjacency")
    steps = r.steps + (RecipeStep("vertex_identification", {"x": x, "y": y}),)
    return SeedRecipe(r.seed, r.target, steps, r.certificate)


def _fuse_targets(t1: Graph, x: int, t2: Graph, y: int) -> Graph:
    def rename(b: int) -> int:
        if b == y:
            return x
        return t1.n + (b if b < y else b - 1)

    edges = t1.edges() + [(rename(u), rename(v)) for u, v in t2.edges()]
    return Graph.from_edges(t1.n + t2.n - 1, edges)


def bridge_targets(r1: SeedRecipe, x: int, r2: SeedRecipe, y: int) -> SeedRecipe:
    """Join the targets by the single edge (x of r1) -- (y of r2).

    Numbering: r1's target keeps its labels, r2's target follows shifted by
    ``r1.target.n``, so the bridge is (x, r1.target.n + y).
    """
    n1, n2 = r1.target.n, r2.target.n
    if not (0 <= x < n1):
        raise ValueError(f"target vertex {x} out of range")
    if not (0 <= y < n2):
        raise ValueError(f"target vertex {y} out of range")
    mid = identify_vertices_target(r1, x, seed_complete(2), 0)
    out = identify_vertices_target(mid, n1, r2, y)
    # current labels: r1 block unchanged, bridge head at n1, r2-minus-y after it
    perm = []
    for cur in range(out.target.n):
        if cur < n1:
            perm.append(cur)
        elif cur == n1:
            perm.append(n1 + y)
        else:
            b = cur - n1 - 1
            perm.append(n1 + (b if b < y else b + 1))
    out = _relabel_target(out, perm, "relabel_bridged_union")
    expected = Graph.from_edges(
        n1 + n2,
        r1.target.edges()
        + [(n1 + u, n1 + v) for u, v in r2.target.edges()]
        + [(x, n1 + y)],
    )
    if out.target != expected:
        raise CertificationError("bridged union has unexpected adjacency")
    steps = out.steps + (RecipeStep("bridge", {"x": x, "y": y}),)
    return SeedRecipe(out.seed, out.target, steps, out.certificate)


def clique_bridge_targets(
    r1: SeedRecipe, x: int, r2: SeedRecipe, y: int, m: int
) -> SeedRecipe:
    """Connect the targets by a clique K_m whose two anchors are x and y."""
    if m < 2:
        raise ValueError("clique bridge needs m >= 2")
    r = bridge_targets(r1, x, r2, y)
    anchors = [x, r1.target.n + y]
    for _ in range(m - 2):
        r = max_clique_replace(r, anchors)
        anchors.append(r.target.n - 1)
    return r


def delete_bridge_from_target(r: SeedRecipe, e: tuple[int, int]) -> SeedRecipe:
    """Remove a bridge edge from the target, keeping every vertex."""
    a, b = sorted(e)
    if not r.target.has_edge(a, b):
        raise ValueError(f"({a},{b}) is not an edge of the target")
    if (a, b) not in bridges(r.target):
        raise ValueError(f"({a},{b}) is not a bridge of the target")
    cut = Graph.from_edges(
        r.target.n, [ed for ed in r.target.edges() if ed != (a, b)]
    )
    side_a = next(c for c in connected_components(cut) if a in c)
    side_rest = [v for v in range(r.target.n) if v not in set(side_a)]
    ra = _restrict_target(r, side_a)
    rb = _restrict_target(r, side_rest)
    out = seed_union(ra, rb)
    order = sorted(side_a) + sorted(side_rest)
    perm = [0] * len(order)
    for cur, orig in enumerate(order):
        perm[cur] = orig
    out = _relabel_target(out, perm, "relabel_bridge_deletion")
    if out.target != cut:
        raise CertificationError("bridge deletion has unexpected adjacency")
    steps = out.steps + (RecipeStep("delete_bridge", {"edge": [a, b]}),)
    return SeedRecipe(out.seed, out.target, steps, out.certificate)


# ---------------------------------------------------------------------------
# block graphs, unicyclic graphs, cacti


def _validate_blocks(h: Graph, allow: str) -> list[frozenset[int]]:
    blocks, _ = blocks_and_cut_vertices(h)
    for blk in blocks:
        if len(blk) <= 2:
            continue
        sub, _ = induced_subgraph(h, blk)
        if allow == "clique":
            if sub.edge_count() != len(blk) * (len(blk) - 1) // 2:
                raise ValueError("not a block graph: a block is not a clique")
        else:
            if any(sub.degree(v) != 2 for v in range(sub.n)):
                raise ValueError("not a cactus: a block is neither an edge nor a cycle")
    return blocks


def _distances_from(h: Graph, src: int) -> list[int]:
    dist = [-1] * h.n
    dist[src] = 0
    queue = [src]
    while queue:
        v = queue.pop(0)
        for u in h.neighbors(v):
            if dist[u] == -1:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _block_construction(h: Graph) -> SeedRecipe:
    """Seed a connected block graph: one disjoint clique per block, plus
    three length-two paths between every pair of copies of a cut vertex."""
    blocks = sorted(_validate_blocks(h, "clique"), key=lambda b: tuple(sorted(b)))
    vid: dict[tuple[int, int], int] = {}
    nxt = 0
    edges: list[tuple[int, int]] = []
    for bi, blk in enumerate(blocks):
        members = sorted(blk)
        for v in members:
            vid[(bi, v)] = nxt
            nxt += 1
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                edges.append((vid[(bi, members[i])], vid[(bi, members[j])]))
    holders: dict[int, list[int]] = {}
    for bi, blk in enumerate(blocks):
        for v in blk:
            holders.setdefault(v, []).append(bi)
    gadget_count = 0
    for v in sorted(holders):
        bis = holders[v]
        for i in range(len(bis)):
            for j in range(i + 1, len(bis)):
                wi, wj = vid[(bis[i], v)], vid[(bis[j], v)]
                for _ in range(3):
                    edges.append((wi, nxt))
                    edges.append((wj, nxt))
                    nxt += 1
                    gadget_count += 1
    seed = Graph.from_edges(nxt, edges)
    mapping: dict[tuple[int, ...], int] = {}
    for u in range(h.n):
        dist = _distances_from(h, u)
        token: list[int] = []
        for bi, blk in enumerate(blocks):
            closest = sorted(blk, key=lambda v: (dist[v], v))
            if len(closest) > 1 and dist[closest[0]] == dist[closest[1]]:
                raise CertificationError("ambiguous projection onto a block")
            token.append(vid[(bi, closest[0])])
        mapping[tuple(sorted(token))] = u
    steps = [
        RecipeStep(
            "clique_blocks_with_path_gadgets",
            {"blocks": [sorted(b) for b in blocks], "gadgets": gadget_count},
        )
    ]
    return _certify(seed, h, mapping, steps)


def seed_block_graph(h: Graph) -> SeedRecipe:
    """Certified recipe for any graph all of whose blocks are cliques."""
    if h.n == 0:
        raise ValueError("graph must be nonempty")
    _validate_blocks(h, "clique")
    comps = connected_components(h)
    if len(comps) == 1:
        return _block_construction(h)
    parts = []
    for comp in comps:
        sub, _ = induced_subgraph(h, comp)
        parts.append(_block_construction(sub))
    r = parts[0]
    for part in parts[1:]:
        r = seed_union(r, part)
    order = [v for comp in comps for v in sorted(comp)]
    perm = [0] * h.n
    for cur, orig in enumerate(order):
        perm[cur] = orig
    r = _relabel_target(r, perm, "relabel_to_input")
    if r.target != h:
        raise CertificationError("block graph reconstruction does not match the input")
    return r


def _cycle_block_recipe(h: Graph, blk: frozenset[int]) -> tuple[SeedRecipe, dict[int, int]]:
    members = sorted(blk)
    if len(blk) == 1:
        return seed_complete(1), {members[0]: 0}
    if len(blk) == 2:
        return seed_complete(2), {members[0]: 0, members[1]: 1}
    sub, idx = induced_subgraph(h, blk)
    start = 0
    walk = [start]
    prev = -1
    cur = start
    while len(walk) < sub.n:
        nbrs = [u for u in sub.neighbors(cur) if u != prev]
        nxt = min(nbrs)
        walk.append(nxt)
        prev, cur = cur, nxt
    pos_of = {v: i for i, v in enumerate(walk)}
    inv = {new: old for old, new in idx.items()}
    return seed_cycle(sub.n), {inv[v]: pos_of[v] for v in range(sub.n)}


def _cactus_component(h: Graph) -> tuple[SeedRecipe, dict[int, int]]:
    blocks = sorted(_validate_blocks(h, "cycle_or_edge"), key=lambda b: tuple(sorted(b)))
    if len(blocks) == 1:
        return _cycle_block_recipe(h, blocks[0])
    placed: set[int] = set()
    remaining = list(range(len(blocks)))
    root = remaining.pop(0)
    acc, amap = _cycle_block_recipe(h, blocks[root])
    placed |= blocks[root]
    while remaining:
        pick = None
        glue = None
        for bi in remaining:
            shared = sorted(blocks[bi] & placed)
            if shared:
                pick, glue = bi, shared[0]
                break
        if pick is None:
            raise CertificationError("block-cut structure is not connected")
        remaining.remove(pick)
        rb, bmap = _cycle_block_recipe(h, blocks[pick])
        na = acc.target.n
        acc = identify_vertices_target(acc, amap[glue], rb, bmap[glue])
        for v in sorted(blocks[pick]):
            if v == glue:
                continue
            local = bmap[v]
            amap[v] = na + (local if local < bmap[glue] else local - 1)
        placed |= blocks[pick]
    return acc, amap


def seed_cactus(h: Graph) -> SeedRecipe:
    """Certified recipe for a graph whose blocks are all cycles or edges."""
    if h.n == 0:
        raise ValueError("graph must be nonempty")
    _validate_blocks(h, "cycle_or_edge")
    comps = connected_components(h)
    parts: list[tuple[SeedRecipe, dict[int, int]]] = []
    for comp in comps:
        sub, idx = induced_subgraph(h, comp)
        rec, local = _cactus_component(sub)
        inv = {new: old for old, new in idx.items()}
        parts.append((rec, {inv[v]: t for v, t in local.items()}))
    r, vmap = parts[0]
    for rec, local in parts[1:]:
        shift = r.target.n
        r = seed_union(r, rec)
        vmap = dict(vmap)
        vmap.update({v: shift + t for v, t in local.items()})
    perm = [0] * h.n
    for v, t in vmap.items():
        perm[t] = v
    r = _relabel_target(r, perm, "relabel_to_input")
    if r.target != h:
        raise CertificationError("cactus reconstruction does not match the input")
    return r


def seed_unicyclic(h: Graph) -> SeedRecipe:
    """Certified recipe for a graph containing exactly one cycle."""
    if cyclomatic_number(h) != 1:
        raise ValueError("input does not contain exactly one cycle")
    return seed_cactus(h)


# ---------------------------------------------------------------------------
# JSON interchange


def recipe_to_json(r: SeedRecipe) -> dict:
    return {
        "seed": emit_graph6(r.seed),
        "target": emit_graph6(r.target),
        "steps": [s.to_json() for s in r.steps],
        "certificate": list(r.certificate),
    }


def recipe_from_json(data: dict) -> SeedRecipe:
    return SeedRecipe(
        parse_graph6(data["seed"]),
        parse_graph6(data["target"]),
        tuple(RecipeStep(s["rule"], s["params"]) for s in data["steps"]),
        tuple(data["certificate"]),
    )


def recipe_json_text(r: SeedRecipe) -> str:
    return json.dumps(recipe_to_json(r), sort_keys=True, separators=(",", ":"))
