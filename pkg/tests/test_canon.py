import itertools
import random

import pytest
from hypothesis import given

import helpers
from igraphkit.canon import (
    canonical_form,
    canonical_key,
    find_induced_copy,
    find_isomorphism,
)
from igraphkit.graphs import (
    Graph,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    induced_subgraph,
    join,
    path,
    star,
    theta,
)


def all_labelled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for picks in itertools.product((0, 1), repeat=len(pairs)):
        yield Graph.from_edges(n, [e for e, keep in zip(pairs, picks) if keep])


class TestCanonicalForm:
    def test_reversed_cycle(self):
        assert canonical_form(cycle(5)) == canonical_form(cycle(5).relabel([4, 3, 2, 1, 0]))

    def test_star_vs_path(self):
        assert canonical_form(star(3)) != canonical_form(path(4))

    def test_class_counts_small(self):
        # dedup every labelled graph by canonical form
        for n, expected in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)]:
            forms = {canonical_key(g) for g in all_labelled_graphs(n)}
            assert len(forms) == expected, n

    def test_four_vertex_classes_match_permutation_oracle(self):
        # independent dedup by trying all permutations
        reps = []
        for g in all_labelled_graphs(4):
            if all(helpers.brute_isomorphism(g, r) is None for r in reps):
                reps.append(g)
        assert len(reps) == 11
        assert len({canonical_key(r) for r in reps}) == 11

    @given(helpers.graphs(max_n=7))
    def test_permutation_invariance(self, g):
        rng = random.Random(g.edge_count() * 31 + g.n)
        assert canonical_key(g) == canonical_key(helpers.relabelled(rng, g))

    def test_200_isomorphic_pairs_agree(self):
        rng = random.Random(11)
        for _ in range(200):
            g = helpers.random_graph(rng, rng.randint(1, 8), rng.random())
            assert canonical_key(g) == canonical_key(helpers.relabelled(rng, g))

    def test_200_certified_distinct_pairs_differ(self):
        rng = random.Random(12)
        found = 0
        while found < 200:
            g = helpers.random_graph(rng, rng.randint(1, 8), rng.random())
            h = helpers.random_graph(rng, rng.randint(1, 8), rng.random())
            # certified non-isomorphic by a differing cheap invariant
            if g.n == h.n and g.degree_sequence() == h.degree_sequence():
                continue
            assert canonical_key(g) != canonical_key(h)
            found += 1


class TestFindIsomorphism:
    def test_relabelled_triangle(self):
        m = find_isomorphism(complete(3), complete(3).relabel([2, 0, 1]))
        assert m is not None

    def test_prism_vs_c6(self):
        assert find_isomorphism(cartesian_product(complete(2), complete(3)), cycle(6)) is None

    def test_theta122_vs_k4_minus_edge(self):
        diamond = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        m = find_isomorphism(theta(1, 2, 2), diamond)
        assert m is not None
        assert helpers.brute_isomorphism(theta(1, 2, 2), diamond) is not None

    @given(helpers.graphs(max_n=7))
    def test_returned_map_is_sound(self, g):
        rng = random.Random(g.n * 1000 + g.edge_count())
        h = helpers.relabelled(rng, g)
        m = find_isomorphism(g, h)
        assert m is not None
        for u, v in itertools.combinations(range(g.n), 2):
            assert g.has_edge(u, v) == h.has_edge(m[u], m[v])

    @given(helpers.graphs(max_n=6), helpers.graphs(max_n=6))
    def test_agrees_with_permutation_oracle(self, g, h):
        ours = find_isomorphism(g, h)
        brute = helpers.brute_isomorphism(g, h)
        assert (ours is None) == (brute is None)

    def test_hypercubes(self):
        q4a = cartesian_product(
            cartesian_product(complete(2), complete(2)),
            cartesian_product(complete(2), complete(2)),
        )
        q4b = cartesian_product(
            complete(2),
            cartesian_product(complete(2), cartesian_product(complete(2), complete(2))),
        )
        assert find_isomorphism(q4a, q4b) is not None


class TestFindInducedCopy:
    def test_wheel_contains_diamond(self):
        wheel = Graph.from_edges(
            6, [(0, v) for v in range(1, 6)] + [(v, v % 5 + 1) for v in range(1, 6)]
        )
        hit = find_induced_copy(wheel, theta(1, 2, 2))
        assert hit is not None
        sub = [
            (u, v) for u, v in itertools.combinations(hit, 2) if wheel.has_edge(u, v)
        ]
        assert len(sub) == 5

    def test_c6_has_no_diamond(self):
        assert find_induced_copy(cycle(6), theta(1, 2, 2)) is None

    def test_k23_in_itself(self):
        assert find_induced_copy(complete_bipartite(2, 3), complete_bipartite(2, 3)) == (
            0,
            1,
            2,
            3,
            4,
        )

    def test_non_induced_subgraph_is_rejected(self):
        # K4 contains C4 as a subgraph but not as an induced one
        assert find_induced_copy(complete(4), cycle(4)) is None

    def test_pattern_larger_than_host(self):
        with pytest.raises(ValueError):
            find_induced_copy(complete(2), complete(3))

    def test_found_copy_is_induced(self):
        host = join(cycle(4), complete(1))
        hit = find_induced_copy(host, theta(1, 2, 2))
        assert hit is not None
        sub, _ = induced_subgraph(host, hit)
        assert helpers.brute_isomorphism(sub, theta(1, 2, 2)) is not None
