import pytest

import helpers
from igraphkit.canon import canonical_key
from igraphkit.graphs import (
    Graph,
    complete_bipartite,
    cycle,
    induced_subgraph,
    path,
    star,
    theta,
)
from igraphkit.recipes import verify_recipe
from igraphkit.search import (
    OBSTRUCTIONS,
    find_obstruction,
    generate_nonisomorphic,
    outcome_to_json,
    search_seed,
)

KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


class TestGeneration:
    def test_counts(self, corpus6):
        for n in range(1, 7):
            assert len(corpus6[n]) == KNOWN_COUNTS[n]

    def test_representatives_are_pairwise_distinct(self, corpus6):
        for n in range(1, 6):
            keys = [canonical_key(g) for g in corpus6[n]]
            assert len(set(keys)) == len(keys)

    def test_exhaustive_against_permutation_oracle(self, corpus6):
        # every 4-vertex graph is isomorphic to exactly one representative
        reps = corpus6[4]
        import itertools

        pairs = list(itertools.combinations(range(4), 2))
        for picks in itertools.product((0, 1), repeat=6):
            g = Graph.from_edges(4, [e for e, keep in zip(pairs, picks) if keep])
            matches = [r for r in reps if helpers.brute_isomorphism(g, r) is not None]
            assert len(matches) == 1

    def test_deterministic_order(self):
        a = [canonical_key(g) for g in generate_nonisomorphic(5)]
        b = [canonical_key(g) for g in generate_nonisomorphic(5)]
        assert a == b

    @pytest.mark.parametrize("n", [0, 9])
    def test_range(self, n):
        with pytest.raises(ValueError):
            generate_nonisomorphic(n)


class TestObstructions:
    def test_wheel_hits_diamond(self):
        wheel = Graph.from_edges(
            6, [(0, v) for v in range(1, 6)] + [(v, v % 5 + 1) for v in range(1, 6)]
        )
        hit = find_obstruction(wheel)
        assert hit is not None and hit[0] == "diamond"

    def test_trees_are_clean(self):
        for t in (path(5), star(4)):
            assert find_obstruction(t) is None

    def test_theta223_hits_itself(self):
        name, verts = find_obstruction(theta(2, 2, 3))
        assert name == "theta_2_2_3"
        assert verts == tuple(range(6))

    def test_k23_hits(self):
        name, verts = find_obstruction(complete_bipartite(2, 3))
        assert name == "k23"

    def test_hit_really_is_induced(self):
        host = Graph.from_edges(
            7,
            [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)],
        )
        hit = find_obstruction(host)
        assert hit is not None
        name, verts = hit
        pattern = dict(OBSTRUCTIONS)[name]
        sub, _ = induced_subgraph(host, verts)
        assert helpers.brute_isomorphism(sub, pattern) is not None


class TestSearch:
    def test_point_target(self):
        out = search_seed(Graph(1, (0,)), 3)
        assert out.found
        assert out.witness.seed.n == 1

    def test_c4_is_found(self):
        out = search_seed(cycle(4), 4)
        assert out.found
        verify_recipe(out.witness)

    def test_diamond_exhausts(self):
        out = search_seed(theta(1, 2, 2), 5)
        assert not out.found
        assert out.examined == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}

    def test_pruning_changes_nothing(self):
        for target, bound in [(theta(1, 2, 2), 5), (cycle(4), 4), (path(3), 4)]:
            a = search_seed(target, bound, prune=True)
            b = search_seed(target, bound, prune=False)
            assert outcome_to_json(a) == outcome_to_json(b)

    def test_obstruction_implies_exhaustion(self):
        for target in (theta(1, 2, 2), complete_bipartite(2, 3)):
            assert find_obstruction(target) is not None
            assert not search_seed(target, 4).found

    def test_bounds(self):
        with pytest.raises(ValueError):
            search_seed(cycle(4), 0)
        with pytest.raises(ValueError):
            search_seed(cycle(4), 9)

    def test_outcome_json(self):
        out = search_seed(cycle(4), 4)
        data = outcome_to_json(out)
        assert data["result"] == "found"
        assert "witness" in data
        out = search_seed(theta(1, 2, 2), 4)
        data = outcome_to_json(out)
        assert data["result"] == "exhausted"
        assert "witness" not in data

    def test_parallel_matches_sequential(self):
        for target, bound in [(cycle(4), 4), (theta(1, 2, 2), 4)]:
            seq = search_seed(target, bound, jobs=1)
            par = search_seed(target, bound, jobs=2)
            assert outcome_to_json(seq) == outcome_to_json(par)
