"""Reconfiguration graphs of minimum independent dominating sets.

Compute the token-slide reconfiguration graph of any small graph, realise
target graphs through certified seed recipes, and verify non-realizability
by bounded exhaustive search.
"""

from .graphs import (
    Graph,
    GraphFormatError,
    build_family,
    cartesian_product,
    combine,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    emit_graph6,
    empty_graph,
    house,
    induced_subgraph,
    join,
    k13_gadget,
    parse_graph6,
    path,
    star,
    theta,
)
from .canon import (
    CanonicalForm,
    canonical_form,
    canonical_key,
    find_induced_copy,
    find_isomorphism,
)
from .domination import (
    ISetCatalog,
    enumerate_isets,
    is_dominating,
    is_independent,
    private_neighborhood,
)
from .reconf import (
    IGraph,
    build_igraph,
    build_jump_graph,
    frozen_tokens,
    igraph_from_json,
    igraph_to_json,
)
from .recipes import (
    CertificationError,
    RecipeStep,
    SeedRecipe,
    add_isolated_to_target,
    add_pendant_to_target,
    attach_k13,
    bridge_targets,
    clique_bridge_targets,
    delete_bridge_from_target,
    delete_vertex_from_target,
    epn_normalize,
    identify_vertices_target,
    inflate,
    max_clique_replace,
    recipe_from_json,
    recipe_to_json,
    seed_basic,
    seed_block_graph,
    seed_cactus,
    seed_cartesian,
    seed_complete,
    seed_cycle,
    seed_forest,
    seed_house,
    seed_hypercube,
    seed_union,
    seed_unicyclic,
    verify_recipe,
)
from .search import (
    OBSTRUCTIONS,
    SearchOutcome,
    find_obstruction,
    generate_nonisomorphic,
    outcome_to_json,
    search_seed,
)

__all__ = [name for name in dir() if not name.startswith("_")]
