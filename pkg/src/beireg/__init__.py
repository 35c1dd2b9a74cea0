"""Castelnuovo-Mumford regularity bounds for binomial edge ideals of trees
and block graphs: combinatorial certification rules with full provenance,
cross-checked by an exact Groebner/Betti oracle over F_p at small scale.
"""

from .betti import (BettiTable, HilbertResult, RegularityResult,
                    betti_hochster, betti_koszul, hilbert_numerator,
                    regularity)
from .corpus import (block_graph_corpus, build_figure_graphs,
                     glue_pair_corpus, tree_corpus)
from .graphs import (Graph, GraphError, GraphFormatError, add_pendant,
                     complete_graph, components, disjoint_union, glue, graph,
                     induced_subgraph, is_connected, is_tree, parse_graph,
                     path_graph, relabel, serialize_graph, split, star_graph)
from .groebner import (AlgebraError, GroebnerBasis, Monomial, PolyRing,
                       Polynomial, buchberger, graph_groebner_basis)
from .records import (RecordError, ResultRecord, append_record, build_record,
                      compute_invariants, load_index)
from .rules import (RegularityInterval, RuleApplication,
                    RuleInconsistencyError, apply_all_rules,
                    lobster_spine_report)
from .structure import (blocks_and_cut_vertices, clique_count, cut_vertices,
                        free_vertices, is_block_graph, maximal_cliques)
from .taxonomy import (SpineDecomposition, TreeProfile, build_jewel,
                       classify_tree, is_caterpillar, is_lobster,
                       pathclique_decompose, spine_decompositions)
from .trees import (canonical_code, canonical_graph, contains_subtree,
                    enumerate_trees, tree_catalog)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BettiTable",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "GroebnerBasis",
    "HilbertResult",
    "Monomial",
    "PolyRing",
    "Polynomial",
    "RecordError",
    "RegularityInterval",
    "RegularityResult",
    "ResultRecord",
    "RuleApplication",
    "RuleInconsistencyError",
    "SpineDecomposition",
    "TreeProfile",
    "add_pendant",
    "append_record",
    "apply_all_rules",
    "betti_hochster",
    "betti_koszul",
    "block_graph_corpus",
    "blocks_and_cut_vertices",
    "buchberger",
    "build_figure_graphs",
    "build_jewel",
    "build_record",
    "canonical_code",
    "canonical_graph",
    "classify_tree",
    "clique_count",
    "complete_graph",
    "components",
    "compute_invariants",
    "contains_subtree",
    "cut_vertices",
    "disjoint_union",
    "enumerate_trees",
    "free_vertices",
    "glue",
    "glue_pair_corpus",
    "graph",
    "graph_groebner_basis",
    "hilbert_numerator",
    "induced_subgraph",
    "is_block_graph",
    "is_caterpillar",
    "is_connected",
    "is_lobster",
    "is_tree",
    "load_index",
    "lobster_spine_report",
    "maximal_cliques",
    "parse_graph",
    "path_graph",
    "pathclique_decompose",
    "regularity",
    "relabel",
    "serialize_graph",
    "spine_decompositions",
    "split",
    "star_graph",
    "tree_catalog",
    "tree_corpus",
]
